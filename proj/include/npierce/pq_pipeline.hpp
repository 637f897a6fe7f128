#pragma once

// Constructive (p,q) machinery: fractional piercing LP, epsilon-net rounding,
// bounded hitting sets, and the random-deletion Delaunay edge experiment.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npierce/setsystem.hpp"

namespace npierce {

struct FractionalPiercing {
  std::vector<double> weights;  // per universe element
  double tau_star = 0;          // sum of weights (upper end when approximate)
  double nu_star = 0;           // certified fractional packing value (lower end)
  std::vector<double> packing;  // per set
  bool exact = false;
  std::string tau_star_rational;  // "p/q" when exact
  bool precision_reached = true;
};

struct LpOptions {
  double precision = 1e-6;
  std::size_t exact_max_universe = 200;
  std::size_t exact_max_sets = 200;
  std::uint64_t max_iterations = 2'000'000;
};

// min sum w  s.t.  w(S) >= 1 for every set, w >= 0; and its dual packing.
FractionalPiercing fractional_piercing(const SetFamily& family, const LpOptions& options = {});
FractionalPiercing fractional_piercing_exact(const SetFamily& family);
FractionalPiercing fractional_piercing_approx(const SetFamily& family, const LpOptions& options = {});

struct EpsilonNet {
  std::vector<int> points;
  int heavy_sets = 0;
  bool from_sample = false;
};

// Hits every set whose weight is at least eps * total weight. Greedy by
// residual heavy weight; `sample_trials` random draws of a smaller size are
// tried afterwards and kept only when they verify.
EpsilonNet epsilon_net(const SetFamily& family, const std::vector<double>& weights, double eps,
                       std::uint64_t seed, int sample_trials = 0);

bool is_epsilon_net(const SetFamily& family, const std::vector<double>& weights, double eps,
                    const std::vector<int>& points);

// Fractional piercing then epsilon-nets with eps = 1/(2 tau*), repeated on
// the still-unhit sets.
PiercingCertificate pq_hitting_set(const SetFamily& family, std::uint64_t seed = 0);

struct TrialRecord {
  int survivors = 0;
  int edges = 0;
};

struct ExperimentStats {
  int p = 0;  // family size
  int q = 2;
  int nu = 0;
  int genus = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> per_trial;
  double mean_survivors = 0;
  double mean_edges = 0;
  double sd_edges = 0;
  double stderr_edges = 0;
  double lower_bound = 0;  // (1/e) p(p-1) / ((nu+1) nu q^2)
  double upper_bound = 0;  // 3 p/q, or 3 p/q - 6 + 6g
  bool planar_certified = false;  // full Delaunay graph passed the planarity test
  bool trials_within_edge_bound = true;
  int first_violating_trial = -1;
  bool mean_above_lower = false;  // mean >= lower - 3 stderr
  bool mean_below_upper = false;
};

// Each trial keeps every set independently with probability 1/q and counts
// Delaunay edges among the survivors. Trial k draws from stream (seed, k).
ExperimentStats clarkson_shor_experiment(const SetFamily& family, int q, std::uint64_t trials,
                                         std::uint64_t seed, int genus = 0,
                                         std::optional<int> nu = std::nullopt);
ExperimentStats clarkson_shor_experiment_serial(const SetFamily& family, int q,
                                                std::uint64_t trials, std::uint64_t seed,
                                                int genus = 0, std::optional<int> nu = std::nullopt);

// Delaunay edge count of the subfamily kept by `keep`.
int delaunay_edges_among(const SetFamily& family, const std::vector<char>& keep);

}  // namespace npierce
