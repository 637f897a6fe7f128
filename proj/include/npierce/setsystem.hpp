#pragma once

// Finite set systems: intersection structure, exact independence and
// piercing numbers, (p,q)-property, primal/dual VC dimension, Delaunay graph.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace npierce {

using SetMask = std::uint64_t;

// A ground set {0, ..., universe_size-1} of witness points and an ordered
// list of nonempty subsets. Indices of sets are stable and identify them in
// every report.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t universe_size, std::vector<std::vector<int>> sets,
            std::vector<std::string> labels = {});

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  std::span<const int> set(std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Sets containing the element, ascending.
  std::span<const int> containing(int element) const { return containing_[element]; }
  bool contains(std::size_t set_index, int element) const;
  bool intersects(std::size_t a, std::size_t b) const;

  // Bit i of trace(e) is set iff set i contains e. Requires size() <= 64.
  std::vector<SetMask> element_traces() const;

  // Subfamily with the given set indices, in the given order.
  SetFamily subfamily(std::span<const int> indices) const;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> containing_;
};

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<std::pair<int, int>> e);

  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

struct PiercingCertificate {
  std::vector<int> points;   // ascending universe indices
  std::vector<int> covered;  // per set: lowest point of `points` inside it
  bool optimal = false;

  std::size_t size() const { return points.size(); }
};

// Caps for the exact solvers. Counts of sets are bounded by the 64-bit mask
// representation regardless of configuration.
struct SolverLimits {
  std::size_t max_sets = 64;
  std::size_t max_universe = 256;      // after dominance reduction
  std::size_t max_vc_candidates = 24;  // distinct element traces for VC search
  std::uint64_t node_budget = 200'000'000;
  std::uint64_t subset_budget = 50'000'000;  // p-subsets in exhaustive (p,q) mode
};

SimpleGraph intersection_graph(const SetFamily& family);
SimpleGraph intersection_graph_serial(const SetFamily& family);

int independence_number(const SetFamily& family, const SolverLimits& limits = {});

PiercingCertificate min_piercing(const SetFamily& family, const SolverLimits& limits = {});

// Certificate for `points`; throws InvalidInput if some set is missed.
PiercingCertificate make_certificate(const SetFamily& family, std::vector<int> points,
                                     bool optimal);
bool hits_all(const SetFamily& family, std::span<const int> points);

struct PqMode {
  enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static PqMode exhaustive() { return {}; }
  static PqMode sampled(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::sampled, trials, seed};
  }
};

struct PqVerdict {
  bool holds = true;
  bool exhaustive = true;            // false: "no counterexample in `checked` samples"
  std::vector<int> witness;          // violating p-subset when !holds
  std::uint64_t checked = 0;
};

PqVerdict has_pq_property(const SetFamily& family, int p, int q, PqMode mode = PqMode::exhaustive(),
                          const SolverLimits& limits = {});

int vc_dimension(const SetFamily& family, const SolverLimits& limits = {});
int dual_vc_dimension(const SetFamily& family, const SolverLimits& limits = {});

// Shattering search over an explicit range space: `ranges[k]` lists the points
// (in [0, point_count)) of range k. Both VC routes reduce to this.
int shatter_dimension(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                      const SolverLimits& limits = {});
int shatter_dimension_serial(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                             const SolverLimits& limits = {});

// Edge (i,j) iff some element lies in exactly sets i and j.
SimpleGraph delaunay_graph(const SetFamily& family);

}  // namespace npierce
