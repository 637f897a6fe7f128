#include "npierce/pq_pipeline.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "npierce/embedded_graph.hpp"
#include "npierce/errors.hpp"
#include "npierce/rng.hpp"

namespace npierce {

namespace {

// Elements whose containing-set list is maximal under inclusion; the packing
// constraint of any other element is implied by one of these.
std::vector<int> maximal_elements(const SetFamily& family) {
  std::map<std::vector<int>, int> by_trace;
  for (int e = 0; e < static_cast<int>(family.universe_size()); ++e) {
    auto c = family.containing(e);
    if (c.empty()) continue;
    by_trace.emplace(std::vector<int>(c.begin(), c.end()), e);
  }
  std::vector<std::pair<std::vector<int>, int>> traces(by_trace.begin(), by_trace.end());
  std::vector<int> out;
  for (std::size_t a = 0; a < traces.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < traces.size() && !dominated; ++b) {
      if (a == b || traces[b].first.size() <= traces[a].first.size()) continue;
      dominated = std::includes(traces[b].first.begin(), traces[b].first.end(),
                                traces[a].first.begin(), traces[a].first.end());
    }
    if (!dominated) out.push_back(traces[a].second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FractionalPiercing fractional_piercing_exact(const SetFamily& family) {
  FractionalPiercing res;
  res.exact = true;
  res.weights.assign(family.universe_size(), 0.0);
  res.packing.assign(family.size(), 0.0);
  if (family.empty()) {
    res.tau_star_rational = "0";
    return res;
  }
  // Packing LP in tableau form: max sum y_S  s.t.  sum_{S ∋ e} y_S <= 1.
  // Columns 0..n-1 are sets, n..n+m-1 slacks. Bland's rule, so no cycling.
  const std::vector<int> rows = maximal_elements(family);
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(family.size());
  const int cols = n + m;
  std::vector<std::vector<mpq_class>> tab(m + 1, std::vector<mpq_class>(cols + 1, 0));
  for (int i = 0; i < m; ++i) {
    for (int s : family.containing(rows[i])) tab[i][s] = 1;
    tab[i][n + i] = 1;
    tab[i][cols] = 1;
  }
  for (int j = 0; j < n; ++j) tab[m][j] = -1;
  std::vector<int> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (sgn(tab[m][j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      mpq_class r = tab[i][cols] / tab[i][enter];
      if (leave < 0 || r < best_ratio || (r == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = r;
      }
    }
    if (leave < 0) throw InvalidInput("packing LP unbounded");  // cannot happen: y_S <= 1
    const mpq_class piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const mpq_class f = tab[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  const mpq_class value = tab[m][cols];
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) res.packing[basis[i]] = tab[i][cols].get_d();
    res.weights[rows[i]] = tab[m][n + i].get_d();  // dual value of row i
  }
  res.tau_star = value.get_d();
  res.nu_star = res.tau_star;
  res.tau_star_rational = value.get_str();
  return res;
}

FractionalPiercing fractional_piercing_approx(const SetFamily& family, const LpOptions& options) {
  // Multiplicative weights on the packing LP. At every step the normalised
  // lengths form a feasible cover, and the accumulated packing scaled by its
  // maximum load is a feasible packing, so both ends stay certified.
  FractionalPiercing res;
  res.weights.assign(family.universe_size(), 0.0);
  res.packing.assign(family.size(), 0.0);
  if (family.empty()) return res;
  const std::vector<int> elems = maximal_elements(family);
  const int m = static_cast<int>(elems.size());
  const int n = static_cast<int>(family.size());
  std::vector<int> row_of(family.universe_size(), -1);
  for (int i = 0; i < m; ++i) row_of[elems[i]] = i;
  std::vector<std::vector<int>> set_rows(n);
  for (int i = 0; i < m; ++i)
    for (int s : family.containing(elems[i])) set_rows[s].push_back(i);

  const double eps = 0.05;
  std::vector<double> len(m, 1.0);
  std::vector<double> load(m, 0.0);
  std::vector<double> y(n, 0.0);
  double best_cover = std::numeric_limits<double>::infinity();
  std::vector<double> best_w;
  for (std::uint64_t it = 0; it < options.max_iterations; ++it) {
    int arg = 0;
    double min_len = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
      double l = 0;
      for (int i : set_rows[s]) l += len[i];
      if (l < min_len) {
        min_len = l;
        arg = s;
      }
    }
    const double total = std::accumulate(len.begin(), len.end(), 0.0);
    if (total / min_len < best_cover) {
      best_cover = total / min_len;
      best_w = len;
      for (double& w : best_w) w /= min_len;
    }
    y[arg] += 1.0;
    for (int i : set_rows[arg]) {
      load[i] += 1.0;
      len[i] *= 1.0 + eps;
    }
    const double max_load = *std::max_element(load.begin(), load.end());
    const double packed = std::accumulate(y.begin(), y.end(), 0.0) / max_load;
    if (packed > res.nu_star) {
      res.nu_star = packed;
      for (int s = 0; s < n; ++s) res.packing[s] = y[s] / max_load;
    }
    if (best_cover - res.nu_star <= options.precision * std::max(1.0, best_cover)) break;
    // renormalise to keep the lengths finite
    if (*std::max_element(len.begin(), len.end()) > 1e200)
      for (double& l : len) l *= 1e-200;
  }
  for (int i = 0; i < m; ++i) res.weights[elems[i]] = best_w[i];
  res.tau_star = best_cover;
  res.precision_reached = best_cover - res.nu_star <= options.precision * std::max(1.0, best_cover);
  return res;
}

FractionalPiercing fractional_piercing(const SetFamily& family, const LpOptions& options) {
  if (family.universe_size() <= options.exact_max_universe && family.size() <= options.exact_max_sets)
    return fractional_piercing_exact(family);
  return fractional_piercing_approx(family, options);
}

namespace {

double set_weight(const SetFamily& family, std::size_t s, const std::vector<double>& weights) {
  double w = 0;
  for (int e : family.set(s)) w += weights[e];
  return w;
}

std::vector<int> heavy_sets(const SetFamily& family, const std::vector<double>& weights, double eps) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double threshold = eps * total - 1e-12;
  std::vector<int> out;
  for (std::size_t s = 0; s < family.size(); ++s)
    if (set_weight(family, s, weights) >= threshold) out.push_back(static_cast<int>(s));
  return out;
}

bool hits_sets(const SetFamily& family, const std::vector<int>& sets, const std::vector<int>& points) {
  std::vector<char> mark(family.universe_size(), 0);
  for (int p : points) mark[p] = 1;
  for (int s : sets) {
    bool hit = false;
    for (int e : family.set(s))
      if (mark[e]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_epsilon_net(const SetFamily& family, const std::vector<double>& weights, double eps,
                    const std::vector<int>& points) {
  return hits_sets(family, heavy_sets(family, weights, eps), points);
}

EpsilonNet epsilon_net(const SetFamily& family, const std::vector<double>& weights, double eps,
                       std::uint64_t seed, int sample_trials) {
  if (!(eps > 0 && eps <= 1)) throw InvalidInput("epsilon must lie in (0, 1]");
  if (weights.size() != family.universe_size()) throw InvalidInput("one weight per element required");
  for (double w : weights)
    if (!(w >= 0)) throw InvalidInput("weights must be nonnegative");
  EpsilonNet net;
  const auto heavy = heavy_sets(family, weights, eps);
  net.heavy_sets = static_cast<int>(heavy.size());

  std::vector<double> heavy_weight(family.size(), 0.0);
  for (int s : heavy) heavy_weight[s] = set_weight(family, s, weights);
  std::vector<char> open(family.size(), 0);
  for (int s : heavy) open[s] = 1;
  std::size_t remaining = heavy.size();
  while (remaining > 0) {
    int arg = -1;
    double best = -1;
    int best_count = 0;
    for (int e = 0; e < static_cast<int>(family.universe_size()); ++e) {
      double gain = 0;
      int count = 0;
      for (int s : family.containing(e))
        if (open[s]) {
          gain += heavy_weight[s];
          ++count;
        }
      if (count > 0 && (gain > best || (gain == best && count > best_count))) {
        best = gain;
        best_count = count;
        arg = e;
      }
    }
    net.points.push_back(arg);
    for (int s : family.containing(arg))
      if (open[s]) {
        open[s] = 0;
        --remaining;
      }
  }
  std::sort(net.points.begin(), net.points.end());

  // Weighted random draws, one point smaller than the current net each time.
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total > 0) {
    Rng rng(seed);
    for (int t = 0; t < sample_trials && net.points.size() > 1; ++t) {
      std::set<int> draw;
      const std::size_t want = net.points.size() - 1;
      for (std::size_t k = 0; k < 4 * want && draw.size() < want; ++k) {
        double r = rng.uniform() * total;
        int e = 0;
        while (e + 1 < static_cast<int>(weights.size()) && r >= weights[e]) r -= weights[e++];
        draw.insert(e);
      }
      std::vector<int> cand(draw.begin(), draw.end());
      if (hits_sets(family, heavy, cand)) {
        net.points = std::move(cand);
        net.from_sample = true;
      }
    }
  }
  return net;
}

PiercingCertificate pq_hitting_set(const SetFamily& family, std::uint64_t seed) {
  std::vector<int> points;
  std::vector<char> hit(family.size(), 0);
  std::vector<int> open(family.size());
  std::iota(open.begin(), open.end(), 0);
  for (std::uint64_t round = 0; !open.empty(); ++round) {
    SetFamily residual = family.subfamily(open);
    FractionalPiercing fp = fractional_piercing(residual);
    const double eps = std::min(1.0, 1.0 / (2.0 * fp.tau_star));
    EpsilonNet net = epsilon_net(residual, fp.weights, eps, splitmix64(seed + round));
    if (net.points.empty()) throw InvalidInput("epsilon net made no progress");
    points.insert(points.end(), net.points.begin(), net.points.end());
    std::vector<char> mark(family.universe_size(), 0);
    for (int p : points) mark[p] = 1;
    std::vector<int> next;
    for (int s : open) {
      bool h = false;
      for (int e : family.set(s)) h = h || mark[e];
      if (!h) next.push_back(s);
    }
    open.swap(next);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // drop redundant points, largest index first
  for (std::size_t k = points.size(); k-- > 0;) {
    std::vector<int> trial = points;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (hits_all(family, trial)) points.swap(trial);
  }
  return make_certificate(family, points, false);
}

int delaunay_edges_among(const SetFamily& family, const std::vector<char>& keep) {
  std::set<std::pair<int, int>> edges;
  for (int e = 0; e < static_cast<int>(family.universe_size()); ++e) {
    int first = -1;
    int second = -1;
    int count = 0;
    for (int s : family.containing(e)) {
      if (!keep[s]) continue;
      if (++count > 2) break;
      (count == 1 ? first : second) = s;
    }
    if (count == 2) edges.insert({first, second});
  }
  return static_cast<int>(edges.size());
}

namespace {

template <bool Parallel>
ExperimentStats run_experiment(const SetFamily& family, int q, std::uint64_t trials,
                               std::uint64_t seed, int genus, std::optional<int> nu) {
  if (q < 2) throw InvalidInput("q must be at least 2");
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  if (genus < 0) throw InvalidInput("genus must be nonnegative");
  if (family.empty()) throw InvalidInput("experiment needs a nonempty family");
  ExperimentStats st;
  st.p = static_cast<int>(family.size());
  st.q = q;
  st.genus = genus;
  st.trials = trials;
  st.seed = seed;
  st.nu = nu ? *nu : independence_number(family);
  st.per_trial.resize(trials);

  const double keep_p = 1.0 / q;
  auto trial = [&](std::uint64_t k) {
    Rng rng = Rng::stream(seed, k);
    std::vector<char> keep(family.size());
    int survivors = 0;
    for (auto& x : keep) {
      x = rng.bernoulli(keep_p) ? 1 : 0;
      survivors += x;
    }
    st.per_trial[k] = {survivors, delaunay_edges_among(family, keep)};
  };
  const auto count = static_cast<std::int64_t>(trials);
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) trial(static_cast<std::uint64_t>(k));
  } else {
    for (std::int64_t k = 0; k < count; ++k) trial(static_cast<std::uint64_t>(k));
  }

  // Aggregate in trial order so the parallel and serial paths agree bit for bit.
  double sum_s = 0;
  double sum_e = 0;
  for (const auto& r : st.per_trial) {
    sum_s += r.survivors;
    sum_e += r.edges;
  }
  const double nt = static_cast<double>(trials);
  st.mean_survivors = sum_s / nt;
  st.mean_edges = sum_e / nt;
  double ss = 0;
  for (const auto& r : st.per_trial) ss += (r.edges - st.mean_edges) * (r.edges - st.mean_edges);
  st.sd_edges = trials > 1 ? std::sqrt(ss / (nt - 1)) : 0.0;
  st.stderr_edges = st.sd_edges / std::sqrt(nt);

  const double p = st.p;
  st.lower_bound = st.nu > 0 ? std::exp(-1.0) * p * (p - 1) / ((st.nu + 1.0) * st.nu * q * q) : 0.0;
  st.upper_bound = 3.0 * p / q + (genus > 0 ? 6.0 * genus - 6.0 : 0.0);
  st.planar_certified = genus == 0 && is_planar(delaunay_graph(family));

  for (std::size_t k = 0; k < st.per_trial.size(); ++k) {
    const auto& r = st.per_trial[k];
    bool ok;
    if (genus == 0)
      ok = r.edges <= 3 * r.survivors;
    else
      ok = r.survivors < 3 || r.edges <= 3 * r.survivors - 6 + 6 * genus;
    if (!ok && st.trials_within_edge_bound) {
      st.trials_within_edge_bound = false;
      st.first_violating_trial = static_cast<int>(k);
    }
  }
  st.mean_above_lower = st.mean_edges >= st.lower_bound - 3.0 * st.stderr_edges;
  st.mean_below_upper = st.mean_edges <= st.upper_bound;
  return st;
}

}  // namespace

ExperimentStats clarkson_shor_experiment(const SetFamily& family, int q, std::uint64_t trials,
                                         std::uint64_t seed, int genus, std::optional<int> nu) {
  return run_experiment<true>(family, q, trials, seed, genus, nu);
}

ExperimentStats clarkson_shor_experiment_serial(const SetFamily& family, int q,
                                                std::uint64_t trials, std::uint64_t seed, int genus,
                                                std::optional<int> nu) {
  return run_experiment<false>(family, q, trials, seed, genus, nu);
}

}  // namespace npierce
