#include "npierce/setsystem.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "npierce/errors.hpp"
#include "npierce/rng.hpp"

namespace npierce {

SetFamily::SetFamily(std::size_t universe_size, std::vector<std::vector<int>> sets,
                     std::vector<std::string> labels)
    : universe_size_(universe_size), sets_(std::move(sets)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != sets_.size())
    throw InvalidInput("label count does not match set count");
  containing_.assign(universe_size_, {});
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    if (s.empty()) throw InvalidInput("set " + std::to_string(i) + " is empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int e : s) {
      if (e < 0 || static_cast<std::size_t>(e) >= universe_size_)
        throw InvalidInput("set " + std::to_string(i) + " has element " + std::to_string(e) +
                           " outside universe of size " + std::to_string(universe_size_));
      containing_[e].push_back(static_cast<int>(i));
    }
  }
}

bool SetFamily::contains(std::size_t set_index, int element) const {
  const auto& s = sets_[set_index];
  return std::binary_search(s.begin(), s.end(), element);
}

bool SetFamily::intersects(std::size_t a, std::size_t b) const {
  const auto& x = sets_[a];
  const auto& y = sets_[b];
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<SetMask> SetFamily::element_traces() const {
  if (sets_.size() > 64) throw ResourceLimit("mask representation supports at most 64 sets");
  std::vector<SetMask> traces(universe_size_, 0);
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (int e : sets_[i]) traces[e] |= SetMask{1} << i;
  return traces;
}

SetFamily SetFamily::subfamily(std::span<const int> indices) const {
  std::vector<std::vector<int>> sub;
  std::vector<std::string> sub_labels;
  sub.reserve(indices.size());
  for (int i : indices) {
    sub.push_back(sets_.at(i));
    if (!labels_.empty()) sub_labels.push_back(labels_[i]);
  }
  return SetFamily(universe_size_, std::move(sub), std::move(sub_labels));
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> e) : vertex_count(n) {
  for (auto& [u, v] : e) {
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InvalidInput("parallel edge");
  edges = std::move(e);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

namespace {

std::vector<std::pair<int, int>> dedupe(std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void require_mask_sized(const SetFamily& family, const SolverLimits& limits) {
  if (family.size() > std::min<std::size_t>(limits.max_sets, 64))
    throw ResourceLimit("family has " + std::to_string(family.size()) +
                        " sets; exact solver cap is " +
                        std::to_string(std::min<std::size_t>(limits.max_sets, 64)));
}

inline SetMask bit(int i) { return SetMask{1} << i; }

// Distinct nonzero traces that are maximal under inclusion, each with its
// lowest element index as representative. Any hitting set or (p,q) question
// only needs these.
struct ReducedTraces {
  std::vector<SetMask> masks;
  std::vector<int> representative;
};

ReducedTraces maximal_traces(const std::vector<SetMask>& traces) {
  std::vector<std::pair<SetMask, int>> distinct;
  {
    std::vector<std::pair<SetMask, int>> all;
    for (std::size_t e = 0; e < traces.size(); ++e)
      if (traces[e] != 0) all.emplace_back(traces[e], static_cast<int>(e));
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
      if (k == 0 || all[k].first != all[k - 1].first) distinct.push_back(all[k]);
  }
  ReducedTraces out;
  std::vector<std::pair<int, SetMask>> kept;
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < distinct.size() && !dominated; ++b)
      if (a != b && (distinct[a].first & ~distinct[b].first) == 0) dominated = true;
    if (!dominated) kept.emplace_back(distinct[a].second, distinct[a].first);
  }
  std::sort(kept.begin(), kept.end());
  for (auto [rep, mask] : kept) {
    out.masks.push_back(mask);
    out.representative.push_back(rep);
  }
  return out;
}

}  // namespace

SimpleGraph intersection_graph_serial(const SetFamily& family) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < family.universe_size(); ++e) {
    auto owners = family.containing(static_cast<int>(e));
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) edges.emplace_back(owners[a], owners[b]);
  }
  return SimpleGraph(static_cast<int>(family.size()), dedupe(std::move(edges)));
}

SimpleGraph intersection_graph(const SetFamily& family) {
  const int n = static_cast<int>(family.size());
  std::vector<std::vector<std::pair<int, int>>> rows(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (family.intersects(i, j)) rows[i].emplace_back(i, j);
  std::vector<std::pair<int, int>> edges;
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return SimpleGraph(n, std::move(edges));
}

namespace {

// Maximum clique in the disjointness graph, i.e. maximum pairwise-disjoint
// subfamily. Greedy colouring of the disjointness graph partitions candidates
// into pairwise-intersecting groups (a clique cover of the intersection
// graph), which bounds how many more sets can be added.
class IndependenceSearch {
 public:
  IndependenceSearch(std::vector<SetMask> disjoint, std::uint64_t budget)
      : disjoint_(std::move(disjoint)), budget_(budget) {}

  int run() {
    const int n = static_cast<int>(disjoint_.size());
    SetMask all = n == 64 ? ~SetMask{0} : (bit(n) - 1);
    // Greedy lower bound: repeatedly take the set with fewest intersecting sets.
    SetMask p = all;
    int greedy = 0;
    while (p) {
      int pick = -1;
      int best_deg = 1 << 30;
      for (SetMask q = p; q; q &= q - 1) {
        int v = std::countr_zero(q);
        int deg = std::popcount(p & ~disjoint_[v]);
        if (deg < best_deg) {
          best_deg = deg;
          pick = v;
        }
      }
      ++greedy;
      p &= disjoint_[pick];
    }
    best_ = greedy;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int depth, SetMask candidates) {
    if (++nodes_ > budget_)
      throw ResourceLimit("independence search exceeded node budget of " + std::to_string(budget_));
    std::vector<int> order;
    std::vector<int> colour;
    SetMask uncoloured = candidates;
    int k = 0;
    while (uncoloured) {
      ++k;
      SetMask q = uncoloured;
      while (q) {
        int v = std::countr_zero(q);
        order.push_back(v);
        colour.push_back(k);
        uncoloured &= ~bit(v);
        q &= ~bit(v) & ~disjoint_[v];
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (depth + colour[idx] <= best_) return;
      int v = order[idx];
      SetMask next = candidates & disjoint_[v];
      if (next == 0) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(depth + 1, next);
      }
      candidates &= ~bit(v);
    }
  }

  std::vector<SetMask> disjoint_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
};

}  // namespace

int independence_number(const SetFamily& family, const SolverLimits& limits) {
  require_mask_sized(family, limits);
  const int n = static_cast<int>(family.size());
  if (n == 0) return 0;
  std::vector<SetMask> disjoint(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !family.intersects(i, j)) disjoint[i] |= bit(j);
  return IndependenceSearch(std::move(disjoint), limits.node_budget).run();
}

bool hits_all(const SetFamily& family, std::span<const int> points) {
  std::vector<char> hit(family.size(), 0);
  for (int p : points) {
    if (p < 0 || static_cast<std::size_t>(p) >= family.universe_size()) return false;
    for (int s : family.containing(p)) hit[s] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

PiercingCertificate make_certificate(const SetFamily& family, std::vector<int> points,
                                     bool optimal) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PiercingCertificate cert;
  cert.covered.assign(family.size(), -1);
  for (int p : points) {
    if (p < 0 || static_cast<std::size_t>(p) >= family.universe_size())
      throw InvalidInput("certificate point " + std::to_string(p) + " outside universe");
    for (int s : family.containing(p))
      if (cert.covered[s] < 0) cert.covered[s] = p;
  }
  for (std::size_t s = 0; s < family.size(); ++s)
    if (cert.covered[s] < 0)
      throw InvalidInput("point set misses set " + std::to_string(s));
  cert.points = std::move(points);
  cert.optimal = optimal;
  return cert;
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(const ReducedTraces& classes, int set_count, std::uint64_t budget)
      : masks_(classes.masks), budget_(budget), set_count_(set_count) {
    members_.assign(set_count, {});
    conflict_.assign(set_count, 0);
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      for (SetMask q = masks_[c]; q; q &= q - 1) {
        int s = std::countr_zero(q);
        members_[s].push_back(static_cast<int>(c));
        conflict_[s] |= masks_[c];
      }
    }
    by_size_.resize(set_count);
    std::iota(by_size_.begin(), by_size_.end(), 0);
    std::stable_sort(by_size_.begin(), by_size_.end(),
                     [&](int a, int b) { return members_[a].size() < members_[b].size(); });
  }

  std::vector<int> run() {
    SetMask all = set_count_ == 64 ? ~SetMask{0} : (bit(set_count_) - 1);
    best_ = greedy(all);
    std::vector<int> chosen;
    search(all, chosen);
    return best_;
  }

 private:
  std::vector<int> greedy(SetMask uncovered) const {
    std::vector<int> picks;
    while (uncovered) {
      int best = -1;
      int gain = 0;
      for (std::size_t c = 0; c < masks_.size(); ++c) {
        int g = std::popcount(masks_[c] & uncovered);
        if (g > gain) {
          gain = g;
          best = static_cast<int>(c);
        }
      }
      picks.push_back(best);
      uncovered &= ~masks_[best];
    }
    return picks;
  }

  // Uncovered sets that pairwise share no point each need their own point.
  int packing_bound(SetMask uncovered) const {
    SetMask blocked = 0;
    int count = 0;
    for (int s : by_size_) {
      if (!(uncovered & bit(s)) || (blocked & bit(s))) continue;
      ++count;
      blocked |= conflict_[s];
    }
    return count;
  }

  void search(SetMask uncovered, std::vector<int>& chosen) {
    if (++nodes_ > budget_)
      throw ResourceLimit("piercing search exceeded node budget of " + std::to_string(budget_));
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(uncovered) >= best_.size()) return;
    int branch_set = -1;
    for (int s : by_size_)
      if (uncovered & bit(s)) {
        branch_set = s;
        break;
      }
    std::vector<int> options = members_[branch_set];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return std::popcount(masks_[a] & uncovered) > std::popcount(masks_[b] & uncovered);
    });
    for (int c : options) {
      chosen.push_back(c);
      search(uncovered & ~masks_[c], chosen);
      chosen.pop_back();
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  std::vector<SetMask> masks_;
  std::vector<std::vector<int>> members_;
  std::vector<SetMask> conflict_;
  std::vector<int> by_size_;
  std::vector<int> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int set_count_;
};

}  // namespace

PiercingCertificate min_piercing(const SetFamily& family, const SolverLimits& limits) {
  require_mask_sized(family, limits);
  if (family.empty()) return make_certificate(family, {}, true);
  ReducedTraces classes = maximal_traces(family.element_traces());
  if (classes.masks.size() > limits.max_universe)
    throw ResourceLimit("reduced universe has " + std::to_string(classes.masks.size()) +
                        " classes; exact piercing cap is " + std::to_string(limits.max_universe));
  HittingSetSearch search(classes, static_cast<int>(family.size()), limits.node_budget);
  std::vector<int> points;
  for (int c : search.run()) points.push_back(classes.representative[c]);
  return make_certificate(family, std::move(points), true);
}

PqVerdict has_pq_property(const SetFamily& family, int p, int q, PqMode mode,
                          const SolverLimits& limits) {
  if (q < 1 || p < q) throw InvalidInput("(p,q)-property needs p >= q >= 1");
  PqVerdict verdict;
  verdict.exhaustive = mode.kind == PqMode::Kind::exhaustive;
  const int n = static_cast<int>(family.size());
  // Every set is nonempty, so any single set "intersects"; fewer than p sets
  // leaves nothing to check.
  if (q == 1 || p > n) return verdict;
  require_mask_sized(family, limits);
  ReducedTraces classes = maximal_traces(family.element_traces());

  auto satisfied = [&](SetMask subset) {
    for (SetMask t : classes.masks)
      if (std::popcount(t & subset) >= q) return true;
    return false;
  };
  auto to_indices = [](SetMask m) {
    std::vector<int> idx;
    for (; m; m &= m - 1) idx.push_back(std::countr_zero(m));
    return idx;
  };

  if (mode.kind == PqMode::Kind::exhaustive) {
    // C(n, p) with overflow guard
    double count = 1;
    for (int k = 0; k < p; ++k) count = count * (n - k) / (k + 1);
    if (count > static_cast<double>(limits.subset_budget))
      throw ResourceLimit("C(" + std::to_string(n) + "," + std::to_string(p) +
                          ") p-subsets exceed budget");
    std::vector<int> comb(p);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      SetMask m = 0;
      for (int c : comb) m |= bit(c);
      ++verdict.checked;
      if (!satisfied(m)) {
        verdict.holds = false;
        verdict.witness = comb;
        return verdict;
      }
      int k = p - 1;
      while (k >= 0 && comb[k] == n - p + k) --k;
      if (k < 0) break;
      ++comb[k];
      for (int j = k + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
    }
    return verdict;
  }

  Rng rng(mode.seed);
  std::vector<int> pool(n);
  for (std::uint64_t t = 0; t < mode.trials; ++t) {
    std::iota(pool.begin(), pool.end(), 0);
    SetMask m = 0;
    for (int k = 0; k < p; ++k) {
      auto j = k + static_cast<int>(rng.below(n - k));
      std::swap(pool[k], pool[j]);
      m |= bit(pool[k]);
    }
    ++verdict.checked;
    if (!satisfied(m)) {
      verdict.holds = false;
      verdict.witness = to_indices(m);
      return verdict;
    }
  }
  return verdict;
}

namespace {

struct ShatterProblem {
  std::vector<SetMask> ranges;  // projection of each distinct range onto candidates
  int candidates = 0;
};

// Points sharing a trace over the ranges are interchangeable and never
// co-shattered; points in no range or in every range shatter nothing.
ShatterProblem reduce_shatter(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                              const SolverLimits& limits) {
  std::vector<std::vector<int>> trace(point_count);
  for (std::size_t k = 0; k < ranges.size(); ++k)
    for (int x : ranges[k]) {
      if (x < 0 || static_cast<std::size_t>(x) >= point_count)
        throw InvalidInput("range point out of bounds");
      if (trace[x].empty() || trace[x].back() != static_cast<int>(k))
        trace[x].push_back(static_cast<int>(k));
    }
  std::vector<int> candidate_of(point_count, -1);
  std::vector<std::vector<int>> seen;
  int count = 0;
  for (std::size_t x = 0; x < point_count; ++x) {
    if (trace[x].empty() || trace[x].size() == ranges.size()) continue;
    auto it = std::find(seen.begin(), seen.end(), trace[x]);
    if (it != seen.end()) continue;
    seen.push_back(trace[x]);
    candidate_of[x] = count++;
  }
  if (static_cast<std::size_t>(count) > std::min<std::size_t>(limits.max_vc_candidates, 64))
    throw ResourceLimit(std::to_string(count) + " distinct point traces exceed VC candidate cap " +
                        std::to_string(std::min<std::size_t>(limits.max_vc_candidates, 64)));
  ShatterProblem prob;
  prob.candidates = count;
  for (const auto& r : ranges) {
    SetMask m = 0;
    for (int x : r)
      if (candidate_of[x] >= 0) m |= bit(candidate_of[x]);
    prob.ranges.push_back(m);
  }
  std::sort(prob.ranges.begin(), prob.ranges.end());
  prob.ranges.erase(std::unique(prob.ranges.begin(), prob.ranges.end()), prob.ranges.end());
  return prob;
}

bool shattered(const ShatterProblem& prob, SetMask x, int d) {
  std::vector<SetMask> seen;
  seen.reserve(prob.ranges.size());
  for (SetMask r : prob.ranges) seen.push_back(r & x);
  std::sort(seen.begin(), seen.end());
  auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
  return distinct == (std::ptrdiff_t{1} << d);
}

// Extensions of each shattered d-set by a larger candidate whose d-subsets are
// all shattered (shattering is inherited by subsets).
std::vector<SetMask> next_candidates(const std::vector<SetMask>& level, int candidates) {
  std::unordered_set<SetMask> known(level.begin(), level.end());
  std::vector<SetMask> out;
  for (SetMask x : level) {
    int top = 63 - std::countl_zero(x);
    for (int c = top + 1; c < candidates; ++c) {
      SetMask y = x | bit(c);
      bool ok = true;
      for (SetMask q = x; q && ok; q &= q - 1) ok = known.count(y & ~(q & -q)) > 0;
      if (ok) out.push_back(y);
    }
  }
  return out;
}

template <bool Parallel>
int shatter_search(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                   const SolverLimits& limits) {
  if (ranges.empty()) return 0;
  ShatterProblem prob = reduce_shatter(point_count, ranges, limits);
  std::vector<SetMask> level;
  for (int c = 0; c < prob.candidates; ++c) level.push_back(bit(c));
  int d = prob.candidates > 0 ? 1 : 0;
  std::uint64_t work = 0;
  while (!level.empty()) {
    std::vector<SetMask> cands = next_candidates(level, prob.candidates);
    if (cands.empty() || (std::size_t{1} << (d + 1)) > prob.ranges.size()) break;
    work += cands.size();
    if (work > limits.node_budget) throw ResourceLimit("VC search exceeded node budget");
    std::vector<char> ok(cands.size(), 0);
    const auto n = static_cast<std::int64_t>(cands.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < n; ++i) ok[i] = shattered(prob, cands[i], d + 1);
    } else {
      for (std::int64_t i = 0; i < n; ++i) ok[i] = shattered(prob, cands[i], d + 1);
    }
    std::vector<SetMask> next;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (ok[i]) next.push_back(cands[i]);
    if (next.empty()) break;
    level = std::move(next);
    ++d;
  }
  return d;
}

std::vector<std::vector<int>> dual_ranges(const SetFamily& family) {
  std::vector<std::vector<int>> ranges;
  ranges.reserve(family.universe_size());
  for (std::size_t e = 0; e < family.universe_size(); ++e) {
    auto c = family.containing(static_cast<int>(e));
    ranges.emplace_back(c.begin(), c.end());
  }
  return ranges;
}

}  // namespace

int shatter_dimension(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                      const SolverLimits& limits) {
  return shatter_search<true>(point_count, ranges, limits);
}

int shatter_dimension_serial(std::size_t point_count, const std::vector<std::vector<int>>& ranges,
                             const SolverLimits& limits) {
  return shatter_search<false>(point_count, ranges, limits);
}

int vc_dimension(const SetFamily& family, const SolverLimits& limits) {
  return shatter_dimension(family.universe_size(), family.sets(), limits);
}

int dual_vc_dimension(const SetFamily& family, const SolverLimits& limits) {
  return shatter_dimension(family.size(), dual_ranges(family), limits);
}

SimpleGraph delaunay_graph(const SetFamily& family) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < family.universe_size(); ++e) {
    auto owners = family.containing(static_cast<int>(e));
    if (owners.size() == 2) edges.emplace_back(owners[0], owners[1]);
  }
  return SimpleGraph(static_cast<int>(family.size()), dedupe(std::move(edges)));
}

}  // namespace npierce
