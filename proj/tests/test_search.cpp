#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "doctest.h"
#include "npierce/errors.hpp"
#include "npierce/girthmax.hpp"
#include "oracles.hpp"

using namespace npierce;

namespace {

using Rot = std::vector<std::vector<int>>;

Rot neighbor_lists(const EmbeddedGraph& g) {
  Rot r(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) r[v] = g.cyclic_neighbors(v);
  return r;
}

// Relabels vertices by perm, optionally mirrors, and rotates each list.
Rot scramble(const Rot& r, const std::vector<int>& perm, bool mirror, Rng& rng) {
  Rot out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    std::vector<int> l;
    for (int w : r[v]) l.push_back(perm[w]);
    if (mirror) std::reverse(l.begin(), l.end());
    if (!l.empty()) std::rotate(l.begin(), l.begin() + rng.below(l.size()), l.end());
    out[perm[v]] = l;
  }
  return out;
}

EmbeddedGraph cycle(int k) {
  Rot nb(k);
  for (int i = 0; i < k; ++i) nb[i] = {(i + k - 1) % k, (i + 1) % k};
  return EmbeddedGraph::from_neighbor_order(nb);
}

struct Census {
  int all = 0;
  int maximal = 0;
};

bool connected_without(const std::vector<std::vector<int>>& adj, int cut) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  int start = cut == 0 ? 1 : 0;
  std::vector<int> st{start};
  seen[start] = 1;
  if (cut >= 0) seen[cut] = 1;
  int reached = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        st.push_back(y);
      }
  }
  return reached == n - (cut >= 0 ? 1 : 0);
}

// All 2-connected plane maps of girth >= ell on exactly n vertices, up to
// isomorphism and reflection, by brute force: unlabelled graphs via all
// vertex permutations, then every rotation system of genus 0.
Census brute_census(int n, int ell) {
  Census c;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  const int m = static_cast<int>(slots.size());
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> slot_of(n * n);
  for (int k = 0; k < m; ++k) slot_of[slots[k].first * n + slots[k].second] = slot_of[slots[k].second * n + slots[k].first] = k;

  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    // keep only the lexicographically smallest labelling of each graph
    bool canonical = true;
    for (const auto& q : perms) {
      std::uint32_t img = 0;
      for (int k = 0; k < m; ++k)
        if ((mask >> k) & 1U) img |= 1U << slot_of[q[slots[k].first] * n + q[slots[k].second]];
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<std::vector<int>> adj(n);
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1U) {
        adj[slots[k].first].push_back(slots[k].second);
        adj[slots[k].second].push_back(slots[k].first);
      }
    bool ok = connected_without(adj, -1);
    for (int v = 0; v < n && ok; ++v) ok = adj[v].size() >= 2 && connected_without(adj, v);
    if (!ok || oracle::girth(adj) < ell) continue;
    const int edges = std::popcount(mask);
    std::vector<std::pair<int, int>> el;
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1U) el.push_back(slots[k]);
    if (!oracle::is_planar(SimpleGraph(n, el))) continue;
    std::vector<Rot> maps;
    Rot rot = adj;
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        if (n - edges + oracle::count_faces(rot) != 2) return;
        for (const auto& other : maps)
          if (oracle::maps_isomorphic(other, rot)) return;
        maps.push_back(rot);
        return;
      }
      if (rot[v].size() <= 2) return rec(v + 1);
      std::sort(rot[v].begin() + 1, rot[v].end());
      do rec(v + 1);
      while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
    };
    rec(0);
    for (const auto& r : maps) {
      ++c.all;
      auto g = EmbeddedGraph::from_neighbor_order(r);
      // maximal: no chord inside a face keeps girth >= ell
      bool maximal = true;
      for (const auto& f : trace_faces(g))
        for (int u : f.vertices)
          for (int w : f.vertices) {
            if (u >= w || g.adjacent(u, w) || !maximal) continue;
            auto a2 = adj;
            a2[u].push_back(w);
            a2[w].push_back(u);
            if (oracle::girth(a2) >= ell) maximal = false;
          }
      c.maximal += maximal;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("canonical codes are invariant and decode back") {
  std::vector<EmbeddedGraph> samples{cycle(5)};
  auto res = search_fmax_serial(4, 7);
  for (const auto& w : res.maximal_witnesses) samples.push_back(w);
  samples.push_back(EmbeddedGraph::from_neighbor_order({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}));
  Rng rng(8);
  for (const auto& g : samples) {
    const auto code = canonical_map_code(g);
    auto back = decode_map(code);
    CHECK(canonical_map_code(back) == code);
    CHECK(oracle::maps_isomorphic(neighbor_lists(back), neighbor_lists(g)));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      auto h = EmbeddedGraph::from_neighbor_order(scramble(neighbor_lists(g), perm, trial % 2 == 1, rng));
      CHECK(canonical_map_code(h) == code);
    }
  }
  CHECK(canonical_map_code(cycle(5)) != canonical_map_code(cycle(6)));
  CHECK_THROWS_AS(decode_map({3, 1}), InvalidInput);
}

TEST_CASE("codes separate non-isomorphic maps of one graph") {
  // Two embeddings of the same graph: a 6-cycle 0..5 with chords 0-2 and 3-5
  // drawn on the same side versus opposite sides.
  Rot same{{1, 5, 2}, {2, 0}, {3, 1, 0}, {4, 2, 5}, {5, 3}, {0, 3, 4}};
  Rot opposite{{1, 2, 5}, {2, 0}, {3, 0, 1}, {4, 2, 5}, {5, 3}, {0, 3, 4}};
  auto a = EmbeddedGraph::from_neighbor_order(same);
  auto b = EmbeddedGraph::from_neighbor_order(opposite);
  bool iso = oracle::maps_isomorphic(same, opposite);
  CHECK((canonical_map_code(a) == canonical_map_code(b)) == iso);
}

TEST_CASE("search reaches every map found by brute force") {
  struct Case {
    int ell;
    int n_max;
  };
  for (Case c : {Case{3, 5}, Case{3, 6}, Case{4, 6}, Case{5, 6}}) {
    Census total;
    for (int n = 3; n <= c.n_max; ++n) {
      Census k = brute_census(n, c.ell);
      total.all += k.all;
      total.maximal += k.maximal;
    }
    auto res = search_fmax_serial(c.ell, c.n_max);
    CAPTURE(c.ell);
    CAPTURE(c.n_max);
    CHECK(res.complete);
    CHECK(static_cast<int>(res.nodes_expanded) == total.all);
    CHECK(static_cast<int>(res.maximal_found) == total.maximal);
  }
}

TEST_CASE("search results on small instances") {
  auto l3 = search_fmax(3, 6);
  CHECK(l3.best_face_length == 3);
  REQUIRE(l3.witness.has_value());
  CHECK(verify_maximal(*l3.witness, 3).is_maximal);

  auto l4small = search_fmax(4, 4);
  CHECK(l4small.complete);
  CHECK(l4small.best_face_length <= 4);

  auto l4 = search_fmax(4, 8);
  CHECK(l4.best_face_length == 5);
  CHECK(is_two_connected(*l4.witness));

  // ell = 3 maximal maps are triangulations: 1, 1, 1, 2, 5 for n = 3..7
  CHECK(search_fmax(3, 7).maximal_found == 10);

  SearchBudget tiny;
  tiny.nodes = 3;
  auto cut = search_fmax(4, 8, tiny);
  CHECK_FALSE(cut.complete);
  CHECK(cut.nodes_expanded == 3);
  CHECK_THROWS_AS(search_fmax(2, 5), InvalidInput);
}
