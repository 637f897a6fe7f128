#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "npierce/embedded_graph.hpp"
#include "npierce/errors.hpp"
#include "oracles.hpp"

using namespace npierce;

namespace {

using Rot = std::vector<std::vector<int>>;

EmbeddedGraph cycle(int k) {
  Rot nb(k);
  for (int i = 0; i < k; ++i) nb[i] = {(i + k - 1) % k, (i + 1) % k};
  return EmbeddedGraph::from_neighbor_order(nb);
}

// Wheel: hub 0, rim 1..k in counterclockwise order.
EmbeddedGraph wheel(int k) {
  Rot nb(k + 1);
  for (int i = 1; i <= k; ++i) nb[0].push_back(i);
  for (int i = 1; i <= k; ++i) {
    int prev = i == 1 ? k : i - 1;
    int next = i == k ? 1 : i + 1;
    nb[i] = {next, 0, prev};
  }
  return EmbeddedGraph::from_neighbor_order(nb);
}

// Calls f on every rotation system of the graph (fixing the first neighbour
// at each vertex), stopping when f returns true.
template <class F>
bool for_each_rotation(const Rot& adj, F f) {
  Rot rot = adj;
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == rot.size()) return f(rot);
    if (rot[v].size() <= 2) return rec(v + 1);
    std::sort(rot[v].begin() + 1, rot[v].end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
    return false;
  };
  return rec(0);
}

Rot complete_adj(int n) {
  Rot adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) adj[u].push_back(v);
  return adj;
}

Rot k33_adj() {
  Rot adj(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  return adj;
}

Rot find_rotation_with_faces(const Rot& adj, int faces) {
  Rot found;
  for_each_rotation(adj, [&](const Rot& r) {
    if (oracle::count_faces(r) != faces) return false;
    found = r;
    return true;
  });
  return found;
}

SimpleGraph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.push_back({u, v});
  return SimpleGraph(n, e);
}

std::vector<std::vector<int>> floyd(const SimpleGraph& g) {
  const int n = g.vertex_count;
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = kInfinity;
  return d;
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(EmbeddedGraph(1, {{0, 0}}, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(EmbeddedGraph(2, {{0, 1}, {1, 0}}, {{0, 3}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(EmbeddedGraph(2, {{0, 1}}, {{0}, {}}), InvalidInput);
  CHECK_THROWS_AS(EmbeddedGraph(2, {{0, 1}}, {{1}, {0}}), InvalidInput);
  CHECK_THROWS_AS(EmbeddedGraph(2, {{0, 2}}, {{0}, {1}}), InvalidInput);
  EmbeddedGraph e(2, {{0, 1}}, {{0}, {1}});
  CHECK(e.tail(0) == 0);
  CHECK(e.head(0) == 1);
  CHECK(e.face_next(0) == 1);
}

TEST_CASE("face tracing") {
  auto tri = trace_faces(cycle(3));
  REQUIRE(tri.size() == 2);
  CHECK(tri[0].length() == 3);
  CHECK(tri[1].length() == 3);

  auto edge = trace_faces(EmbeddedGraph(2, {{0, 1}}, {{0}, {1}}));
  REQUIRE(edge.size() == 1);
  CHECK(edge[0].length() == 2);

  auto w = wheel(3);  // K4
  auto faces = trace_faces(w);
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.length() == 3);
  CHECK(w.vertex_count() - w.edge_count() + static_cast<int>(faces.size()) == 2);
  CHECK_THROWS_AS(trace_faces(EmbeddedGraph::from_neighbor_order({{1}, {0}, {3}, {2}})), InvalidInput);
}

TEST_CASE("Euler genus") {
  CHECK(euler_genus(wheel(3)) == 0);
  CHECK(euler_genus(EmbeddedGraph::from_neighbor_order({{}})) == 0);

  Rot k5 = find_rotation_with_faces(complete_adj(5), 5);
  REQUIRE_FALSE(k5.empty());
  CHECK(euler_genus(EmbeddedGraph::from_neighbor_order(k5)) == 1);

  Rot k33 = find_rotation_with_faces(k33_adj(), 3);
  REQUIRE_FALSE(k33.empty());
  CHECK(euler_genus(EmbeddedGraph::from_neighbor_order(k33)) == 1);

  // V - E + F = 2 - 2g on every rotation system of K4 and K3,3
  for (const Rot& adj : {complete_adj(4), k33_adj()}) {
    for_each_rotation(adj, [&](const Rot& r) {
      auto g = EmbeddedGraph::from_neighbor_order(r);
      int f = static_cast<int>(trace_faces(g).size());
      CHECK(f == oracle::count_faces(r));
      CHECK(g.vertex_count() - g.edge_count() + f == 2 - 2 * euler_genus(g));
      return false;
    });
  }
}

TEST_CASE("girth") {
  auto tree = EmbeddedGraph::from_neighbor_order({{1, 2}, {0}, {0, 3}, {2}});
  CHECK_FALSE(girth(tree).has_value());
  CHECK(*girth(cycle(7)) == 7);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto g = random_graph(rng, 4 + static_cast<int>(seed % 9), 0.25);
    auto adj = g.adjacency();
    int want = oracle::girth(adj);
    auto got = girth(adj);
    if (want == 1 << 30)
      CHECK_FALSE(got.has_value());
    else
      CHECK(got.value_or(-1) == want);
    CHECK(girth_serial(adj) == got);
  }
}

TEST_CASE("distances and neighbourhoods") {
  auto path = EmbeddedGraph::from_neighbor_order({{1}, {0, 2}, {1, 3}, {2, 4}, {3}});
  CHECK(bfs_distance(path, 0, 4) == 4);
  CHECK(bfs_distance(path, 2, 2) == 0);
  CHECK(r_neighborhood(path, 2, 0) == std::vector<int>{2});
  auto star = EmbeddedGraph::from_neighbor_order({{1, 2, 3}, {0}, {0}, {0}});
  CHECK(r_neighborhood(star, 0, 1) == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distance(EmbeddedGraph::from_neighbor_order({{}, {}}), 0, 1) == kInfinity);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(77 + seed);
    auto g = random_graph(rng, 10, 0.2);
    auto want = floyd(g);
    CHECK(all_pairs_distances(g.adjacency()) == want);
    CHECK(all_pairs_distances_serial(g.adjacency()) == want);
    for (int r = 0; r <= 3; ++r) {
      std::vector<int> ball;
      for (int v = 0; v < 10; ++v)
        if (want[3][v] <= r) ball.push_back(v);
      CHECK(r_neighborhood(g.adjacency(), 3, r) == ball);
    }
  }
}

TEST_CASE("edge distance") {
  auto path = EmbeddedGraph::from_neighbor_order({{1}, {0, 2}, {1, 3}, {2}});
  CHECK(edge_distance(path, 0, path.edge_between(2, 3)) == 3);
  CHECK(edge_distance(path, 2, path.edge_between(2, 3)) == 1);
}

TEST_CASE("planarity") {
  CHECK(is_planar(wheel(3).simple_graph()));
  CHECK_FALSE(is_planar(EmbeddedGraph::from_neighbor_order(complete_adj(5)).simple_graph()));
  CHECK_FALSE(is_planar(EmbeddedGraph::from_neighbor_order(k33_adj()).simple_graph()));
  int nonplanar = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(1000 + seed);
    const int n = 5 + static_cast<int>(seed % 4);
    auto g = random_graph(rng, n, 0.55);
    bool want = oracle::is_planar(g);
    nonplanar += !want;
    CHECK(is_planar(g) == want);
  }
  CHECK(nonplanar > 5);  // the sample exercises both answers
}

TEST_CASE("subgraph systems") {
  auto c = cycle(6);
  CHECK_THROWS_AS(SubgraphSystem(c, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(SubgraphSystem(c, {{}}), InvalidInput);
  SubgraphSystem s(c, {{0, 1}, {3, 4}});
  CHECK(s.in_member(0, 1));
  CHECK_FALSE(s.in_member(1, 1));
  auto fam = s.to_set_family();
  CHECK(fam.universe_size() == 6);
  CHECK(cross_free_check(s).cross_free);
}

TEST_CASE("crossing at a star centre") {
  auto star = EmbeddedGraph::from_neighbor_order({{1, 2, 3, 4}, {0}, {0}, {0}, {0}});
  SubgraphSystem s(star, {{0, 1, 3}, {0, 2, 4}});
  auto v = cross_free_check(s);
  CHECK_FALSE(v.cross_free);
  REQUIRE(v.crossing.has_value());
  CHECK(v.crossing->vertex == 0);
  SubgraphSystem ok(star, {{0, 1, 2}, {0, 3, 4}});
  CHECK(cross_free_check(ok).cross_free);
}

TEST_CASE("crossing test matches a direct scan when members meet in one vertex") {
  const int k = 8;
  auto w = wheel(k);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::vector<int> a{0};
    std::vector<int> b{0};
    for (int v = 1; v <= k; ++v) {
      auto r = rng.below(3);
      if (r == 1) a.push_back(v);
      if (r == 2) b.push_back(v);
    }
    // direct scan of the hub rotation
    std::vector<int> labels;
    for (int x : w.cyclic_neighbors(0)) {
      if (std::count(a.begin(), a.end(), x)) labels.push_back(1);
      if (std::count(b.begin(), b.end(), x)) labels.push_back(2);
    }
    int changes = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      changes += labels[i] != labels[(i + 1) % labels.size()];
    SubgraphSystem s(w, {a, b});
    CHECK(cross_free_check(s).cross_free == (changes < 4));
  }
}

TEST_CASE("contracted rotation of a single vertex is its rotation") {
  auto w = wheel(5);
  auto r = contracted_rotation(w, {0});
  CHECK(std::vector<int>(w.rotation(0).begin(), w.rotation(0).end()) == r);
  // contracting the hub and one rim vertex keeps every other dart once
  auto r2 = contracted_rotation(w, {0, 1});
  CHECK(r2.size() == static_cast<std::size_t>(w.degree(0) + w.degree(1) - 2));
}
