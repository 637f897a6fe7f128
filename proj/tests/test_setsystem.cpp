#include <set>

#include "doctest.h"
#include "npierce/errors.hpp"
#include "npierce/setsystem.hpp"
#include "oracles.hpp"

using namespace npierce;

namespace {

SetFamily disjoint_singletons(int k) {
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < k; ++i) sets.push_back({i});
  return SetFamily(k, sets);
}

// Every subset of {0..d-1}, each padded with element d (sets must be nonempty).
SetFamily power_set_family(int d) {
  std::vector<std::vector<int>> sets;
  for (int m = 0; m < (1 << d); ++m) {
    std::vector<int> s{d};
    for (int e = 0; e < d; ++e)
      if ((m >> e) & 1) s.push_back(e);
    sets.push_back(s);
  }
  return SetFamily(d + 1, sets);
}

}  // namespace

TEST_CASE("construction validates and normalises sets") {
  SetFamily f(4, {{3, 1, 1}, {0}});
  CHECK(f.set(0).size() == 2);
  CHECK(f.set(0)[0] == 1);
  CHECK(f.contains(0, 3));
  CHECK_FALSE(f.contains(1, 3));
  CHECK_THROWS_AS(SetFamily(3, {{0}, {}}), InvalidInput);
  CHECK_THROWS_AS(SetFamily(3, {{5}}), InvalidInput);
  CHECK_THROWS_AS(SetFamily(3, {{-1}}), InvalidInput);
  CHECK_THROWS_AS(SetFamily(3, {{0}}, {"a", "b"}), InvalidInput);
}

TEST_CASE("intersection graph") {
  CHECK(intersection_graph(SetFamily(2, {{0}, {1}})).edges.empty());
  auto g = intersection_graph(SetFamily(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  Rng rng(11);
  auto f = oracle::random_family(rng, 50, 20, 0.15);
  auto h = intersection_graph(f);
  std::vector<std::pair<int, int>> expect;
  for (int i = 0; i < 50; ++i)
    for (int j = i + 1; j < 50; ++j) {
      bool meet = false;
      for (int e : f.sets()[i]) meet = meet || oracle::in_set(f, j, e);
      if (meet) expect.push_back({i, j});
    }
  CHECK(h.edges == expect);
  CHECK(intersection_graph_serial(f).edges == expect);
}

TEST_CASE("independence number") {
  CHECK(independence_number(disjoint_singletons(5)) == 5);
  CHECK(independence_number(SetFamily(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    auto f = oracle::random_family(rng, 20, 12, 0.2);
    CHECK(independence_number(f) == oracle::independence_number(f));
  }
}

TEST_CASE("minimum piercing") {
  auto one = min_piercing(SetFamily(2, {{0, 1}}));
  CHECK(one.size() == 1);
  CHECK(one.optimal);
  CHECK(min_piercing(disjoint_singletons(4)).size() == 4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(100 + seed);
    auto f = oracle::random_family(rng, 15, 12, 0.2);
    auto cert = min_piercing(f);
    CHECK(static_cast<int>(cert.size()) == oracle::min_piercing(f));
    CHECK(hits_all(f, cert.points));
    for (std::size_t s = 0; s < f.size(); ++s) CHECK(f.contains(s, cert.covered[s]));
  }
}

TEST_CASE("piercing respects the universe cap") {
  SolverLimits lim;
  lim.max_universe = 3;
  CHECK_THROWS_AS(min_piercing(disjoint_singletons(5), lim), ResourceLimit);
  std::vector<std::vector<int>> many(65, std::vector<int>{0});
  CHECK_THROWS_AS(min_piercing(SetFamily(1, many)), ResourceLimit);
}

TEST_CASE("make_certificate rejects misses") {
  auto f = SetFamily(3, {{0}, {1, 2}});
  CHECK_THROWS_AS(make_certificate(f, {0}, false), InvalidInput);
  auto c = make_certificate(f, {2, 0}, false);
  CHECK(c.points == std::vector<int>{0, 2});
  CHECK(c.covered == std::vector<int>{0, 2});
}

TEST_CASE("(p,q) property") {
  Rng rng(3);
  auto f = oracle::random_family(rng, 6, 5, 0.3);
  CHECK(has_pq_property(f, 1, 1).holds);
  auto v = has_pq_property(disjoint_singletons(3), 2, 2);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.size() == 2);

  std::vector<std::vector<int>> triples;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
  SetFamily t(6, triples);
  CHECK(has_pq_property(t, 4, 2).holds == oracle::has_pq(t, 4, 2));
  CHECK(has_pq_property(t, 4, 3).holds == oracle::has_pq(t, 4, 3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r2(seed);
    auto g = oracle::random_family(r2, 9, 8, 0.3);
    for (int p = 2; p <= 4; ++p)
      for (int q = 2; q <= p; ++q) CHECK(has_pq_property(g, p, q).holds == oracle::has_pq(g, p, q));
  }
  auto sampled = has_pq_property(disjoint_singletons(6), 3, 2, PqMode::sampled(50, 1));
  CHECK_FALSE(sampled.holds);
  CHECK_FALSE(sampled.exhaustive);
  CHECK_THROWS_AS(has_pq_property(f, 2, 3), InvalidInput);
}

TEST_CASE("VC dimension") {
  CHECK(vc_dimension(power_set_family(3)) == 3);
  CHECK(vc_dimension(SetFamily(4, {{0, 1}, {2, 3}})) == 1);
  // element 3 lies in neither set, so all four patterns occur
  CHECK(dual_vc_dimension(SetFamily(4, {{0, 2}, {1, 2}})) == 2);
  CHECK(dual_vc_dimension(power_set_family(2)) == oracle::dual_vc_dimension(power_set_family(2)));
  // one set: its single dual element is shattered iff some element lies outside it
  CHECK(dual_vc_dimension(SetFamily(1, {{0}})) == oracle::dual_vc_dimension(SetFamily(1, {{0}})));
  CHECK(dual_vc_dimension(SetFamily(2, {{0}})) == oracle::dual_vc_dimension(SetFamily(2, {{0}})));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(500 + seed);
    auto f = oracle::random_family(rng, 12, 10, 0.4);
    CHECK(vc_dimension(f) == oracle::vc_dimension(f));
    CHECK(dual_vc_dimension(f) == oracle::dual_vc_dimension(f));
  }
}

TEST_CASE("VC search cap") {
  SolverLimits lim;
  lim.max_vc_candidates = 2;
  CHECK_THROWS_AS(vc_dimension(power_set_family(4), lim), ResourceLimit);
}

TEST_CASE("Delaunay graph") {
  CHECK(delaunay_graph(SetFamily(2, {{0}, {1}})).edges.empty());
  auto d = delaunay_graph(SetFamily(3, {{0, 1}, {1, 2}}));
  CHECK(d.edges == std::vector<std::pair<int, int>>{{0, 1}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(900 + seed);
    auto f = oracle::random_family(rng, 20, 30, 0.1);
    auto got = delaunay_graph(f).edges;
    auto want = oracle::delaunay_edges(f);
    CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == want);
  }
}
