#include "doctest.h"
#include "npierce/dsseq.hpp"
#include "npierce/errors.hpp"
#include "npierce/rng.hpp"

using namespace npierce;

namespace {

// Longest prefix of (x y)^* embedded as a subsequence, by DP over positions.
int alternation_length(const std::vector<int>& s, int x, int y) {
  // best[k] = whether (x y)-alternation of length k ends at or before i
  int best = 0;
  for (int v : s) {
    int want = best % 2 == 0 ? x : y;
    if (v == want) ++best;
  }
  return best;
}

bool brute_admissible(const std::vector<int>& s, int t, int b) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return false;
  for (int x = 0; x < t; ++x)
    for (int y = 0; y < t; ++y)
      if (x != y && alternation_length(s, x, y) >= 2 * b) return false;
  return true;
}

// Earliest index tuple spelling (x y)^b, tried over all tuples in
// lexicographic order (tiny inputs only).
std::vector<int> brute_witness(const std::vector<int>& s, int t, int b) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return {static_cast<int>(i), static_cast<int>(i + 1)};
  const int n = static_cast<int>(s.size());
  const int k = 2 * b;
  std::vector<int> best;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return best;
  for (;;) {
    const int x = s[idx[0]];
    const int y = s[idx[1]];
    bool ok = x != y;
    for (int i = 0; i < k && ok; ++i) ok = s[idx[i]] == (i % 2 == 0 ? x : y);
    if (ok && x < t && y < t) return idx;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return best;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int brute_max_length(int t, int b, int cap) {
  std::vector<std::vector<int>> level{{}};
  int best = 0;
  for (int len = 1; len <= cap && !level.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& s : level)
      for (int c = 0; c < t; ++c) {
        auto e = s;
        e.push_back(c);
        if (brute_admissible(e, t, b)) next.push_back(e);
      }
    if (!next.empty()) best = len;
    level.swap(next);
  }
  return best;
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK(is_ds_admissible({{0, 1, 0}, 2, 2}).admissible);
  auto v = is_ds_admissible({{0, 1, 0, 1}, 2, 2});
  CHECK_FALSE(v.admissible);
  CHECK(v.witness == std::vector<int>{0, 1, 2, 3});
  auto rep = is_ds_admissible({{0, 1, 1}, 2, 2});
  CHECK(rep.witness == std::vector<int>{1, 2});
  CHECK_THROWS_AS(is_ds_admissible({{0, 3}, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(is_ds_admissible({{0}, 1, 1}), InvalidInput);

  Rng rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    const int t = 2 + static_cast<int>(rng.below(3));
    const int b = 2 + static_cast<int>(rng.below(2));
    std::vector<int> s;
    const int n = static_cast<int>(rng.below(9));
    for (int i = 0; i < n; ++i) s.push_back(static_cast<int>(rng.below(t)));
    auto verdict = is_ds_admissible({s, t, b});
    CHECK(verdict.admissible == brute_admissible(s, t, b));
    if (!verdict.admissible) CHECK(verdict.witness == brute_witness(s, t, b));
  }
}

TEST_CASE("extremal lengths") {
  CHECK(max_ds_length(1, 2).length == 1);
  auto t3 = max_ds_length(3, 2);
  CHECK(t3.length == 5);
  CHECK(t3.optimal);
  CHECK(is_ds_admissible({t3.witness, 3, 2}).admissible);
  CHECK(max_ds_length(2, 3).length == brute_max_length(2, 3, 10));
  CHECK(max_ds_length(3, 3).length == brute_max_length(3, 3, 12));
  CHECK(max_ds_length(4, 2).length == brute_max_length(4, 2, 9));
  auto cut = max_ds_length(6, 3, 50);
  CHECK_FALSE(cut.optimal);
  CHECK(is_ds_admissible({cut.witness, 6, 3}).admissible);
  CHECK_THROWS_AS(max_ds_length(0, 2), InvalidInput);
}
