#include "npierce/dsseq.hpp"

#include <algorithm>

#include "npierce/errors.hpp"

namespace npierce {

DsVerdict is_ds_admissible(const SymbolSequence& s) {
  if (s.t < 1 || s.b < 2) throw InvalidInput("need t >= 1 and b >= 2");
  for (int x : s.symbols)
    if (x < 0 || x >= s.t) throw InvalidInput("symbol outside alphabet");
  DsVerdict v;
  const auto& seq = s.symbols;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1]) {
      v.admissible = false;
      v.witness = {static_cast<int>(i), static_cast<int>(i + 1)};
      return v;
    }
  // Greedy leftmost matching yields the lexicographically smallest embedding
  // of (x y)^b for a fixed pair; take the smallest over all pairs.
  for (int x = 0; x < s.t; ++x)
    for (int y = 0; y < s.t; ++y) {
      if (x == y) continue;
      std::vector<int> idx;
      for (std::size_t i = 0; i < seq.size() && static_cast<int>(idx.size()) < 2 * s.b; ++i)
        if (seq[i] == (idx.size() % 2 == 0 ? x : y)) idx.push_back(static_cast<int>(i));
      if (static_cast<int>(idx.size()) == 2 * s.b && (v.admissible || idx < v.witness)) {
        v.admissible = false;
        v.witness = idx;
      }
    }
  return v;
}

namespace {

class DsSearch {
 public:
  DsSearch(int t, int b, std::uint64_t budget)
      : t_(t), b_(b), budget_(budget), alt_(t * t, 0) {}

  // Appends s if the sequence stays admissible.
  bool push(int s) {
    if (!seq_.empty() && seq_.back() == s) return false;
    changed_.push_back(-1);  // frame marker
    bool ok = true;
    for (int c = 0; c < t_; ++c) {
      if (c == s) continue;
      int& fwd = alt_[s * t_ + c];
      if (fwd % 2 == 0) {
        ++fwd;
        changed_.push_back(s * t_ + c);
        if (fwd >= 2 * b_) ok = false;
      }
      int& back = alt_[c * t_ + s];
      if (back % 2 == 1) {
        ++back;
        changed_.push_back(c * t_ + s);
        if (back >= 2 * b_) ok = false;
      }
    }
    seq_.push_back(s);
    used_.push_back(std::max(used_.empty() ? 0 : used_.back(), s + 1));
    if (!ok) {
      pop();
      return false;
    }
    return true;
  }

  void pop() {
    while (changed_.back() != -1) {
      --alt_[changed_.back()];
      changed_.pop_back();
    }
    changed_.pop_back();
    seq_.pop_back();
    used_.pop_back();
  }

  void dfs() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (seq_.size() > best_.size()) best_ = seq_;
    const int limit = std::min(t_, used_.empty() ? 1 : used_.back() + 1);
    for (int s = 0; s < limit && !exhausted_; ++s) {
      if (push(s)) {
        dfs();
        pop();
      }
    }
  }

  int alphabet() const { return t_; }
  const std::vector<int>& sequence() const { return seq_; }
  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  int t_;
  int b_;
  std::uint64_t budget_;
  std::vector<int> alt_;  // greedy alternation length of (x y)^*, indexed x*t+y
  std::vector<int> seq_;
  std::vector<int> used_;  // symbols introduced so far, per prefix length
  std::vector<int> changed_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Canonical admissible prefixes of the given length (or shorter dead ends).
void collect_prefixes(DsSearch& s, std::size_t depth, std::vector<std::vector<int>>& out) {
  if (s.sequence().size() == depth) {
    out.push_back(s.sequence());
    return;
  }
  const auto& seq = s.sequence();
  int used = 0;
  for (int x : seq) used = std::max(used, x + 1);
  bool extended = false;
  for (int c = 0; c <= used && c < s.alphabet(); ++c) {
    if (s.push(c)) {
      extended = true;
      collect_prefixes(s, depth, out);
      s.pop();
    }
  }
  if (!extended) out.push_back(seq);
}

template <bool Parallel>
DsMaxResult run(int t, int b, std::uint64_t budget) {
  if (t < 1 || b < 2) throw InvalidInput("need t >= 1 and b >= 2");
  DsMaxResult res;
  res.t = t;
  res.b = b;
  std::vector<std::vector<int>> prefixes;
  {
    DsSearch root(t, b, budget);
    collect_prefixes(root, 3, prefixes);
  }
  std::vector<DsMaxResult> parts(prefixes.size());
  const auto count = static_cast<std::int64_t>(prefixes.size());
  auto solve = [&](std::int64_t i) {
    DsSearch s(t, b, budget);
    for (int x : prefixes[i]) s.push(x);
    s.dfs();
    parts[i].length = static_cast<int>(s.best().size());
    parts[i].witness = s.best();
    parts[i].nodes = s.nodes();
    parts[i].optimal = !s.exhausted();
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) solve(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) solve(i);
  }
  for (const auto& p : parts) {
    res.nodes += p.nodes;
    res.optimal = res.optimal && p.optimal;
    if (p.length > res.length) {
      res.length = p.length;
      res.witness = p.witness;
    }
  }
  if (res.nodes > budget) res.optimal = false;
  return res;
}

}  // namespace

DsMaxResult max_ds_length(int t, int b, std::uint64_t budget) { return run<true>(t, b, budget); }

DsMaxResult max_ds_length_serial(int t, int b, std::uint64_t budget) {
  return run<false>(t, b, budget);
}

}  // namespace npierce
