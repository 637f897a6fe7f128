#pragma once

// Davenport-Schinzel admissibility and exact extremal lengths for small
// alphabets. The asymptotic lambda_b(t) behaviour (inverse-Ackermann growth)
// is not evaluated; only exact small values are searched.

#include <cstdint>
#include <vector>

namespace npierce {

struct SymbolSequence {
  std::vector<int> symbols;  // over {0, ..., t-1}
  int t = 1;
  int b = 2;
};

struct DsVerdict {
  bool admissible = true;
  // Adjacent repeat: {i, i+1}. Alternation: the lexicographically earliest
  // index tuple h_1 < ... < h_2b spelling (x y)^b.
  std::vector<int> witness;
};

DsVerdict is_ds_admissible(const SymbolSequence& s);

struct DsMaxResult {
  int t = 1;
  int b = 2;
  int length = 0;
  std::vector<int> witness;
  bool optimal = true;  // false when the node budget ran out
  std::uint64_t nodes = 0;
};

// Exhaustive DFS with first occurrences forced into increasing symbol order.
DsMaxResult max_ds_length(int t, int b, std::uint64_t budget = 500'000'000);
DsMaxResult max_ds_length_serial(int t, int b, std::uint64_t budget = 500'000'000);

}  // namespace npierce
