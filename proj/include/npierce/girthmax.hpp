#pragma once

// Edge-maximal plane graphs with a girth constraint: maximality verification,
// the odd-girth subdivision reduction, the pierce-point partition of a facial
// cycle with its structural checks, and bounded search for long faces.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npierce/embedded_graph.hpp"

namespace npierce {

struct AddablePair {
  int u = -1;
  int v = -1;
  int face = -1;  // first face (trace_faces order) holding both
};

struct MaximalityReport {
  std::optional<int> girth;
  bool girth_ok = false;
  std::vector<AddablePair> addable_pairs;
  bool is_maximal = false;
  int max_face_length = 0;
};

// Checks maximality against the fixed embedding: an edge can be added inside
// a face between non-adjacent cofacial u, v iff d(u, v) >= ell - 1.
MaximalityReport verify_maximal(const EmbeddedGraph& g, int ell);

// Every edge ab becomes a-m-b; vertex V+e is the midpoint of edge e.
EmbeddedGraph subdivide_even(const EmbeddedGraph& g);
// Dart of the subdivided graph leaving the same vertex along the same edge.
int subdivided_dart(const EmbeddedGraph& g, int dart);

bool is_two_connected(const EmbeddedGraph& g);

struct Run {
  int cls = -1;
  int start = -1;  // position along the cycle
  int length = 0;
};

struct PartitionReport {
  std::vector<int> cycle;      // v_1..v_m
  std::vector<int> pierce;     // z_1..z_T
  std::vector<int> classes;    // per cycle position, index into pierce
  std::vector<int> distance;   // d(v_i, z_class(i))
  std::vector<Run> runs;       // cyclic maximal monochromatic runs
  bool pierces = true;         // every v_i within ell/2 - 1 of some z
  bool run_length_ok = false;
  bool unimodal_ok = false;
  bool alternation_ok = false;
  int alternation_b = 2;
  long long bound_value = 0;   // (2T - 1)(ell - 1)
  int cycle_length = 0;
  int ell = 0;
};

struct RunFlags {
  bool run_length_ok = true;
  bool unimodal_ok = true;
};

// Assigns each cycle vertex to the lowest-index nearest pierce vertex, then
// runs check_runs and check_alternation(b).
PartitionReport partition_cycle(const EmbeddedGraph& g, const std::vector<int>& cycle,
                                const std::vector<int>& pierce, int ell, int b = 2);

RunFlags check_runs(const PartitionReport& report, const EmbeddedGraph& g, int ell);

// True iff no two classes alternate (i j)^b along the linear order of the
// contracted class sequence.
bool check_alternation(const PartitionReport& report, int b);
bool alternation_free(const std::vector<int>& sequence, int b);

struct FaceBoundReport {
  int ell = 0;                  // requested girth bound
  int working_ell = 0;          // ell, or 2*ell after subdivision
  bool subdivided = false;
  int face_length = 0;          // m on the input graph
  int pierce_size = 0;          // T
  PartitionReport partition;    // on the working graph
  bool pairwise_intersecting = false;
  bool non_piercing = false;
  bool cross_free = false;
  long long bound_on_input = 0; // bound on m for the input graph
  bool bound_holds = false;
  bool all_checks_hold = false;
};

// Neighbourhoods of the face -> exact piercing -> partition -> checks. Odd ell
// is reduced by subdivision and the resulting bound halved.
FaceBoundReport analyze_face(const EmbeddedGraph& g, const FacialWalk& face, int ell, int b = 2);

struct SearchBudget {
  std::uint64_t nodes = 200'000;
  double seconds = 0;  // 0 = no wall-clock limit (keeps results reproducible)
};

struct SearchLogRow {
  int vertices = 0;
  int edges = 0;
  std::uint64_t states = 0;
  std::uint64_t nodes_expanded = 0;
  int best_face = 0;
  double elapsed = 0;
};

struct FmaxResult {
  int ell = 0;
  int n_max = 0;
  int best_face_length = 0;
  std::optional<EmbeddedGraph> witness;
  std::vector<EmbeddedGraph> maximal_witnesses;  // one per distinct best-so-far value
  bool complete = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t maximal_found = 0;
  std::vector<SearchLogRow> log;
};

// Enumerates 2-connected plane graphs of girth >= ell with at most n_max
// vertices, growing ears inside faces from cycles, one canonical map per
// isomorphism class (mirror images identified). Only reports lower-bound
// witnesses; `complete` means the whole space up to n_max was covered.
FmaxResult search_fmax(int ell, int n_max, const SearchBudget& budget = {});
FmaxResult search_fmax_serial(int ell, int n_max, const SearchBudget& budget = {});

// Canonical code of a plane map under orientation-preserving and -reversing
// isomorphism; equal codes iff isomorphic maps (connected graphs).
std::vector<int> canonical_map_code(const EmbeddedGraph& g);
EmbeddedGraph decode_map(const std::vector<int>& code);

}  // namespace npierce
