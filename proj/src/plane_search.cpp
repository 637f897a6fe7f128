// Bounded enumeration of 2-connected plane graphs with a girth floor.

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "npierce/errors.hpp"
#include "npierce/girthmax.hpp"

namespace npierce {

namespace {

// BFS numbering from `start`; returns false as soon as the code being built
// exceeds `best` (when `have_best`).
bool code_from(const EmbeddedGraph& g, int start, bool mirrored, std::vector<int>& out,
               const std::vector<int>& best, bool have_best) {
  const int n = g.vertex_count();
  std::vector<int> num(n, -1);
  std::vector<int> entry(n, -1);
  std::vector<int> order;
  order.reserve(n);
  out.clear();
  bool less = !have_best;
  auto emit = [&](int x) {
    if (!less) {
      int b = best[out.size()];
      if (x > b) return false;
      if (x < b) less = true;
    }
    out.push_back(x);
    return true;
  };
  const int root = g.tail(start);
  num[root] = 0;
  entry[root] = start;
  order.push_back(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    if (!emit(g.degree(v))) return false;
    int d = entry[v];
    for (int s = 0; s < g.degree(v); ++s) {
      const int w = g.head(d);
      if (num[w] < 0) {
        num[w] = static_cast<int>(order.size());
        entry[w] = EmbeddedGraph::twin(d);
        order.push_back(w);
      }
      if (!emit(num[w])) return false;
      d = mirrored ? g.prev_around(d) : g.next_around(d);
    }
  }
  return less;
}

}  // namespace

std::vector<int> canonical_map_code(const EmbeddedGraph& g) {
  if (g.vertex_count() == 0) return {};
  if (g.edge_count() == 0) {
    if (g.vertex_count() > 1) throw InvalidInput("canonical map code needs a connected graph");
    return {0};
  }
  if (!g.connected()) throw InvalidInput("canonical map code needs a connected graph");
  int min_degree = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) min_degree = std::min(min_degree, g.degree(v));
  std::vector<int> best;
  std::vector<int> scratch;
  bool have = false;
  for (int d = 0; d < g.dart_count(); ++d) {
    if (g.degree(g.tail(d)) != min_degree) continue;
    for (bool mirrored : {false, true}) {
      if (code_from(g, d, mirrored, scratch, best, have)) {
        best.swap(scratch);
        have = true;
      }
    }
  }
  return best;
}

EmbeddedGraph decode_map(const std::vector<int>& code) {
  std::vector<std::vector<int>> nbrs;
  std::size_t k = 0;
  while (k < code.size()) {
    int deg = code[k++];
    if (deg < 0 || k + deg > code.size()) throw InvalidInput("malformed map code");
    nbrs.emplace_back(code.begin() + k, code.begin() + k + deg);
    k += deg;
  }
  return EmbeddedGraph::from_neighbor_order(nbrs);
}

namespace {

EmbeddedGraph cycle_graph(int k) {
  std::vector<std::vector<int>> nbrs(k);
  for (int i = 0; i < k; ++i) nbrs[i] = {(i + k - 1) % k, (i + 1) % k};
  return EmbeddedGraph::from_neighbor_order(nbrs);
}

// Adds a path of `length` edges from face position a to face position b,
// drawn inside the face.
EmbeddedGraph add_ear(const EmbeddedGraph& g, const FacialWalk& face, std::size_t a, std::size_t b,
                      int length) {
  const std::size_t len = face.length();
  const int u = face.vertices[a];
  const int v = face.vertices[b];
  const int after_u = EmbeddedGraph::twin(face.darts[(a + len - 1) % len]);
  const int after_v = EmbeddedGraph::twin(face.darts[(b + len - 1) % len]);

  auto edges = g.edges();
  auto rotation = g.rotations();
  const int n = g.vertex_count();
  std::vector<int> path{u};
  for (int i = 1; i < length; ++i) path.push_back(n + i - 1);
  path.push_back(v);
  rotation.resize(n + length - 1);
  const int first_edge = static_cast<int>(edges.size());
  for (int i = 0; i < length; ++i) edges.push_back({path[i], path[i + 1]});
  // interior path vertices: dart back, dart forward
  for (int i = 1; i < length; ++i)
    rotation[path[i]] = {2 * (first_edge + i - 1) + 1, 2 * (first_edge + i)};
  auto insert_after = [&](int vertex, int anchor, int dart) {
    auto& rot = rotation[vertex];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, dart);
  };
  insert_after(u, after_u, 2 * first_edge);
  insert_after(v, after_v, 2 * (first_edge + length - 1) + 1);
  return EmbeddedGraph(n + length - 1, std::move(edges), std::move(rotation));
}

struct Expansion {
  bool maximal = false;
  int max_face = 0;
  std::vector<std::vector<int>> children;
};

Expansion expand_state(const std::vector<int>& code, int ell, int n_max) {
  Expansion out;
  const EmbeddedGraph g = decode_map(code);
  const auto rep = verify_maximal(g, ell);
  out.maximal = rep.is_maximal;
  out.max_face = rep.max_face_length;
  const int n = g.vertex_count();
  const auto dist = all_pairs_distances_serial(g.adjacency());
  std::set<std::vector<int>> seen;
  for (const auto& face : trace_faces(g)) {
    const std::size_t len = face.length();
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = a + 1; b < len; ++b) {
        const int u = face.vertices[a];
        const int v = face.vertices[b];
        for (int length = 1; n + length - 1 <= n_max; ++length) {
          if (length == 1 && g.adjacent(u, v)) continue;
          if (length + dist[u][v] < ell) continue;
          auto child = canonical_map_code(add_ear(g, face, a, b, length));
          if (seen.insert(child).second) out.children.push_back(std::move(child));
        }
      }
  }
  return out;
}

// (vertices, edges) of an encoded map.
std::pair<int, int> code_shape(const std::vector<int>& code) {
  int n = 0;
  int degree_sum = 0;
  for (std::size_t k = 0; k < code.size(); k += code[k] + 1) {
    ++n;
    degree_sum += code[k];
  }
  return {n, degree_sum / 2};
}

template <bool Parallel>
FmaxResult run_search(int ell, int n_max, const SearchBudget& budget) {
  if (ell < 3) throw InvalidInput("ell must be at least 3");
  FmaxResult res;
  res.ell = ell;
  res.n_max = n_max;
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::map<std::pair<int, int>, std::set<std::vector<int>>> buckets;
  for (int k = ell; k <= n_max; ++k) buckets[{k, k}].insert(canonical_map_code(cycle_graph(k)));

  bool truncated = false;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const auto [nv, ne] = node.key();
    std::vector<std::vector<int>> states(node.mapped().begin(), node.mapped().end());
    if (res.nodes_expanded + states.size() > budget.nodes) {
      states.resize(budget.nodes - res.nodes_expanded);
      truncated = true;
    }
    std::vector<Expansion> results(states.size());
    const auto count = static_cast<std::int64_t>(states.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i) results[i] = expand_state(states[i], ell, n_max);
    } else {
      for (std::int64_t i = 0; i < count; ++i) results[i] = expand_state(states[i], ell, n_max);
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto& r = results[i];
      if (r.maximal) {
        ++res.maximal_found;
        if (r.max_face > res.best_face_length) {
          res.best_face_length = r.max_face;
          res.witness = decode_map(states[i]);
          res.maximal_witnesses.push_back(*res.witness);
        }
      }
      for (auto& child : r.children) {
        const auto shape = code_shape(child);
        buckets[shape].insert(std::move(child));
      }
    }
    res.nodes_expanded += states.size();
    res.log.push_back({nv, ne, states.size(), res.nodes_expanded, res.best_face_length, elapsed()});
    if (truncated || (budget.seconds > 0 && elapsed() > budget.seconds)) {
      truncated = true;
      break;
    }
  }
  res.complete = !truncated;
  return res;
}

}  // namespace

FmaxResult search_fmax(int ell, int n_max, const SearchBudget& budget) {
  return run_search<true>(ell, n_max, budget);
}

FmaxResult search_fmax_serial(int ell, int n_max, const SearchBudget& budget) {
  return run_search<false>(ell, n_max, budget);
}

}  // namespace npierce
