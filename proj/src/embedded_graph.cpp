#include "npierce/embedded_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "npierce/errors.hpp"

namespace npierce {

EmbeddedGraph::EmbeddedGraph(int vertex_count, std::vector<std::array<int, 2>> edges,
                             std::vector<std::vector<int>> rotation)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (vertex_count_ < 0) throw InvalidInput("negative vertex count");
  if (static_cast<int>(rotation_.size()) != vertex_count_)
    throw InvalidInput("rotation must list one cyclic order per vertex");
  adjacency_.assign(vertex_count_, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e];
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_)
      throw InvalidInput("edge " + std::to_string(e) + " has an endpoint out of range");
    if (a == b) throw InvalidInput("edge " + std::to_string(e) + " is a loop");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw InvalidInput("parallel edges are not supported");
  }
  position_.assign(dart_count(), -1);
  for (int v = 0; v < vertex_count_; ++v) {
    for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
      int d = rotation_[v][k];
      if (d < 0 || d >= dart_count())
        throw InvalidInput("rotation at vertex " + std::to_string(v) + " has unknown edge-end " +
                           std::to_string(d));
      if (tail(d) != v)
        throw InvalidInput("edge-end " + std::to_string(d) + " listed at vertex " +
                           std::to_string(v) + " but leaves vertex " + std::to_string(tail(d)));
      if (position_[d] >= 0)
        throw InvalidInput("edge-end " + std::to_string(d) + " listed twice");
      position_[d] = static_cast<int>(k);
    }
  }
  for (int d = 0; d < dart_count(); ++d)
    if (position_[d] < 0)
      throw InvalidInput("edge-end " + std::to_string(d) + " missing from rotation of vertex " +
                         std::to_string(tail(d)));
}

EmbeddedGraph EmbeddedGraph::from_neighbor_order(
    const std::vector<std::vector<int>>& cyclic_neighbors) {
  const int n = static_cast<int>(cyclic_neighbors.size());
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<std::array<int, 2>> edges;
  for (int v = 0; v < n; ++v)
    for (int w : cyclic_neighbors[v]) {
      if (w < 0 || w >= n) throw InvalidInput("neighbour out of range");
      auto key = std::minmax(v, w);
      if (!edge_id.count(key)) {
        edge_id[key] = static_cast<int>(edges.size());
        edges.push_back({v, w});
      }
    }
  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v)
    for (int w : cyclic_neighbors[v]) {
      int e = edge_id.at(std::minmax(v, w));
      rotation[v].push_back(2 * e + (edges[e][0] == v ? 0 : 1));
    }
  return EmbeddedGraph(n, std::move(edges), std::move(rotation));
}

int EmbeddedGraph::next_around(int dart) const {
  const auto& rot = rotation_[tail(dart)];
  return rot[(position_[dart] + 1) % rot.size()];
}

int EmbeddedGraph::prev_around(int dart) const {
  const auto& rot = rotation_[tail(dart)];
  return rot[(position_[dart] + rot.size() - 1) % rot.size()];
}

std::vector<int> EmbeddedGraph::cyclic_neighbors(int v) const {
  std::vector<int> out;
  out.reserve(rotation_[v].size());
  for (int d : rotation_[v]) out.push_back(head(d));
  return out;
}

bool EmbeddedGraph::adjacent(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int EmbeddedGraph::edge_between(int u, int v) const {
  for (int d : rotation_[u])
    if (head(d) == v) return edge_of(d);
  return -1;
}

bool EmbeddedGraph::connected() const {
  if (vertex_count_ == 0) return true;
  auto dist = bfs_distances(adjacency_, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

SimpleGraph EmbeddedGraph::simple_graph() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (auto [a, b] : edges_) e.emplace_back(a, b);
  return SimpleGraph(vertex_count_, std::move(e));
}

FacialWalk face_from_dart(const EmbeddedGraph& g, int dart) {
  FacialWalk walk;
  int d = dart;
  do {
    walk.darts.push_back(d);
    walk.vertices.push_back(g.tail(d));
    d = g.face_next(d);
  } while (d != dart);
  return walk;
}

std::vector<FacialWalk> trace_faces(const EmbeddedGraph& g) {
  if (!g.connected()) throw InvalidInput("face tracing requires a connected graph");
  std::vector<char> seen(g.dart_count(), 0);
  std::vector<FacialWalk> faces;
  for (int d = 0; d < g.dart_count(); ++d) {
    if (seen[d]) continue;
    faces.push_back(face_from_dart(g, d));
    for (int x : faces.back().darts) seen[x] = 1;
  }
  return faces;
}

int euler_genus(const EmbeddedGraph& g) {
  if (g.edge_count() == 0) {
    if (g.vertex_count() > 1) throw InvalidInput("genus requires a connected graph");
    return 0;
  }
  const int f = static_cast<int>(trace_faces(g).size());
  const int twice = 2 - g.vertex_count() + g.edge_count() - f;
  if (twice < 0 || twice % 2 != 0)
    throw InvalidInput("inconsistent rotation system: 2 - V + E - F = " + std::to_string(twice));
  return twice / 2;
}

std::vector<int> bfs_distances(const Adjacency& adj, int source) {
  std::vector<int> dist(adj.size(), kInfinity);
  std::vector<int> queue;
  queue.reserve(adj.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : adj[v])
      if (dist[w] == kInfinity) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

int bfs_distance(const EmbeddedGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw InvalidInput("vertex out of range");
  return bfs_distances(g.adjacency(), u)[v];
}

int edge_distance(const EmbeddedGraph& g, int u, int e) {
  auto dist = bfs_distances(g.adjacency(), u);
  return std::max(dist[g.edge(e)[0]], dist[g.edge(e)[1]]);
}

namespace {

// Shortest cycle through the BFS tree rooted at `root`; exact when minimised
// over all roots.
int shortest_cycle_from(const Adjacency& adj, int root) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> queue{root};
  dist[root] = 0;
  int best = kInfinity;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    if (2 * dist[v] + 1 >= best) break;
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      } else if (parent[v] != w) {
        best = std::min(best, dist[v] + dist[w] + 1);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth_serial(const Adjacency& adj) {
  int best = kInfinity;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    best = std::min(best, shortest_cycle_from(adj, v));
  if (best == kInfinity) return std::nullopt;
  return best;
}

std::optional<int> girth(const Adjacency& adj) {
  int best = kInfinity;
  const int n = static_cast<int>(adj.size());
#pragma omp parallel for reduction(min : best) schedule(dynamic)
  for (int v = 0; v < n; ++v) best = std::min(best, shortest_cycle_from(adj, v));
  if (best == kInfinity) return std::nullopt;
  return best;
}

std::vector<std::vector<int>> all_pairs_distances_serial(const Adjacency& adj) {
  std::vector<std::vector<int>> d(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) d[v] = bfs_distances(adj, static_cast<int>(v));
  return d;
}

std::vector<std::vector<int>> all_pairs_distances(const Adjacency& adj) {
  std::vector<std::vector<int>> d(adj.size());
  const int n = static_cast<int>(adj.size());
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) d[v] = bfs_distances(adj, v);
  return d;
}

std::vector<int> r_neighborhood(const Adjacency& adj, int u, int r) {
  if (r < 0) throw InvalidInput("neighbourhood radius must be nonnegative");
  if (u < 0 || u >= static_cast<int>(adj.size())) throw InvalidInput("vertex out of range");
  auto dist = bfs_distances(adj, u);
  std::vector<int> out;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] <= r) out.push_back(static_cast<int>(v));
  return out;
}

bool is_planar(const SimpleGraph& graph) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(graph.vertex_count);
  for (auto [u, v] : graph.edges) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool induces_connected(const Adjacency& adj, const std::vector<int>& vertices) {
  if (vertices.empty()) return true;
  std::vector<char> inside(adj.size(), 0);
  for (int v : vertices) inside[v] = 1;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertices.size();
}

SubgraphSystem::SubgraphSystem(EmbeddedGraph host, std::vector<std::vector<int>> members,
                               std::vector<std::string> labels)
    : host_(std::move(host)), members_(std::move(members)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != members_.size())
    throw InvalidInput("label count does not match member count");
  const int n = host_.vertex_count();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto& m = members_[i];
    if (m.empty()) throw InvalidInput("member " + std::to_string(i) + " is empty");
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.front() < 0 || m.back() >= n)
      throw InvalidInput("member " + std::to_string(i) + " has a vertex out of range");
    if (!induces_connected(host_.adjacency(), m))
      throw InvalidInput("member " + std::to_string(i) + " does not induce a connected subgraph");
    std::vector<char> in(n, 0);
    for (int v : m) in[v] = 1;
    membership_.push_back(std::move(in));
  }
}

SetFamily SubgraphSystem::to_set_family() const {
  return SetFamily(static_cast<std::size_t>(host_.vertex_count()), members_, labels_);
}

std::vector<int> contracted_rotation(const EmbeddedGraph& g, const std::vector<int>& component) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (int v : component) inside[v] = 1;
  const int root = *std::min_element(component.begin(), component.end());
  // BFS spanning tree of the component; tree edges get contracted.
  std::vector<char> tree_edge(g.edge_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int d : g.rotation(v)) {
      int w = g.head(d);
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        tree_edge[EmbeddedGraph::edge_of(d)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> order;
  if (g.degree(root) == 0) return order;
  const int start = g.rotation(root)[0];
  int d = start;
  do {
    if (tree_edge[EmbeddedGraph::edge_of(d)]) {
      d = g.next_around(EmbeddedGraph::twin(d));
    } else {
      order.push_back(d);
      d = g.next_around(d);
    }
  } while (d != start);
  return order;
}

namespace {

std::vector<std::vector<int>> intersection_components(const SubgraphSystem& sys, std::size_t i,
                                                      std::size_t j) {
  const auto& g = sys.host();
  std::vector<char> shared(g.vertex_count(), 0);
  for (int v : sys.member(i))
    if (sys.in_member(j, v)) shared[v] = 1;
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!shared[v] || seen[v]) continue;
    std::vector<int> comp;
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : g.adjacency()[x])
        if (shared[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

CrossFreeVerdict cross_free_check(const SubgraphSystem& sys) {
  const auto& g = sys.host();
  CrossFreeVerdict verdict;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      for (const auto& comp : intersection_components(sys, i, j)) {
        // 1: edge of H_i only, 2: edge of H_j only; shared or foreign edges skipped.
        std::vector<int> labels;
        for (int d : contracted_rotation(g, comp)) {
          auto [a, b] = g.edge(EmbeddedGraph::edge_of(d));
          bool in_i = sys.in_member(i, a) && sys.in_member(i, b);
          bool in_j = sys.in_member(j, a) && sys.in_member(j, b);
          if (in_i != in_j) labels.push_back(in_i ? 1 : 2);
        }
        int changes = 0;
        for (std::size_t k = 0; k < labels.size(); ++k)
          if (labels[k] != labels[(k + 1) % labels.size()]) ++changes;
        if (changes >= 4) {
          verdict.cross_free = false;
          verdict.crossing = Crossing{static_cast<int>(i), static_cast<int>(j), comp.front()};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace npierce
