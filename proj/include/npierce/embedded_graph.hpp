#pragma once

// Combinatorial embeddings via rotation systems.
//
// Edge e = (a, b) owns two edge-ends (darts): 2e+0 leaves a, 2e+1 leaves b.
// The rotation at v is the cyclic order of the darts leaving v. Faces are
// traced with face_next(d) = rotation successor of twin(d) at head(d).

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "npierce/setsystem.hpp"

namespace npierce {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  // `rotation[v]` lists dart ids leaving v in cyclic order.
  EmbeddedGraph(int vertex_count, std::vector<std::array<int, 2>> edges,
                std::vector<std::vector<int>> rotation);

  // Builds edges and darts from cyclic neighbour lists; edge ids follow the
  // first appearance of each pair when scanning vertices in order.
  static EmbeddedGraph from_neighbor_order(const std::vector<std::vector<int>>& cyclic_neighbors);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const std::array<int, 2>& edge(int e) const { return edges_[e]; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }
  std::span<const int> rotation(int v) const { return rotation_[v]; }

  static int twin(int dart) { return dart ^ 1; }
  static int edge_of(int dart) { return dart >> 1; }
  int tail(int dart) const { return edges_[dart >> 1][dart & 1]; }
  int head(int dart) const { return edges_[dart >> 1][(dart & 1) ^ 1]; }

  int next_around(int dart) const;
  int prev_around(int dart) const;
  int face_next(int dart) const { return next_around(twin(dart)); }

  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  // Neighbours in rotation order.
  std::vector<int> cyclic_neighbors(int v) const;
  // Sorted neighbour lists.
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool adjacent(int u, int v) const;
  int edge_between(int u, int v) const;  // -1 when absent
  bool connected() const;

  SimpleGraph simple_graph() const;

 private:
  int vertex_count_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;  // dart -> index in its tail's rotation
  std::vector<std::vector<int>> adjacency_;
};

struct FacialWalk {
  std::vector<int> darts;
  std::vector<int> vertices;  // tail of each dart

  std::size_t length() const { return darts.size(); }
};

// Faces in order of their lowest dart. Requires a connected graph.
std::vector<FacialWalk> trace_faces(const EmbeddedGraph& g);
FacialWalk face_from_dart(const EmbeddedGraph& g, int dart);

// Orientable genus of this embedding: (2 - V + E - F) / 2.
int euler_genus(const EmbeddedGraph& g);

using Adjacency = std::vector<std::vector<int>>;

// Shortest cycle length, or nullopt for forests.
std::optional<int> girth(const Adjacency& adj);
std::optional<int> girth_serial(const Adjacency& adj);
inline std::optional<int> girth(const EmbeddedGraph& g) { return girth(g.adjacency()); }

std::vector<int> bfs_distances(const Adjacency& adj, int source);
int bfs_distance(const EmbeddedGraph& g, int u, int v);
// d(u, e) = max(d(u, a), d(u, b)) for e = ab.
int edge_distance(const EmbeddedGraph& g, int u, int e);

std::vector<std::vector<int>> all_pairs_distances(const Adjacency& adj);
std::vector<std::vector<int>> all_pairs_distances_serial(const Adjacency& adj);

// Vertices at distance <= r from u, ascending.
std::vector<int> r_neighborhood(const Adjacency& adj, int u, int r);
inline std::vector<int> r_neighborhood(const EmbeddedGraph& g, int u, int r) {
  return r_neighborhood(g.adjacency(), u, r);
}

bool is_planar(const SimpleGraph& graph);

// Host graph plus connected vertex-subgraphs (members are induced subgraphs).
class SubgraphSystem {
 public:
  SubgraphSystem(EmbeddedGraph host, std::vector<std::vector<int>> members,
                 std::vector<std::string> labels = {});

  const EmbeddedGraph& host() const { return host_; }
  const std::vector<std::vector<int>>& members() const { return members_; }
  const std::vector<int>& member(std::size_t i) const { return members_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return members_.size(); }
  bool in_member(std::size_t i, int v) const { return membership_[i][v] != 0; }

  // Universe = host vertices, sets = members.
  SetFamily to_set_family() const;

 private:
  EmbeddedGraph host_;
  std::vector<std::vector<int>> members_;
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> membership_;
};

bool induces_connected(const Adjacency& adj, const std::vector<int>& vertices);

struct Crossing {
  int first = -1;
  int second = -1;
  int vertex = -1;  // lowest vertex of the contracted component
};

struct CrossFreeVerdict {
  bool cross_free = true;
  std::optional<Crossing> crossing;
};

// Crossing test on the reduced graphs R(H_i, H_j).
CrossFreeVerdict cross_free_check(const SubgraphSystem& sys);

// Circular edge-end order around the contracted image of `component` (a
// connected vertex set), obtained by walking around a spanning tree of it.
std::vector<int> contracted_rotation(const EmbeddedGraph& g, const std::vector<int>& component);

}  // namespace npierce
