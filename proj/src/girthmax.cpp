#include "npierce/girthmax.hpp"

#include <algorithm>
#include <set>

#include "npierce/errors.hpp"
#include "npierce/regions.hpp"
#include "npierce/setsystem.hpp"

namespace npierce {

MaximalityReport verify_maximal(const EmbeddedGraph& g, int ell) {
  if (ell < 3) throw InvalidInput("maximality needs ell >= 3");
  euler_genus(g);  // throws on a disconnected graph or inconsistent rotation
  MaximalityReport rep;
  rep.girth = girth(g);
  rep.girth_ok = !rep.girth || *rep.girth >= ell;
  const auto faces = trace_faces(g);
  const auto dist = all_pairs_distances(g.adjacency());
  std::set<std::pair<int, int>> reported;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    rep.max_face_length = std::max(rep.max_face_length, static_cast<int>(faces[f].length()));
    std::vector<int> verts = faces[f].vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        int u = verts[a];
        int v = verts[b];
        if (g.adjacent(u, v) || dist[u][v] < ell - 1) continue;
        if (reported.insert({u, v}).second)
          rep.addable_pairs.push_back({u, v, static_cast<int>(f)});
      }
  }
  rep.is_maximal = rep.girth_ok && rep.addable_pairs.empty();
  return rep;
}

int subdivided_dart(const EmbeddedGraph& g, int dart) {
  (void)g;
  const int e = EmbeddedGraph::edge_of(dart);
  // side 0 leaves edge(e)[0] along new edge 2e; side 1 leaves edge(e)[1] along 2e+1
  return (dart & 1) == 0 ? 2 * (2 * e) : 2 * (2 * e + 1) + 1;
}

EmbeddedGraph subdivide_even(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::array<int, 2>> edges;
  edges.reserve(2 * m);
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edge(e);
    edges.push_back({a, n + e});
    edges.push_back({n + e, b});
  }
  std::vector<std::vector<int>> rotation(n + m);
  for (int v = 0; v < n; ++v)
    for (int d : g.rotation(v)) rotation[v].push_back(subdivided_dart(g, d));
  for (int e = 0; e < m; ++e) rotation[n + e] = {2 * (2 * e) + 1, 2 * (2 * e + 1)};
  return EmbeddedGraph(n + m, std::move(edges), std::move(rotation));
}

bool is_two_connected(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !g.connected()) return false;
  const auto& adj = g.adjacency();
  for (int cut = 0; cut < n; ++cut) {
    std::vector<char> seen(n, 0);
    seen[cut] = 1;
    int start = cut == 0 ? 1 : 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n - 1) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> pierce_distances(const EmbeddedGraph& g,
                                               const std::vector<int>& pierce) {
  std::vector<std::vector<int>> d;
  for (int z : pierce) {
    if (z < 0 || z >= g.vertex_count()) throw InvalidInput("pierce vertex out of range");
    d.push_back(bfs_distances(g.adjacency(), z));
  }
  return d;
}

}  // namespace

PartitionReport partition_cycle(const EmbeddedGraph& g, const std::vector<int>& cycle,
                                const std::vector<int>& pierce, int ell, int b) {
  if (pierce.empty()) throw InvalidInput("pierce set is empty");
  if (cycle.empty()) throw InvalidInput("cycle is empty");
  PartitionReport rep;
  rep.cycle = cycle;
  rep.pierce = pierce;
  rep.ell = ell;
  rep.cycle_length = static_cast<int>(cycle.size());
  rep.alternation_b = b;
  const auto dz = pierce_distances(g, pierce);
  const int reach = ell / 2 - 1;
  for (int v : cycle) {
    int cls = 0;
    for (std::size_t j = 1; j < pierce.size(); ++j)
      if (dz[j][v] < dz[cls][v]) cls = static_cast<int>(j);
    rep.classes.push_back(cls);
    rep.distance.push_back(dz[cls][v]);
    if (dz[cls][v] > reach) rep.pierces = false;
  }

  const int m = rep.cycle_length;
  int first_break = -1;
  for (int i = 0; i < m; ++i)
    if (rep.classes[i] != rep.classes[(i + m - 1) % m]) {
      first_break = i;
      break;
    }
  if (first_break < 0) {
    rep.runs.push_back({rep.classes[0], 0, m});
  } else {
    for (int k = 0; k < m; ++k) {
      int i = (first_break + k) % m;
      if (k == 0 || rep.classes[i] != rep.runs.back().cls)
        rep.runs.push_back({rep.classes[i], i, 1});
      else
        ++rep.runs.back().length;
    }
    std::sort(rep.runs.begin(), rep.runs.end(),
              [](const Run& x, const Run& y) { return x.start < y.start; });
  }

  auto flags = check_runs(rep, g, ell);
  rep.run_length_ok = flags.run_length_ok;
  rep.unimodal_ok = flags.unimodal_ok;
  rep.alternation_ok = check_alternation(rep, b);
  rep.bound_value = (2LL * static_cast<long long>(pierce.size()) - 1) * (ell - 1);
  return rep;
}

RunFlags check_runs(const PartitionReport& report, const EmbeddedGraph& g, int ell) {
  RunFlags flags;
  const auto dz = pierce_distances(g, report.pierce);
  const int m = static_cast<int>(report.cycle.size());
  for (const Run& run : report.runs) {
    if (run.length > ell - 1) flags.run_length_ok = false;
    std::vector<int> d;
    for (int k = 0; k < run.length; ++k) d.push_back(dz[run.cls][report.cycle[(run.start + k) % m]]);
    for (std::size_t h = 0; h + 1 < d.size(); ++h)
      if (std::abs(d[h] - d[h + 1]) != 1) flags.unimodal_ok = false;
    // -d must be strictly unimodal: no interior peak of the distance.
    for (std::size_t h = 1; h + 1 < d.size(); ++h)
      if (d[h - 1] < d[h] && d[h + 1] < d[h]) flags.unimodal_ok = false;
  }
  return flags;
}

bool alternation_free(const std::vector<int>& sequence, int b) {
  std::vector<int> symbols = sequence;
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (int x : symbols)
    for (int y : symbols) {
      if (x == y) continue;
      int len = 0;
      for (int s : sequence)
        if (s == (len % 2 == 0 ? x : y)) ++len;
      if (len >= 2 * b) return false;
    }
  return true;
}

bool check_alternation(const PartitionReport& report, int b) {
  std::vector<int> contracted;
  for (int c : report.classes)
    if (contracted.empty() || contracted.back() != c) contracted.push_back(c);
  return alternation_free(contracted, b);
}

FaceBoundReport analyze_face(const EmbeddedGraph& g, const FacialWalk& face, int ell, int b) {
  if (ell < 3) throw InvalidInput("ell must be at least 3");
  FaceBoundReport rep;
  rep.ell = ell;
  rep.face_length = static_cast<int>(face.length());
  EmbeddedGraph work = g;
  FacialWalk work_face = face;
  int work_ell = ell;
  if (ell % 2 == 1) {
    work = subdivide_even(g);
    work_face = face_from_dart(work, subdivided_dart(g, face.darts.front()));
    work_ell = 2 * ell;
    rep.subdivided = true;
  }
  rep.working_ell = work_ell;
  const bool maximal = verify_maximal(work, work_ell).is_maximal;
  NeighborhoodSystem ns = facial_neighborhoods(work, work_face, work_ell);
  rep.pairwise_intersecting = check_pairwise_intersecting(ns.system, maximal).pairwise_intersecting;
  rep.non_piercing = discrete_non_piercing(ns.system).non_piercing;
  rep.cross_free = cross_free_check(ns.system).cross_free;
  PiercingCertificate cert = min_piercing(ns.system.to_set_family());
  rep.pierce_size = static_cast<int>(cert.size());
  rep.partition = partition_cycle(work, work_face.vertices, cert.points, work_ell, b);
  rep.bound_on_input = rep.subdivided ? rep.partition.bound_value / 2 : rep.partition.bound_value;
  rep.bound_holds = rep.face_length <= rep.bound_on_input;
  rep.all_checks_hold = rep.partition.pierces && rep.partition.run_length_ok &&
                        rep.partition.unimodal_ok && rep.partition.alternation_ok &&
                        rep.bound_holds;
  return rep;
}

}  // namespace npierce
