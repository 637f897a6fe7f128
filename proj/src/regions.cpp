#include "npierce/regions.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "npierce/errors.hpp"
#include "npierce/rng.hpp"

namespace npierce {

std::string to_string(DiskMode mode) {
  return mode == DiskMode::general ? "general" : "pairwise-intersecting";
}

DiskMode disk_mode_from_string(const std::string& s) {
  if (s == "general") return DiskMode::general;
  if (s == "pairwise-intersecting") return DiskMode::pairwise_intersecting;
  throw InvalidInput("unknown disk mode '" + s + "'");
}

bool disks_overlap(const Disk& a, const Disk& b) {
  return std::hypot(a.center.x - b.center.x, a.center.y - b.center.y) <=
         a.radius + b.radius + kBoundaryTolerance;
}

DiskFamily random_disk_family(int n, std::uint64_t seed, DiskMode mode, const DiskParams& params) {
  if (n < 1) throw InvalidInput("disk family needs n >= 1");
  if (params.min_radius <= 0 || params.max_radius < params.min_radius)
    throw InvalidInput("invalid radius range");
  Rng rng(seed);
  DiskFamily fam;
  fam.seed = seed;
  fam.mode = mode;
  std::uint64_t draws = 0;
  while (static_cast<int>(fam.disks.size()) < n) {
    if (++draws > params.resample_budget)
      throw ResourceLimit("disk resample budget exhausted after " + std::to_string(draws - 1) +
                          " draws");
    Disk d;
    d.center.x = rng.uniform(0, params.box);
    d.center.y = rng.uniform(0, params.box);
    d.radius = rng.uniform(params.min_radius, params.max_radius);
    if (mode == DiskMode::pairwise_intersecting) {
      bool ok = std::all_of(fam.disks.begin(), fam.disks.end(),
                            [&](const Disk& other) { return disks_overlap(d, other); });
      if (!ok) continue;
    }
    fam.disks.push_back(d);
  }
  return fam;
}

namespace {

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool inside(const Disk& d, Point p) { return dist(d.center, p) <= d.radius + kBoundaryTolerance; }

int depth(const std::vector<Disk>& disks, Point p) {
  int k = 0;
  for (const auto& d : disks) k += inside(d, p);
  return k;
}

// Deepest of a fixed grid of samples inside both disks (first wins ties).
std::optional<Point> lens_witness(const std::vector<Disk>& disks, int i, int j) {
  const Disk& a = disks[i];
  const Disk& b = disks[j];
  const double d = dist(a.center, b.center);
  double ux = 1, uy = 0;
  if (d > 0) {
    ux = (b.center.x - a.center.x) / d;
    uy = (b.center.y - a.center.y) / d;
  }
  const double lo = std::max(-a.radius, d - b.radius);
  const double hi = std::min(a.radius, d + b.radius);
  if (hi - lo <= 1e-12) return std::nullopt;
  std::optional<Point> best;
  int best_depth = -1;
  for (int k = 1; k <= 9; ++k) {
    const double t = lo + k * (hi - lo) / 10.0;
    const double wa = a.radius * a.radius - t * t;
    const double wb = b.radius * b.radius - (t - d) * (t - d);
    const double w = std::sqrt(std::max(0.0, std::min(wa, wb)));
    for (double s : {0.0, -0.4, 0.4, -0.8, 0.8}) {
      Point p{a.center.x + t * ux - s * w * uy, a.center.y + t * uy + s * w * ux};
      if (!inside(a, p) || !inside(b, p)) continue;
      int dp = depth(disks, p);
      if (dp > best_depth) {
        best_depth = dp;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace

DiskDiscretization disks_to_set_system(const DiskFamily& fam) {
  const auto& disks = fam.disks;
  const int n = static_cast<int>(disks.size());
  for (const auto& d : disks)
    if (!(d.radius > 0)) throw InvalidInput("disk radius must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(disks[i].center, disks[j].center) == 0 && disks[i].radius == disks[j].radius)
        throw InvalidInput("disks " + std::to_string(i) + " and " + std::to_string(j) +
                           " have identical boundary circles");

  DiskDiscretization out;
  std::vector<UniversePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({disks[i].center, PointOrigin::center, i, -1});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Disk& a = disks[i];
      const Disk& b = disks[j];
      const double d = dist(a.center, b.center);
      if (d > a.radius + b.radius + kBoundaryTolerance) continue;
      if (d > 0 && d >= std::abs(a.radius - b.radius) - kBoundaryTolerance) {
        const double along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2 * d);
        const double h2 = a.radius * a.radius - along * along;
        const double ux = (b.center.x - a.center.x) / d;
        const double uy = (b.center.y - a.center.y) / d;
        const Point mid{a.center.x + along * ux, a.center.y + along * uy};
        if (h2 <= kBoundaryTolerance * std::max(1.0, a.radius)) {
          ++out.degenerate;  // tangent circles
          pts.push_back({mid, PointOrigin::circle_crossing, i, j});
        } else {
          const double h = std::sqrt(h2);
          pts.push_back({{mid.x - h * uy, mid.y + h * ux}, PointOrigin::circle_crossing, i, j});
          pts.push_back({{mid.x + h * uy, mid.y - h * ux}, PointOrigin::circle_crossing, i, j});
        }
      }
      if (auto w = lens_witness(disks, i, j)) pts.push_back({*w, PointOrigin::lens_witness, i, j});
    }
  }

  std::stable_sort(pts.begin(), pts.end(), [](const UniversePoint& p, const UniversePoint& q) {
    return std::tie(p.at.x, p.at.y, p.origin, p.first, p.second) <
           std::tie(q.at.x, q.at.y, q.origin, q.first, q.second);
  });
  for (const auto& p : pts) {
    if (!out.points.empty()) {
      const auto& last = out.points.back().at;
      if (std::abs(last.x - p.at.x) <= 1e-12 && std::abs(last.y - p.at.y) <= 1e-12) continue;
    }
    out.points.push_back(p);
  }

  std::vector<std::vector<int>> sets(n);
  for (std::size_t k = 0; k < out.points.size(); ++k) {
    const auto& p = out.points[k];
    if (p.origin == PointOrigin::circle_crossing) ++out.circle_crossings;
    if (p.origin == PointOrigin::lens_witness) ++out.lens_witnesses;
    for (int i = 0; i < n; ++i) {
      const double gap = dist(disks[i].center, p.at) - disks[i].radius;
      if (gap <= kBoundaryTolerance) sets[i].push_back(static_cast<int>(k));
      const bool generator =
          p.origin == PointOrigin::circle_crossing && (i == p.first || i == p.second);
      if (!generator && std::abs(gap) <= kBoundaryTolerance) ++out.degenerate;
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("disk" + std::to_string(i));
  out.family = SetFamily(out.points.size(), std::move(sets), std::move(labels));
  return out;
}

NeighborhoodSystem facial_neighborhoods(const EmbeddedGraph& g, const FacialWalk& face, int ell) {
  if (ell < 4 || ell % 2 != 0)
    throw InvalidInput("neighbourhood systems need even ell >= 4 (subdivide odd instances first)");
  if (auto gi = girth(g); gi && *gi < ell)
    throw InvalidInput("host girth " + std::to_string(*gi) + " is below ell = " +
                       std::to_string(ell));
  const int radius = ell / 2 - 1;
  std::vector<std::vector<int>> members;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    members.push_back(r_neighborhood(g, face.vertices[i], radius));
    labels.push_back("N" + std::to_string(i));
  }
  return NeighborhoodSystem{SubgraphSystem(g, std::move(members), std::move(labels)),
                            face.vertices, ell};
}

PairwiseVerdict check_pairwise_intersecting(const SubgraphSystem& sys, bool host_is_maximal) {
  PairwiseVerdict v;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      bool meet = std::any_of(sys.member(i).begin(), sys.member(i).end(),
                              [&](int x) { return sys.in_member(j, x); });
      if (!meet) {
        v.pairwise_intersecting = false;
        v.disjoint_pair = {static_cast<int>(i), static_cast<int>(j)};
        v.theorem_violation = host_is_maximal;
        return v;
      }
    }
  return v;
}

NonPiercingVerdict discrete_non_piercing(const SubgraphSystem& sys) {
  NonPiercingVerdict v;
  const auto& adj = sys.host().adjacency();
  for (std::size_t f = 0; f < sys.size(); ++f)
    for (std::size_t g = 0; g < sys.size(); ++g) {
      if (f == g) continue;
      std::vector<int> rest;
      for (int x : sys.member(f))
        if (!sys.in_member(g, x)) rest.push_back(x);
      if (!induces_connected(adj, rest)) {
        v.non_piercing = false;
        v.witness = {static_cast<int>(f), static_cast<int>(g)};
        return v;
      }
    }
  return v;
}

}  // namespace npierce
