#pragma once

// Test-instance generators and the discrete stand-ins for continuous regions:
// disk families discretised to set systems, facial neighbourhood systems,
// and the discrete non-piercing / pairwise-intersection checks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npierce/embedded_graph.hpp"
#include "npierce/setsystem.hpp"

namespace npierce {

struct Point {
  double x = 0;
  double y = 0;
};

struct Disk {
  Point center;
  double radius = 1;
};

enum class DiskMode { general, pairwise_intersecting };

std::string to_string(DiskMode mode);
DiskMode disk_mode_from_string(const std::string& s);

struct DiskFamily {
  std::vector<Disk> disks;
  std::uint64_t seed = 0;
  DiskMode mode = DiskMode::general;
};

struct DiskParams {
  double box = 10.0;  // centres uniform in [0, box]^2
  double min_radius = 0.5;
  double max_radius = 3.0;
  std::uint64_t resample_budget = 1'000'000;
};

// Pairwise-intersecting mode resamples each new disk until it meets every
// disk accepted so far.
DiskFamily random_disk_family(int n, std::uint64_t seed, DiskMode mode,
                              const DiskParams& params = {});

inline constexpr double kBoundaryTolerance = 1e-9;

enum class PointOrigin { circle_crossing, center, lens_witness };

struct UniversePoint {
  Point at;
  PointOrigin origin = PointOrigin::center;
  int first = -1;  // generating disk(s)
  int second = -1;
};

struct DiskDiscretization {
  SetFamily family;
  std::vector<UniversePoint> points;
  int circle_crossings = 0;
  int lens_witnesses = 0;
  // Points within tolerance of a boundary of a disk that did not generate
  // them, plus tangent circle pairs.
  int degenerate = 0;
};

DiskDiscretization disks_to_set_system(const DiskFamily& d);

bool disks_overlap(const Disk& a, const Disk& b);

struct NeighborhoodSystem {
  SubgraphSystem system;
  std::vector<int> cycle;
  int ell = 0;
};

// Member i is the (ell/2 - 1)-neighbourhood of the i-th vertex of the face.
NeighborhoodSystem facial_neighborhoods(const EmbeddedGraph& g, const FacialWalk& face, int ell);

struct PairwiseVerdict {
  bool pairwise_intersecting = true;
  std::optional<std::pair<int, int>> disjoint_pair;
  bool theorem_violation = false;  // disjoint pair on a verified-maximal host
};

PairwiseVerdict check_pairwise_intersecting(const SubgraphSystem& sys, bool host_is_maximal);

struct NonPiercingVerdict {
  bool non_piercing = true;
  std::optional<std::pair<int, int>> witness;  // (F, G) with F \ G disconnected
};

NonPiercingVerdict discrete_non_piercing(const SubgraphSystem& sys);

}  // namespace npierce
