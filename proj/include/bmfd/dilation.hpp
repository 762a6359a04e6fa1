#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "bmfd/surface.hpp"

namespace bmfd {

/// Squared radii n <= floor(r_max^2) that are sums of three integer squares,
/// ascending, together with their square roots.
struct DistanceSet {
  std::vector<std::int64_t> squared;
  std::vector<double> distances;
};

/// Q(n): lattice points whose exact squared distance to the nearest surface
/// point equals n. Keyed by every representable n <= r_max^2, zero counts
/// included.
struct ShellCounts {
  std::map<std::int64_t, std::int64_t> counts;
};

/// Cumulative dilation volume per nonempty shell. radii[0] == 0 and
/// volumes[0] is the number of surface points.
struct VolumeCurve {
  std::vector<double> radii;
  std::vector<std::int64_t> sq_radii;
  std::vector<std::int64_t> volumes;

  std::size_t size() const noexcept { return radii.size(); }
  friend bool operator==(const VolumeCurve&, const VolumeCurve&) = default;
};

struct DilationResult {
  ShellCounts shells;
  VolumeCurve curve;
};

struct EdtOptions {
  /// Upper bound on the padded lattice size; exceeding it raises VolumeTooLarge.
  std::int64_t max_voxels = std::int64_t{1} << 30;
  /// Worker threads over z-slices; values < 1 mean one.
  int threads = 1;
};

/// Largest integer n with n <= r_max^2, tolerant of rounding in r_max
/// (so that r_max = sqrt(7) yields 7).
std::int64_t max_squared_radius(double r_max);

/// Smallest p with p*p >= n; the per-face padding of the lattice.
int lattice_padding(std::int64_t max_sq_radius);

DistanceSet representable_distances(double r_max);

/// Exact dilation volumes for every representable radius up to r_max.
///
/// Works on the surface bounding box grown by the padding on all six faces;
/// no lattice point outside it can be within r_max of the surface. Each
/// z-slice gets a separable exact squared Euclidean distance transform
/// (lower envelope of parabolas, evaluated in integer arithmetic), so shell
/// membership never depends on floating-point rounding.
DilationResult exact_edt_volumes(const SurfacePointSet& surface, double r_max,
                                 const EdtOptions& options = {});

/// Reference implementation scanning every surface point for every lattice
/// point. Only meant for tiny inputs.
VolumeCurve brute_force_volumes(const SurfacePointSet& surface, double r_max);

/// Cumulative curve from shell counts, dropping empty shells.
VolumeCurve volume_curve_from_shells(const ShellCounts& shells);

/// CSV with header `radius,sq_radius,volume`; radius printed with 6 decimals.
void write_volume_curve_csv(std::ostream& out, const VolumeCurve& curve);

}  // namespace bmfd
