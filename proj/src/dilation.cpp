#include "bmfd/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "bmfd/error.hpp"

namespace bmfd {
namespace {

constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max() / 4;

// Breakpoint between two parabolas of the lower envelope, kept as an exact
// fraction num/den with den > 0.
struct Breakpoint {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Exact 1D squared distance transform over `line` (in place):
/// out[p] = min_q (p - q)^2 + in[q]. Entries above `cutoff` are treated as
/// unreachable and written back as kFar.
class LineTransform {
 public:
  explicit LineTransform(std::size_t max_len)
      : sites_(max_len), bounds_(max_len + 1), values_(max_len) {}

  void run(std::int64_t* line, std::size_t stride, std::size_t len, std::int64_t cutoff) {
    int k = -1;
    for (std::size_t qi = 0; qi < len; ++qi) {
      const std::int64_t fq = line[qi * stride];
      if (fq > cutoff) continue;
      const auto q = static_cast<std::int64_t>(qi);
      Breakpoint s;
      while (k >= 0) {
        const std::int64_t v = sites_[k];
        s.num = (fq + q * q) - (values_[k] + v * v);
        s.den = 2 * (q - v);
        // The first envelope segment extends to -infinity.
        if (k > 0 && s.num * bounds_[k].den <= bounds_[k].num * s.den) {
          --k;
        } else {
          break;
        }
      }
      ++k;
      sites_[k] = q;
      values_[k] = fq;
      bounds_[k] = s;
    }

    if (k < 0) {
      for (std::size_t p = 0; p < len; ++p) line[p * stride] = kFar;
      return;
    }
    const int last = k;
    k = 0;
    for (std::size_t pi = 0; pi < len; ++pi) {
      const auto p = static_cast<std::int64_t>(pi);
      while (k < last && bounds_[k + 1].num < p * bounds_[k + 1].den) ++k;
      const std::int64_t d = (p - sites_[k]) * (p - sites_[k]) + values_[k];
      line[pi * stride] = d > cutoff ? kFar : d;
    }
  }

 private:
  std::vector<std::int64_t> sites_;
  std::vector<Breakpoint> bounds_;
  std::vector<std::int64_t> values_;
};

struct Lattice {
  int pad = 0;
  int nx = 0;  // columns incl. padding
  int ny = 0;  // rows incl. padding
  int z_lo = 0;
  int z_hi = 0;

  std::int64_t voxels() const {
    return static_cast<std::int64_t>(nx) * ny * (static_cast<std::int64_t>(z_hi) - z_lo + 1);
  }
};

Lattice padded_lattice(const SurfacePointSet& s, std::int64_t n_max) {
  Lattice l;
  l.pad = lattice_padding(n_max);
  l.nx = s.width + 2 * l.pad;
  l.ny = s.height + 2 * l.pad;
  l.z_lo = s.min_z - l.pad;
  l.z_hi = s.max_z + l.pad;
  return l;
}

void check_radius(double r_max) {
  if (!(r_max >= 1.0) || !std::isfinite(r_max)) {
    throw Error(ErrorCode::InvalidArgument, "r_max must be >= 1, got " + std::to_string(r_max));
  }
}

void check_surface(const SurfacePointSet& s) {
  if (s.width < 1 || s.height < 1 ||
      s.points.size() != static_cast<std::size_t>(s.width) * static_cast<std::size_t>(s.height)) {
    throw Error(ErrorCode::InvalidArgument, "surface must hold one point per pixel");
  }
}

// Accumulates squared-distance histograms for the z-slices assigned to one worker.
void accumulate_slices(const SurfacePointSet& s, const Lattice& lat, std::int64_t n_max,
                       int first_slice, int slice_step, std::vector<std::int64_t>& histogram) {
  const std::size_t nx = static_cast<std::size_t>(lat.nx);
  const std::size_t ny = static_cast<std::size_t>(lat.ny);
  std::vector<std::int64_t> slice(nx * ny);
  LineTransform transform(std::max(nx, ny));

  const int slices = lat.z_hi - lat.z_lo + 1;
  for (int si = first_slice; si < slices; si += slice_step) {
    const int z = lat.z_lo + si;
    std::fill(slice.begin(), slice.end(), kFar);
    bool any_in_range = false;
    for (int r = 0; r < s.height; ++r) {
      for (int c = 0; c < s.width; ++c) {
        const std::int64_t dz = z - s.z_at(r, c);
        if (dz * dz <= n_max) {
          slice[(r + lat.pad) * nx + (c + lat.pad)] = dz * dz;
          any_in_range = true;
        }
      }
    }
    if (!any_in_range) continue;

    // Only rows that carry surface pixels can hold finite values before the
    // column pass.
    for (int r = 0; r < s.height; ++r) {
      transform.run(slice.data() + (r + lat.pad) * nx, 1, nx, n_max);
    }
    for (std::size_t c = 0; c < nx; ++c) {
      transform.run(slice.data() + c, nx, ny, n_max);
    }
    for (const auto d : slice) {
      if (d <= n_max) ++histogram[static_cast<std::size_t>(d)];
    }
  }
}

}  // namespace

std::int64_t max_squared_radius(double r_max) {
  check_radius(r_max);
  return static_cast<std::int64_t>(std::floor(r_max * r_max + 1e-9));
}

int lattice_padding(std::int64_t max_sq_radius) {
  int p = 0;
  while (static_cast<std::int64_t>(p) * p < max_sq_radius) ++p;
  return p;
}

DistanceSet representable_distances(double r_max) {
  const std::int64_t n_max = max_squared_radius(r_max);
  std::vector<bool> hit(static_cast<std::size_t>(n_max) + 1, false);
  for (std::int64_t i = 0; i * i <= n_max; ++i) {
    for (std::int64_t j = i; i * i + j * j <= n_max; ++j) {
      for (std::int64_t k = j; i * i + j * j + k * k <= n_max; ++k) {
        hit[static_cast<std::size_t>(i * i + j * j + k * k)] = true;
      }
    }
  }
  DistanceSet set;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (hit[static_cast<std::size_t>(n)]) {
      set.squared.push_back(n);
      set.distances.push_back(std::sqrt(static_cast<double>(n)));
    }
  }
  return set;
}

VolumeCurve volume_curve_from_shells(const ShellCounts& shells) {
  VolumeCurve curve;
  std::int64_t total = 0;
  for (const auto& [n, q] : shells.counts) {
    if (q == 0) continue;
    total += q;
    curve.radii.push_back(std::sqrt(static_cast<double>(n)));
    curve.sq_radii.push_back(n);
    curve.volumes.push_back(total);
  }
  return curve;
}

DilationResult exact_edt_volumes(const SurfacePointSet& surface, double r_max,
                                 const EdtOptions& options) {
  check_surface(surface);
  const std::int64_t n_max = max_squared_radius(r_max);
  const Lattice lat = padded_lattice(surface, n_max);
  if (lat.voxels() > options.max_voxels) {
    throw Error(ErrorCode::VolumeTooLarge,
                "padded lattice " + std::to_string(lat.nx) + "x" + std::to_string(lat.ny) + "x" +
                    std::to_string(lat.z_hi - lat.z_lo + 1) + " = " +
                    std::to_string(lat.voxels()) + " voxels exceeds the cap of " +
                    std::to_string(options.max_voxels));
  }

  const int slices = lat.z_hi - lat.z_lo + 1;
  const int workers = std::clamp(options.threads, 1, slices);
  std::vector<std::vector<std::int64_t>> partial(
      static_cast<std::size_t>(workers), std::vector<std::int64_t>(static_cast<std::size_t>(n_max) + 1, 0));
  if (workers == 1) {
    accumulate_slices(surface, lat, n_max, 0, 1, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { accumulate_slices(surface, lat, n_max, w, workers, partial[w]); });
    }
  }

  DilationResult result;
  for (const auto n : representable_distances(r_max).squared) {
    std::int64_t q = 0;
    for (const auto& h : partial) q += h[static_cast<std::size_t>(n)];
    result.shells.counts.emplace(n, q);
  }
  result.curve = volume_curve_from_shells(result.shells);
  return result;
}

VolumeCurve brute_force_volumes(const SurfacePointSet& surface, double r_max) {
  check_surface(surface);
  const std::int64_t n_max = max_squared_radius(r_max);
  const Lattice lat = padded_lattice(surface, n_max);

  ShellCounts shells;
  for (const auto n : representable_distances(r_max).squared) shells.counts.emplace(n, 0);

  // Lattice coordinates in the surface frame: x in [1 - pad, width + pad], etc.
  for (int z = lat.z_lo; z <= lat.z_hi; ++z) {
    for (int y = 1 - lat.pad; y <= surface.height + lat.pad; ++y) {
      for (int x = 1 - lat.pad; x <= surface.width + lat.pad; ++x) {
        std::int64_t best = kFar;
        for (const auto& p : surface.points) {
          const std::int64_t dx = x - p.x;
          const std::int64_t dy = y - p.y;
          const std::int64_t dz = z - p.z;
          best = std::min(best, dx * dx + dy * dy + dz * dz);
        }
        if (best <= n_max) ++shells.counts.at(best);
      }
    }
  }
  return volume_curve_from_shells(shells);
}

void write_volume_curve_csv(std::ostream& out, const VolumeCurve& curve) {
  out << "radius,sq_radius,volume\n";
  char buf[64];
  for (std::size_t i = 0; i < curve.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f", curve.radii[i]);
    out << buf << ',' << curve.sq_radii[i] << ',' << curve.volumes[i] << '\n';
  }
}

}  // namespace bmfd
