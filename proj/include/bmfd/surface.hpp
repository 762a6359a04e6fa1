#pragma once

#include <vector>

#include "bmfd/image.hpp"

namespace bmfd {

/// Lattice point (x, y, z): x is the 1-based column, y the 1-based row and z
/// the height.
struct SurfacePoint {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// The intensity surface of an image: one lattice point per pixel at height
/// intensity + 1, so a zero-valued pixel sits at height 1.
struct SurfacePointSet {
  int width = 0;
  int height = 0;
  int min_z = 0;
  int max_z = 0;
  std::vector<SurfacePoint> points;  // row-major, points[row * width + col]

  int z_at(int row, int col) const { return points[static_cast<std::size_t>(row) * width + col].z; }
};

SurfacePointSet build_surface(const GrayImage& image);

}  // namespace bmfd
