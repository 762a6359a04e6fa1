#include "bmfd/surface.hpp"

namespace bmfd {

SurfacePointSet build_surface(const GrayImage& image) {
  SurfacePointSet s;
  s.width = image.width();
  s.height = image.height();
  s.min_z = image.min_intensity() + 1;
  s.max_z = image.max_intensity() + 1;
  s.points.reserve(image.pixels().size());
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      s.points.push_back({c + 1, r + 1, image.at(r, c) + 1});
    }
  }
  return s;
}

}  // namespace bmfd
