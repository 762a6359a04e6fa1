#include "bmfd/image.hpp"

#include <algorithm>
#include <string>

#include "bmfd/error.hpp"

namespace bmfd {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::CorruptImage, "image dimensions must be positive, got " +
                                             std::to_string(width) + "x" + std::to_string(height));
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::CorruptImage,
                "pixel count " + std::to_string(pixels_.size()) + " does not match " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  const auto [lo, hi] = std::minmax_element(pixels_.begin(), pixels_.end());
  min_intensity_ = *lo;
  max_intensity_ = *hi;
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(std::max(width, 0)) *
                                   static_cast<std::size_t>(std::max(height, 0)),
                               value);
  return GrayImage(width, height, std::move(px));
}

GrayImage GrayImage::transposed() const {
  std::vector<std::uint8_t> px(pixels_.size());
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      px[static_cast<std::size_t>(c) * height_ + r] = at(r, c);
    }
  }
  return GrayImage(height_, width_, std::move(px));
}

std::vector<GrayImage> partition_windows(const GrayImage& image, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > image.height() || cols > image.width()) {
    throw Error(ErrorCode::InvalidGrid, "cannot tile a " + std::to_string(image.width()) + "x" +
                                            std::to_string(image.height()) + " image into " +
                                            std::to_string(rows) + " rows x " +
                                            std::to_string(cols) + " cols");
  }
  const int win_h = image.height() / rows;
  const int win_w = image.width() / cols;

  std::vector<GrayImage> windows;
  windows.reserve(static_cast<std::size_t>(rows) * cols);
  for (int wr = 0; wr < rows; ++wr) {
    for (int wc = 0; wc < cols; ++wc) {
      std::vector<std::uint8_t> px;
      px.reserve(static_cast<std::size_t>(win_w) * win_h);
      for (int r = 0; r < win_h; ++r) {
        const auto row = image.pixels().subspan(
            static_cast<std::size_t>(wr * win_h + r) * image.width() + wc * win_w, win_w);
        px.insert(px.end(), row.begin(), row.end());
      }
      windows.emplace_back(win_w, win_h, std::move(px));
    }
  }
  return windows;
}

}  // namespace bmfd
