#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bmfd {

/// 8-bit gray-level image, row-major. Construction validates the pixel count
/// and caches the maximum intensity.
class GrayImage {
 public:
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  /// Constant image.
  static GrayImage filled(int width, int height, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int max_intensity() const noexcept { return max_intensity_; }
  int min_intensity() const noexcept { return min_intensity_; }

  std::uint8_t at(int row, int col) const noexcept {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  /// Transposed copy (rows become columns).
  GrayImage transposed() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
  int max_intensity_ = 0;
  int min_intensity_ = 0;
};

/// Tiles the image into rows x cols windows of floor(height/rows) by
/// floor(width/cols) pixels, left-to-right then top-to-bottom. Remainder rows
/// and columns at the bottom/right are discarded.
std::vector<GrayImage> partition_windows(const GrayImage& image, int rows, int cols);

}  // namespace bmfd
