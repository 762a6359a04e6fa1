#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bmfd/image.hpp"

namespace bmfd {

enum class PgmEncoding { Binary, Ascii };

/// Reads a grayscale raster. PGM (P2/P5) with maxval <= 255 is supported;
/// color formats (P3/P6, PPM/PAM) and 16-bit PGM are rejected with
/// UnsupportedFormat.
GrayImage load_gray_image(const std::filesystem::path& path);

GrayImage decode_pgm(std::istream& in, const std::string& origin = "<stream>");

/// Encodes with maxval 255. Binary output round-trips pixel-exactly.
void encode_pgm(std::ostream& out, const GrayImage& image,
                PgmEncoding encoding = PgmEncoding::Binary);

void save_pgm(const std::filesystem::path& path, const GrayImage& image,
              PgmEncoding encoding = PgmEncoding::Binary);

}  // namespace bmfd
