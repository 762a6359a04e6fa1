#include "bmfd/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bmfd/error.hpp"

namespace bmfd {
namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const std::string& origin, const char* field) {
  skip_separators(in);
  long value = -1;
  if (!(in >> value) || value < 0) {
    throw Error(ErrorCode::CorruptImage, origin + ": malformed PGM header field '" + field + "'");
  }
  return value;
}

}  // namespace

GrayImage decode_pgm(std::istream& in, const std::string& origin) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P') {
    throw Error(ErrorCode::UnsupportedFormat, origin + ": not a PNM file");
  }
  const char kind = magic[1];
  if (kind == '3' || kind == '6' || kind == '7') {
    throw Error(ErrorCode::UnsupportedFormat, origin + ": color images are not accepted");
  }
  if (kind != '2' && kind != '5') {
    throw Error(ErrorCode::UnsupportedFormat,
                origin + ": unsupported PNM variant P" + std::string(1, kind));
  }

  const long width = read_header_int(in, origin, "width");
  const long height = read_header_int(in, origin, "height");
  const long maxval = read_header_int(in, origin, "maxval");
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::CorruptImage, origin + ": zero image dimension");
  }
  if (maxval < 1 || maxval > 255) {
    throw Error(ErrorCode::UnsupportedFormat,
                origin + ": maxval " + std::to_string(maxval) + " (only 8-bit PGM is supported)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels(count);
  if (kind == '5') {
    // Exactly one whitespace byte separates maxval from the raster.
    if (!std::isspace(in.get())) {
      throw Error(ErrorCode::CorruptImage, origin + ": missing separator before raster");
    }
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw Error(ErrorCode::CorruptImage, origin + ": header declares " + std::to_string(count) +
                                               " pixels, payload holds " +
                                               std::to_string(in.gcount()));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      skip_separators(in);
      long v = -1;
      if (!(in >> v)) {
        throw Error(ErrorCode::CorruptImage, origin + ": header declares " +
                                                 std::to_string(count) + " pixels, payload holds " +
                                                 std::to_string(i));
      }
      if (v < 0 || v > 255) {
        throw Error(ErrorCode::CorruptImage, origin + ": pixel value out of range");
      }
      pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  for (const auto p : pixels) {
    if (p > maxval) {
      throw Error(ErrorCode::CorruptImage, origin + ": pixel value exceeds maxval");
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

GrayImage load_gray_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::FileNotFound, path.string() + ": no such file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::FileNotFound, path.string() + ": cannot open");
  }
  return decode_pgm(in, path.string());
}

void encode_pgm(std::ostream& out, const GrayImage& image, PgmEncoding encoding) {
  out << (encoding == PgmEncoding::Binary ? "P5" : "P2") << '\n'
      << image.width() << ' ' << image.height() << '\n'
      << 255 << '\n';
  if (encoding == PgmEncoding::Binary) {
    const auto px = image.pixels();
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
    return;
  }
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      out << static_cast<int>(image.at(r, c)) << (c + 1 == image.width() ? '\n' : ' ');
    }
  }
}

void save_pgm(const std::filesystem::path& path, const GrayImage& image, PgmEncoding encoding) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, path.string() + ": cannot open for writing");
  }
  encode_pgm(out, image, encoding);
  if (!out) {
    throw Error(ErrorCode::IoError, path.string() + ": write failed");
  }
}

}  // namespace bmfd
