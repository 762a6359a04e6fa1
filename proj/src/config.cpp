#include "bmfd/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "bmfd/error.hpp"

namespace bmfd {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidConfig,
                "invalid value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return value;
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::InvalidConfig, message);
}

}  // namespace

void PipelineConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  try {
    if (key == "r_max") r_max = parse_value<double>(key, value);
    else if (key == "scale_a") scale_a = parse_value<double>(key, value);
    else if (key == "threshold_index") threshold_index = parse_value<int>(key, value);
    else if (key == "kernel_radius_factor") kernel_radius_factor = parse_value<double>(key, value);
    else if (key == "descriptor_mode") descriptor_mode = parse_source(value);
    else if (key == "raw_length") raw_length = parse_value<int>(key, value);
    else if (key == "holdout_fraction") holdout_fraction = parse_value<double>(key, value);
    else if (key == "seed") seed = parse_value<std::uint64_t>(key, value);
    else if (key == "ridge_factor") ridge_factor = parse_value<double>(key, value);
    else if (key == "window_rows") window_rows = parse_value<int>(key, value);
    else if (key == "window_cols") window_cols = parse_value<int>(key, value);
    else if (key == "layout") layout = parse_layout(value);
    else if (key == "max_voxels") max_voxels = parse_value<std::int64_t>(key, value);
    else throw Error(ErrorCode::InvalidConfig, "unknown config key '" + std::string(key) + "'");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidConfig) throw;
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
}

void PipelineConfig::validate() const {
  require(r_max >= 1.0 && r_max <= 1000.0, "r_max must lie in [1, 1000]");
  require(scale_a > 0.0, "scale_a must be > 0");
  require(threshold_index >= 1, "threshold_index must be >= 1");
  require(kernel_radius_factor > 0.0, "kernel_radius_factor must be > 0");
  require(raw_length >= 0, "raw_length must be >= 0");
  require(holdout_fraction > 0.0 && holdout_fraction < 1.0, "holdout_fraction must lie in (0, 1)");
  require(ridge_factor >= 0.0, "ridge_factor must be >= 0");
  require(window_rows >= 1 && window_cols >= 1, "window grid must be at least 1x1");
  require(max_voxels >= 1, "max_voxels must be >= 1");
}

void apply_config(PipelineConfig& config, std::istream& in, const std::string& origin) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig,
                  origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    try {
      config.set(trim(text.substr(0, eq)), text.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(PipelineConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string() + ": cannot open config");
  apply_config(config, in, path.string());
}

std::string to_config_text(const PipelineConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "r_max = " << c.r_max << '\n'
      << "scale_a = " << c.scale_a << '\n'
      << "threshold_index = " << c.threshold_index << '\n'
      << "kernel_radius_factor = " << c.kernel_radius_factor << '\n'
      << "descriptor_mode = " << source_name(c.descriptor_mode) << '\n'
      << "raw_length = " << c.raw_length << '\n'
      << "holdout_fraction = " << c.holdout_fraction << '\n'
      << "seed = " << c.seed << '\n'
      << "ridge_factor = " << c.ridge_factor << '\n'
      << "window_rows = " << c.window_rows << '\n'
      << "window_cols = " << c.window_cols << '\n'
      << "layout = " << layout_name(c.layout) << '\n'
      << "max_voxels = " << c.max_voxels << '\n';
  return out.str();
}

}  // namespace bmfd
