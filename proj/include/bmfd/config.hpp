#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bmfd/dataset.hpp"
#include "bmfd/descriptors.hpp"

namespace bmfd {

/// Every tunable of a run. Read from a flat `key = value` file; command-line
/// overrides are applied on top with the same keys.
struct PipelineConfig {
  double r_max = 10.0;
  double scale_a = 0.7;
  int threshold_index = 51;
  double kernel_radius_factor = 4.0;
  DescriptorSource descriptor_mode = DescriptorSource::Multiscale;
  int raw_length = 0;  // 0 keeps the whole curve
  double holdout_fraction = 0.5;
  std::uint64_t seed = 1;
  double ridge_factor = 1e-6;
  int window_rows = 1;
  int window_cols = 1;
  DatasetLayout layout = DatasetLayout::ClassSubdirectories;
  std::int64_t max_voxels = std::int64_t{1} << 30;

  ScaleSpaceParams scale_params() const {
    return ScaleSpaceParams{scale_a, kernel_radius_factor, threshold_index};
  }

  /// Sets one key from its textual value; unknown keys and malformed values
  /// raise InvalidConfig.
  void set(std::string_view key, std::string_view value);

  /// Throws InvalidConfig when a field violates its precondition.
  void validate() const;
};

/// Applies every `key = value` line from the stream onto `config`. Blank
/// lines and lines starting with '#' are skipped.
void apply_config(PipelineConfig& config, std::istream& in, const std::string& origin = "<config>");
void apply_config_file(PipelineConfig& config, const std::filesystem::path& path);

/// Serializes all keys in a form apply_config accepts.
std::string to_config_text(const PipelineConfig& config);

}  // namespace bmfd
