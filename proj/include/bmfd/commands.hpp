#pragma once

#include <filesystem>
#include <iosfwd>

#include "bmfd/config.hpp"

namespace bmfd {

/// Output locations used by the commands, all inside the --out directory.
inline constexpr const char* kDescriptorFile = "descriptors.csv";
inline constexpr const char* kVolumeCurveFile = "volume_curve.csv";
inline constexpr const char* kFeatureFile = "features.csv";
inline constexpr const char* kReportFile = "report.json";
inline constexpr const char* kConfusionFile = "confusion.csv";

/// Writes descriptors.csv and volume_curve.csv for one image; prints the
/// descriptor count and the dimension estimate.
void cmd_describe(const std::filesystem::path& image, const PipelineConfig& config,
                  const std::filesystem::path& out_dir, std::ostream& log);

/// Writes features.csv for a dataset tree; progress goes to `progress`.
void cmd_dataset(const std::filesystem::path& root, const PipelineConfig& config, int jobs,
                 const std::filesystem::path& out_dir, std::ostream& log, std::ostream& progress);

/// Writes report.json and confusion.csv; prints the Table-1-style row.
void cmd_classify(const std::filesystem::path& features, const PipelineConfig& config,
                  const std::filesystem::path& out_dir, std::ostream& log);

/// dataset + classify in one run; writes all three files.
void cmd_pipeline(const std::filesystem::path& root, const PipelineConfig& config, int jobs,
                  const std::filesystem::path& out_dir, std::ostream& log, std::ostream& progress);

}  // namespace bmfd
