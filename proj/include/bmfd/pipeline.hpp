#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include "bmfd/config.hpp"
#include "bmfd/descriptors.hpp"
#include "bmfd/dilation.hpp"
#include "bmfd/evaluation.hpp"
#include "bmfd/features.hpp"
#include "bmfd/image.hpp"

namespace bmfd {

/// Everything computed for one image window.
struct WindowAnalysis {
  VolumeCurve volumes;
  LogLogCurve curve;
  DimensionEstimate dimension;
  DescriptorVector descriptors;
};

WindowAnalysis analyze_window(const GrayImage& image, const PipelineConfig& config);

/// Descriptor rows for every window of every image in the dataset, in
/// (class, image, window) order. sample_index enumerates the windows of a
/// class. Windows are processed on up to `jobs` threads; the row order does
/// not depend on it. If windows yield curves of different lengths, all rows
/// are cut to the shortest. `progress`, when set, receives one line per
/// finished class.
FeatureMatrix extract_dataset_features(const std::filesystem::path& root,
                                       const PipelineConfig& config, int jobs,
                                       const std::function<void(const std::string&)>& progress = {});

/// Hold-out split, LDA fit and evaluation on a feature matrix.
ClassificationReport classify_features(const FeatureMatrix& features, const PipelineConfig& config);

/// "Minkowski" for raw descriptors, "Proposed" for multiscale.
std::string method_label(DescriptorSource source);

/// Stages files next to their targets and renames them into place only
/// after every writer succeeded.
class AtomicOutputs {
 public:
  AtomicOutputs() = default;
  AtomicOutputs(const AtomicOutputs&) = delete;
  AtomicOutputs& operator=(const AtomicOutputs&) = delete;
  ~AtomicOutputs();

  void stage(const std::filesystem::path& target, const std::function<void(std::ostream&)>& writer);
  void commit();

 private:
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged_;  // temp, target
};

}  // namespace bmfd
