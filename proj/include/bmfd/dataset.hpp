#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bmfd/image.hpp"

namespace bmfd {

enum class DatasetLayout {
  ClassSubdirectories,  // root/<class>/<sample>.pgm
  FilenamePrefix,       // root/<class>_<index>.pgm
};

DatasetLayout parse_layout(std::string_view name);
std::string_view layout_name(DatasetLayout layout) noexcept;

struct LabeledSample {
  GrayImage image;
  int class_id = 0;
  int sample_index = 0;
  std::filesystem::path source;
};

/// Labeled images ordered by class name then filename. class_id follows the
/// sorted class-name order.
struct TextureDataset {
  std::vector<LabeledSample> samples;
  std::vector<std::string> class_names;
  int class_count = 0;
  int samples_per_class = 0;
};

/// Files not ending in .pgm (case-insensitive) are ignored. Throws
/// EmptyDataset when no image is found and RaggedDataset when classes hold
/// unequal numbers of images.
TextureDataset ingest_dataset(const std::filesystem::path& root, DatasetLayout layout);

}  // namespace bmfd
