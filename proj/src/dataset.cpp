#include "bmfd/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bmfd/error.hpp"
#include "bmfd/pgm.hpp"

namespace bmfd {
namespace fs = std::filesystem;

namespace {

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm";
}

std::vector<fs::path> sorted_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

}  // namespace

DatasetLayout parse_layout(std::string_view name) {
  if (name == "class-subdirectories") return DatasetLayout::ClassSubdirectories;
  if (name == "filename-prefix") return DatasetLayout::FilenamePrefix;
  throw Error(ErrorCode::InvalidArgument, "unknown dataset layout '" + std::string(name) + "'");
}

std::string_view layout_name(DatasetLayout layout) noexcept {
  return layout == DatasetLayout::ClassSubdirectories ? "class-subdirectories" : "filename-prefix";
}

TextureDataset ingest_dataset(const fs::path& root, DatasetLayout layout) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::FileNotFound, root.string() + ": not a directory");
  }

  // std::map keeps class names in lexicographic order.
  std::map<std::string, std::vector<fs::path>> by_class;
  if (layout == DatasetLayout::ClassSubdirectories) {
    for (const auto& entry : fs::directory_iterator(root)) {
      if (!entry.is_directory()) continue;
      auto files = sorted_files(entry.path());
      if (!files.empty()) by_class[entry.path().filename().string()] = std::move(files);
    }
  } else {
    for (const auto& file : sorted_files(root)) {
      const std::string stem = file.stem().string();
      const auto cut = stem.rfind('_');
      if (cut == std::string::npos || cut == 0) {
        throw Error(ErrorCode::InvalidArgument,
                    file.string() + ": filename does not follow <class>_<index>");
      }
      by_class[stem.substr(0, cut)].push_back(file);
    }
  }

  if (by_class.empty()) {
    throw Error(ErrorCode::EmptyDataset, root.string() + ": no images found");
  }

  const std::size_t per_class = by_class.begin()->second.size();
  const bool ragged = std::any_of(by_class.begin(), by_class.end(),
                                  [&](const auto& kv) { return kv.second.size() != per_class; });
  if (ragged) {
    std::string counts;
    for (const auto& [name, files] : by_class) {
      if (!counts.empty()) counts += ", ";
      counts += name + "=" + std::to_string(files.size());
    }
    throw Error(ErrorCode::RaggedDataset, "unequal images per class: " + counts);
  }

  TextureDataset ds;
  ds.class_count = static_cast<int>(by_class.size());
  ds.samples_per_class = static_cast<int>(per_class);
  int class_id = 0;
  for (const auto& [name, files] : by_class) {
    ds.class_names.push_back(name);
    int index = 0;
    for (const auto& file : files) {
      ds.samples.push_back(LabeledSample{load_gray_image(file), class_id, index++, file});
    }
    ++class_id;
  }
  return ds;
}

}  // namespace bmfd
