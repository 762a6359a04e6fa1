#include "bmfd/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <fstream>
#include <thread>

#include "bmfd/dataset.hpp"
#include "bmfd/error.hpp"
#include "bmfd/lda.hpp"
#include "bmfd/scale_space.hpp"
#include "bmfd/surface.hpp"

#include <unistd.h>

namespace bmfd {
namespace fs = std::filesystem;

WindowAnalysis analyze_window(const GrayImage& image, const PipelineConfig& config) {
  WindowAnalysis w;
  EdtOptions options;
  options.max_voxels = config.max_voxels;
  w.volumes = exact_edt_volumes(build_surface(image), config.r_max, options).curve;
  w.curve = loglog_curve(w.volumes);
  w.dimension = estimate_dimension(w.curve);
  if (config.descriptor_mode == DescriptorSource::Multiscale) {
    w.descriptors = proposed_descriptors(w.curve, config.scale_params());
  } else {
    const auto length = config.raw_length == 0 ? w.curve.size()
                                               : static_cast<std::size_t>(config.raw_length);
    w.descriptors = raw_descriptors(w.curve, length);
  }
  return w;
}

FeatureMatrix extract_dataset_features(const fs::path& root, const PipelineConfig& config, int jobs,
                                       const std::function<void(const std::string&)>& progress) {
  config.validate();
  const TextureDataset ds = ingest_dataset(root, config.layout);

  struct Task {
    const GrayImage* image;
    int class_id;
    int sample_index;
  };
  std::vector<std::vector<GrayImage>> windows;
  windows.reserve(ds.samples.size());
  std::vector<Task> tasks;
  for (const auto& sample : ds.samples) {
    windows.push_back(partition_windows(sample.image, config.window_rows, config.window_cols));
    const int per_image = static_cast<int>(windows.back().size());
    for (int w = 0; w < per_image; ++w) {
      tasks.push_back({&windows.back()[static_cast<std::size_t>(w)], sample.class_id,
                       sample.sample_index * per_image + w});
    }
  }

  std::vector<std::vector<double>> values(tasks.size());
  std::vector<int> remaining(static_cast<std::size_t>(ds.class_count), 0);
  for (const auto& t : tasks) ++remaining[static_cast<std::size_t>(t.class_id)];

  std::atomic<std::size_t> next{0};
  std::mutex report_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        values[i] = analyze_window(*tasks[i].image, config).descriptors.values;
      } catch (...) {
        std::lock_guard lock(report_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
      std::lock_guard lock(report_mutex);
      const auto c = static_cast<std::size_t>(tasks[i].class_id);
      if (--remaining[c] == 0 && progress) {
        progress("class " + std::to_string(c + 1) + "/" + std::to_string(ds.class_count) + " " +
                 ds.class_names[c] + ": " + std::to_string(ds.samples_per_class) + " images done");
      }
    }
  };
  const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t common = values.empty() ? 0 : values.front().size();
  for (const auto& v : values) common = std::min(common, v.size());
  std::vector<FeatureRow> rows;
  rows.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    values[i].resize(common);
    rows.push_back({tasks[i].class_id, tasks[i].sample_index, std::move(values[i])});
  }
  return FeatureMatrix(std::move(rows));
}

ClassificationReport classify_features(const FeatureMatrix& features, const PipelineConfig& config) {
  config.validate();
  if (features.empty()) throw Error(ErrorCode::EmptyDataset, "feature matrix has no rows");
  const auto split = holdout_split(features, config.holdout_fraction, config.seed);
  const auto model = lda_fit(split.train, config.ridge_factor);
  const auto predicted = lda_predict(model, split.test);
  return evaluate(split.test.labels(), predicted, features.class_count(),
                  static_cast<int>(features.dimension()));
}

std::string method_label(DescriptorSource source) {
  return source == DescriptorSource::Multiscale ? "Proposed" : "Minkowski";
}

AtomicOutputs::~AtomicOutputs() {
  std::error_code ec;
  for (const auto& [tmp, target] : staged_) fs::remove(tmp, ec);
}

void AtomicOutputs::stage(const fs::path& target, const std::function<void(std::ostream&)>& writer) {
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, tmp.string() + ": cannot open for writing");
    staged_.emplace_back(tmp, target);
    writer(out);
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, tmp.string() + ": write failed");
  }
}

void AtomicOutputs::commit() {
  for (const auto& [tmp, target] : staged_) fs::rename(tmp, target);
  staged_.clear();
}

}  // namespace bmfd
