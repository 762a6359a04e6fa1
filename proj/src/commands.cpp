#include "bmfd/commands.hpp"

#include <cstdio>
#include <ostream>

#include "bmfd/error.hpp"
#include "bmfd/evaluation.hpp"
#include "bmfd/pgm.hpp"
#include "bmfd/pipeline.hpp"

namespace bmfd {
namespace fs = std::filesystem;

namespace {

void stage_report(AtomicOutputs& outputs, const fs::path& out_dir, const ClassificationReport& report) {
  outputs.stage(out_dir / kReportFile, [&](std::ostream& o) { o << report_json(report); });
  outputs.stage(out_dir / kConfusionFile, [&](std::ostream& o) { write_confusion_csv(o, report); });
}

}  // namespace

void cmd_describe(const fs::path& image_path, const PipelineConfig& config, const fs::path& out_dir,
                  std::ostream& log) {
  config.validate();
  const GrayImage image = load_gray_image(image_path);
  const WindowAnalysis w = analyze_window(image, config);

  AtomicOutputs outputs;
  outputs.stage(out_dir / kDescriptorFile, [&](std::ostream& o) {
    write_descriptor_header(o, w.descriptors.values.size());
    write_descriptor_row(o, 0, 0, w.descriptors.values);
  });
  outputs.stage(out_dir / kVolumeCurveFile, [&](std::ostream& o) { write_volume_curve_csv(o, w.volumes); });
  outputs.commit();

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", w.dimension.dimension);
  log << "descriptors: " << w.descriptors.values.size() << '\n'
      << "mode: " << source_name(w.descriptors.source) << '\n'
      << "dimension: " << buf << '\n';
}

void cmd_dataset(const fs::path& root, const PipelineConfig& config, int jobs, const fs::path& out_dir,
                 std::ostream& log, std::ostream& progress) {
  const FeatureMatrix features = extract_dataset_features(
      root, config, jobs, [&](const std::string& line) { progress << line << std::endl; });
  AtomicOutputs outputs;
  outputs.stage(out_dir / kFeatureFile, [&](std::ostream& o) { write_feature_csv(o, features); });
  outputs.commit();
  log << "rows: " << features.size() << '\n' << "descriptors: " << features.dimension() << '\n';
}

void cmd_classify(const fs::path& features_path, const PipelineConfig& config, const fs::path& out_dir,
                  std::ostream& log) {
  const FeatureMatrix features = load_feature_csv(features_path);
  const ClassificationReport report = classify_features(features, config);
  AtomicOutputs outputs;
  stage_report(outputs, out_dir, report);
  outputs.commit();
  log << table_row(method_label(config.descriptor_mode), report) << '\n';
}

void cmd_pipeline(const fs::path& root, const PipelineConfig& config, int jobs, const fs::path& out_dir,
                  std::ostream& log, std::ostream& progress) {
  const FeatureMatrix features = extract_dataset_features(
      root, config, jobs, [&](const std::string& line) { progress << line << std::endl; });
  const ClassificationReport report = classify_features(features, config);
  AtomicOutputs outputs;
  outputs.stage(out_dir / kFeatureFile, [&](std::ostream& o) { write_feature_csv(o, features); });
  stage_report(outputs, out_dir, report);
  outputs.commit();
  log << table_row(method_label(config.descriptor_mode), report) << '\n';
}

}  // namespace bmfd
