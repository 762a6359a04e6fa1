#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace bmfd {

struct FeatureRow {
  int class_id = 0;
  int sample_index = 0;
  std::vector<double> values;
};

/// Labeled feature vectors of a shared dimension.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  /// Validates a common dimension >= 1 and finite values (InvalidFeature).
  explicit FeatureMatrix(std::vector<FeatureRow> rows);

  const std::vector<FeatureRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t dimension() const noexcept { return rows_.empty() ? 0 : rows_.front().values.size(); }
  /// 1 + the largest class id.
  int class_count() const noexcept;
  std::vector<int> labels() const;

 private:
  std::vector<FeatureRow> rows_;
};

/// Writes the header and one row per sample in stored order.
void write_feature_csv(std::ostream& out, const FeatureMatrix& features);
FeatureMatrix read_feature_csv(std::istream& in);
FeatureMatrix load_feature_csv(const std::filesystem::path& path);

}  // namespace bmfd
