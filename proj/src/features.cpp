#include "bmfd/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "bmfd/descriptors.hpp"
#include "bmfd/error.hpp"

namespace bmfd {

FeatureMatrix::FeatureMatrix(std::vector<FeatureRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) return;
  const std::size_t d = rows_.front().values.size();
  if (d == 0) throw Error(ErrorCode::InvalidFeature, "feature vectors must not be empty");
  for (const auto& row : rows_) {
    if (row.values.size() != d) {
      throw Error(ErrorCode::InvalidFeature, "feature vectors have mixed dimensions");
    }
    if (row.class_id < 0 || row.sample_index < 0) {
      throw Error(ErrorCode::InvalidFeature, "negative class id or sample index");
    }
    if (!std::all_of(row.values.begin(), row.values.end(), [](double v) { return std::isfinite(v); })) {
      throw Error(ErrorCode::InvalidFeature,
                  "non-finite feature value in class " + std::to_string(row.class_id) +
                      " sample " + std::to_string(row.sample_index));
    }
  }
}

int FeatureMatrix::class_count() const noexcept {
  int c = -1;
  for (const auto& row : rows_) c = std::max(c, row.class_id);
  return c + 1;
}

std::vector<int> FeatureMatrix::labels() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.class_id);
  return out;
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& features) {
  write_descriptor_header(out, features.dimension());
  for (const auto& row : features.rows()) {
    write_descriptor_row(out, row.class_id, row.sample_index, row.values);
  }
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw Error(ErrorCode::InvalidFeature, "line " + std::to_string(line_no) +
                                               ": cannot parse field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

FeatureMatrix read_feature_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("class_id,sample_index", 0) != 0) {
    throw Error(ErrorCode::InvalidFeature, "feature CSV must start with a class_id,sample_index header");
  }
  const std::size_t columns = split_commas(line).size();
  std::vector<FeatureRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != columns) {
      throw Error(ErrorCode::InvalidFeature, "line " + std::to_string(line_no) + ": expected " +
                                                 std::to_string(columns) + " fields, got " +
                                                 std::to_string(fields.size()));
    }
    FeatureRow row;
    row.class_id = parse_field<int>(fields[0], line_no);
    row.sample_index = parse_field<int>(fields[1], line_no);
    for (std::size_t i = 2; i < fields.size(); ++i) {
      row.values.push_back(parse_field<double>(fields[i], line_no));
    }
    rows.push_back(std::move(row));
  }
  return FeatureMatrix(std::move(rows));
}

FeatureMatrix load_feature_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string() + ": cannot open");
  return read_feature_csv(in);
}

}  // namespace bmfd
