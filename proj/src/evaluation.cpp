#include "bmfd/evaluation.hpp"

#include <cstdio>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "bmfd/error.hpp"

namespace bmfd {

long ClassificationReport::total() const {
  long n = 0;
  for (const auto& row : confusion) n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

ClassificationReport evaluate(const std::vector<int>& actual, const std::vector<int>& predicted,
                              int class_count, int descriptor_count) {
  if (actual.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(actual.size()) + " labels vs " +
                                               std::to_string(predicted.size()) + " predictions");
  }
  if (actual.empty() || class_count < 1) {
    throw Error(ErrorCode::InvalidArgument, "evaluation needs at least one sample and one class");
  }
  const auto c = static_cast<std::size_t>(class_count);
  ClassificationReport report;
  report.descriptor_count = descriptor_count;
  report.confusion.assign(c, std::vector<long>(c, 0));
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i] < 0 || actual[i] >= class_count || predicted[i] < 0 ||
        predicted[i] >= class_count) {
      throw Error(ErrorCode::InvalidArgument, "class id out of range at position " + std::to_string(i));
    }
    ++report.confusion[static_cast<std::size_t>(actual[i])][static_cast<std::size_t>(predicted[i])];
  }

  const auto n = static_cast<double>(actual.size());
  double agree = 0.0;
  double chance = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
      row += static_cast<double>(report.confusion[k][j]);
      col += static_cast<double>(report.confusion[j][k]);
    }
    agree += static_cast<double>(report.confusion[k][k]);
    chance += (row / n) * (col / n);
  }
  const double p_o = agree / n;
  report.correctness_rate = p_o;
  report.kappa = chance >= 1.0 ? 1.0 : (p_o - chance) / (1.0 - chance);
  return report;
}

std::string report_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["correctness_rate"] = report.correctness_rate;
  j["kappa"] = report.kappa;
  j["descriptor_count"] = report.descriptor_count;
  j["confusion"] = report.confusion;
  return j.dump(2) + "\n";
}

void write_confusion_csv(std::ostream& out, const ClassificationReport& report) {
  out << "actual";
  for (std::size_t k = 0; k < report.confusion.size(); ++k) out << ',' << k;
  out << '\n';
  for (std::size_t r = 0; r < report.confusion.size(); ++r) {
    out << r;
    for (const long v : report.confusion[r]) out << ',' << v;
    out << '\n';
  }
}

std::string table_row(const std::string& label, const ClassificationReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %9.4f %7.4f %4d", label.c_str(),
                100.0 * report.correctness_rate, report.kappa, report.descriptor_count);
  return buf;
}

}  // namespace bmfd
