#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmfd {

struct ClassificationReport {
  std::vector<std::vector<long>> confusion;  // [actual][predicted]
  double correctness_rate = 0.0;
  double kappa = 0.0;
  int descriptor_count = 0;

  long total() const;
};

/// Confusion matrix, correctness rate (trace / total) and Cohen's kappa
/// (p_o - p_e) / (1 - p_e), where p_e comes from the row and column margins.
/// When p_e == 1 (a single class in both margins) kappa is 1 for perfect
/// agreement.
ClassificationReport evaluate(const std::vector<int>& actual, const std::vector<int>& predicted,
                              int class_count, int descriptor_count);

/// {"correctness_rate":..,"kappa":..,"descriptor_count":..,"confusion":[[..]]}
std::string report_json(const ClassificationReport& report);

/// Header `actual,0,1,...` then one row per actual class.
void write_confusion_csv(std::ostream& out, const ClassificationReport& report);

/// "<label>  <rate %, 4 dp>  <kappa, 4 dp>  <count>"
std::string table_row(const std::string& label, const ClassificationReport& report);

}  // namespace bmfd
