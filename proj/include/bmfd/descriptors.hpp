#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bmfd/dilation.hpp"

namespace bmfd {

/// Fractality curve: t = ln(radius), v = ln(volume). The radius-0 sample is
/// not part of the curve.
struct LogLogCurve {
  std::vector<double> t;
  std::vector<double> v;

  std::size_t size() const noexcept { return v.size(); }
};

struct DimensionEstimate {
  double dimension = 0.0;  // 3 - slope
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t fit_begin = 0;  // half-open [fit_begin, fit_end)
  std::size_t fit_end = 0;
};

enum class DescriptorSource { RawMinkowski, Multiscale };

std::string_view source_name(DescriptorSource source) noexcept;
DescriptorSource parse_source(std::string_view name);

struct ScaleSpaceParams {
  double a = 0.7;
  double kernel_radius_factor = 4.0;
  int threshold_index = 51;

  /// max(1, ceil(kernel_radius_factor * a)).
  int kernel_radius() const;
};

struct DescriptorVector {
  std::vector<double> values;
  DescriptorSource source = DescriptorSource::RawMinkowski;
  std::optional<ScaleSpaceParams> params;
};

/// Requires at least three curve points (the first, at radius 0, is dropped).
LogLogCurve loglog_curve(const VolumeCurve& curve);

/// Least-squares line through (t, v) over [begin, end); end defaults to the
/// whole curve.
DimensionEstimate estimate_dimension(const LogLogCurve& curve, std::size_t begin = 0,
                                     std::optional<std::size_t> end = std::nullopt);

/// First `length` log-volumes, unfiltered.
DescriptorVector raw_descriptors(const LogLogCurve& curve, std::size_t length);

/// One CSV row: class_id,sample_index,d_1,...,d_k. Values use the shortest
/// representation that round-trips.
void write_descriptor_row(std::ostream& out, int class_id, int sample_index,
                          const std::vector<double>& values);

/// Header matching write_descriptor_row for k descriptors.
void write_descriptor_header(std::ostream& out, std::size_t k);

}  // namespace bmfd
