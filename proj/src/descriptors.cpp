#include "bmfd/descriptors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "bmfd/error.hpp"

namespace bmfd {

std::string_view source_name(DescriptorSource source) noexcept {
  return source == DescriptorSource::RawMinkowski ? "raw-minkowski" : "multiscale";
}

DescriptorSource parse_source(std::string_view name) {
  if (name == "raw-minkowski") return DescriptorSource::RawMinkowski;
  if (name == "multiscale") return DescriptorSource::Multiscale;
  throw Error(ErrorCode::InvalidArgument, "unknown descriptor mode '" + std::string(name) + "'");
}

int ScaleSpaceParams::kernel_radius() const {
  return std::max(1, static_cast<int>(std::ceil(kernel_radius_factor * a)));
}

LogLogCurve loglog_curve(const VolumeCurve& curve) {
  if (curve.size() < 3) {
    throw Error(ErrorCode::CurveTooShort,
                "volume curve has " + std::to_string(curve.size()) + " points, need at least 3");
  }
  LogLogCurve u;
  u.t.reserve(curve.size() - 1);
  u.v.reserve(curve.size() - 1);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve.radii[i] <= 0.0) continue;
    u.t.push_back(std::log(curve.radii[i]));
    u.v.push_back(std::log(static_cast<double>(curve.volumes[i])));
  }
  return u;
}

DimensionEstimate estimate_dimension(const LogLogCurve& curve, std::size_t begin,
                                     std::optional<std::size_t> end) {
  const std::size_t stop = end.value_or(curve.size());
  if (stop > curve.size() || begin >= stop || stop - begin < 2) {
    throw Error(ErrorCode::CurveTooShort, "fit range needs at least 2 points inside the curve");
  }
  const auto n = static_cast<double>(stop - begin);
  double mean_t = 0.0;
  double mean_v = 0.0;
  for (std::size_t i = begin; i < stop; ++i) {
    mean_t += curve.t[i];
    mean_v += curve.v[i];
  }
  mean_t /= n;
  mean_v /= n;
  double stt = 0.0;
  double stv = 0.0;
  for (std::size_t i = begin; i < stop; ++i) {
    const double dt = curve.t[i] - mean_t;
    stt += dt * dt;
    stv += dt * (curve.v[i] - mean_v);
  }
  if (!(stt > 0.0)) {
    throw Error(ErrorCode::DegenerateFit, "abscissa has zero variance over the fit range");
  }
  DimensionEstimate est;
  est.slope = stv / stt;
  est.intercept = mean_v - est.slope * mean_t;
  est.dimension = 3.0 - est.slope;
  est.fit_begin = begin;
  est.fit_end = stop;
  return est;
}

DescriptorVector raw_descriptors(const LogLogCurve& curve, std::size_t length) {
  if (length == 0 || length > curve.size()) {
    throw Error(ErrorCode::CurveTooShort, "requested " + std::to_string(length) +
                                              " raw descriptors from a curve of " +
                                              std::to_string(curve.size()));
  }
  DescriptorVector d;
  d.values.assign(curve.v.begin(), curve.v.begin() + static_cast<std::ptrdiff_t>(length));
  d.source = DescriptorSource::RawMinkowski;
  return d;
}

void write_descriptor_header(std::ostream& out, std::size_t k) {
  out << "class_id,sample_index";
  for (std::size_t i = 1; i <= k; ++i) out << ",d_" << i;
  out << '\n';
}

void write_descriptor_row(std::ostream& out, int class_id, int sample_index,
                          const std::vector<double>& values) {
  out << class_id << ',' << sample_index;
  char buf[32];
  for (const double v : values) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
  }
  out << '\n';
}

}  // namespace bmfd
