#include "bmfd/scale_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bmfd/error.hpp"

namespace bmfd {

std::vector<double> gaussian_derivative_kernel(double a, int radius) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::InvalidScale, "Gaussian scale must be positive, got " + std::to_string(a));
  }
  if (radius < 1) {
    throw Error(ErrorCode::InvalidArgument, "kernel radius must be >= 1");
  }
  const double norm = 1.0 / (a * std::sqrt(2.0 * std::numbers::pi));
  std::vector<double> kernel(2 * static_cast<std::size_t>(radius) + 1, 0.0);
  for (int t = 1; t <= radius; ++t) {
    const double td = t;
    const double value = -td / (a * a) * norm * std::exp(-td * td / (2.0 * a * a));
    kernel[static_cast<std::size_t>(radius + t)] = value;
    kernel[static_cast<std::size_t>(radius - t)] = -value;
  }
  return kernel;
}

std::vector<double> scale_transform(std::span<const double> signal, const ScaleSpaceParams& params) {
  if (signal.size() < 2) {
    throw Error(ErrorCode::CurveTooShort, "scale transform needs at least 2 samples");
  }
  const int radius = params.kernel_radius();
  const auto kernel = gaussian_derivative_kernel(params.a, radius);
  const auto n = static_cast<std::ptrdiff_t>(signal.size());

  std::vector<double> out(signal.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    // (u * g)(i) = sum_t u(i - t) g(t)
    for (int t = -radius; t <= radius; ++t) {
      const std::ptrdiff_t j = std::clamp<std::ptrdiff_t>(i - t, 0, n - 1);
      acc += signal[static_cast<std::size_t>(j)] * kernel[static_cast<std::size_t>(t + radius)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

DescriptorVector proposed_descriptors(const LogLogCurve& u, const ScaleSpaceParams& params) {
  if (params.threshold_index < 1) {
    throw Error(ErrorCode::InvalidArgument, "threshold_index must be >= 1");
  }
  auto filtered = scale_transform(u, params);
  const auto keep = std::min(filtered.size(), static_cast<std::size_t>(params.threshold_index));
  filtered.resize(keep);
  return DescriptorVector{std::move(filtered), DescriptorSource::Multiscale, params};
}

}  // namespace bmfd
