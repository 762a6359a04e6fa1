#pragma once

#include <span>
#include <vector>

#include "bmfd/descriptors.hpp"

namespace bmfd {

/// Analytic first derivative of a unit-area Gaussian of scale `a`, sampled at
/// integer offsets -radius..radius:
///   g'(t) = -t / a^2 * exp(-t^2 / (2 a^2)) / (a * sqrt(2 pi)).
/// The result is exactly antisymmetric, so it sums to zero.
std::vector<double> gaussian_derivative_kernel(double a, int radius);

/// Convolves a uniformly sampled signal with the Gaussian-derivative kernel
/// at the fixed scale `params.a`. Output has the input's length; both ends
/// are extended by replicating the edge samples.
std::vector<double> scale_transform(std::span<const double> signal, const ScaleSpaceParams& params);

inline std::vector<double> scale_transform(const LogLogCurve& u, const ScaleSpaceParams& params) {
  return scale_transform(std::span<const double>(u.v), params);
}

/// Filtered curve truncated to its first `threshold_index` samples.
DescriptorVector proposed_descriptors(const LogLogCurve& u, const ScaleSpaceParams& params);

}  // namespace bmfd
