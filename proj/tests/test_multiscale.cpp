#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bmfd/dilation.hpp"
#include "bmfd/error.hpp"
#include "bmfd/scale_space.hpp"
#include "bmfd/surface.hpp"
#include "support/synthetic.hpp"

using namespace bmfd;

namespace {

ScaleSpaceParams params(double a, int threshold = 51) { return ScaleSpaceParams{a, 4.0, threshold}; }

LogLogCurve as_curve(std::vector<double> v) {
  LogLogCurve u;
  for (std::size_t i = 0; i < v.size(); ++i) u.t.push_back(static_cast<double>(i + 1));
  u.v = std::move(v);
  return u;
}

double variance(const std::vector<double>& x) {
  double m = 0.0;
  for (const double v : x) m += v;
  m /= static_cast<double>(x.size());
  double s = 0.0;
  for (const double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

}  // namespace

TEST_CASE("kernel radius follows ceil(4a), at least 1") {
  CHECK(params(0.7).kernel_radius() == 3);
  CHECK(params(1.0).kernel_radius() == 4);
  CHECK(params(0.1).kernel_radius() == 1);
  CHECK(params(2.0).kernel_radius() == 8);
}

TEST_CASE("kernel is antisymmetric with a zero centre tap") {
  for (const double a : {0.5, 0.7, 1.0, 2.0}) {
    const int radius = params(a).kernel_radius();
    const auto k = gaussian_derivative_kernel(a, radius);
    REQUIRE(k.size() == static_cast<std::size_t>(2 * radius + 1));
    CHECK(k[static_cast<std::size_t>(radius)] == 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      CHECK(std::abs(k[i] + k[k.size() - 1 - i]) <= 1e-12);
      sum += k[i];
    }
    CHECK(std::abs(sum) <= 1e-12);
    // Negative slope right of the origin.
    CHECK(k[static_cast<std::size_t>(radius + 1)] < 0.0);
  }
}

TEST_CASE("kernel taps match the analytic derivative") {
  const double a = 0.7;
  const auto k = gaussian_derivative_kernel(a, 3);
  for (int t = -3; t <= 3; ++t) {
    // d/dt of exp(-t^2 / (2 a^2)) / (a sqrt(2 pi)), by central difference.
    const double h = 1e-5;
    auto g = [&](double x) { return std::exp(-x * x / (2 * a * a)) / (a * std::sqrt(2 * std::numbers::pi)); };
    const double numeric = (g(t + h) - g(t - h)) / (2 * h);
    CHECK(k[static_cast<std::size_t>(t + 3)] == doctest::Approx(numeric).epsilon(1e-7));
  }
}

TEST_CASE("kernel first moment is close to -1") {
  const auto k = gaussian_derivative_kernel(1.0, 4);
  double moment = 0.0;
  for (int t = -4; t <= 4; ++t) moment += t * k[static_cast<std::size_t>(t + 4)];
  // Continuous value: integral of t g'(t) dt = -1.
  CHECK(std::abs(moment + 1.0) < 0.02);
}

TEST_CASE("kernel rejects non-positive scale") {
  try {
    gaussian_derivative_kernel(0.0, 3);
    FAIL("expected InvalidScale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidScale);
  }
  CHECK_THROWS_AS(gaussian_derivative_kernel(-1.0, 3), Error);
}

TEST_CASE("transform of a constant signal vanishes") {
  for (const double a : {0.5, 0.7, 1.0, 2.0}) {
    const auto out = scale_transform(as_curve(std::vector<double>(85, 12.345)), params(a));
    CHECK(out.size() == 85);
    for (const double v : out) CHECK(std::abs(v) < 1e-10);
  }
}

TEST_CASE("transform of a ramp recovers the slope in the interior") {
  const double c = 0.8;
  std::vector<double> ramp(40);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = c * static_cast<double>(i);
  const auto out = scale_transform(as_curve(ramp), params(1.0));
  for (std::size_t i = 4; i + 4 < out.size(); ++i) {
    CHECK(std::abs(out[i] - c) < 0.02 * c);
  }
  // Replicate padding flattens the ends, so edge responses are smaller.
  CHECK(out.front() < out[10]);
}

TEST_CASE("transform is linear") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> n(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> u(60), w(60), mix(60);
    const double alpha = n(rng);
    const double beta = n(rng);
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = n(rng);
      w[i] = n(rng);
      mix[i] = alpha * u[i] + beta * w[i];
    }
    const auto p = params(0.7);
    const auto tu = scale_transform(as_curve(u), p);
    const auto tw = scale_transform(as_curve(w), p);
    const auto tm = scale_transform(as_curve(mix), p);
    for (std::size_t i = 0; i < u.size(); ++i) {
      CHECK(std::abs(tm[i] - (alpha * tu[i] + beta * tw[i])) < 1e-10);
    }
    std::vector<double> neg(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    const auto tn = scale_transform(as_curve(neg), p);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(tn[i] == -tu[i]);
  }
}

TEST_CASE("larger scales smooth white noise more") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> n(0.0, 1.0);
  const double scales[] = {0.5, 1.0, 2.0, 4.0};
  double mean_var[4] = {0, 0, 0, 0};
  const int signals = 60;
  for (int s = 0; s < signals; ++s) {
    std::vector<double> x(200);
    for (auto& v : x) v = n(rng);
    for (int k = 0; k < 4; ++k) mean_var[k] += variance(scale_transform(as_curve(x), params(scales[k])));
  }
  for (int k = 1; k < 4; ++k) CHECK(mean_var[k] <= mean_var[k - 1]);
}

TEST_CASE("transform length requirements") {
  CHECK_THROWS_AS(scale_transform(as_curve({1.0}), params(0.7)), Error);
  CHECK(scale_transform(as_curve({1.0, 2.0}), params(0.7)).size() == 2);
}

TEST_CASE("proposed descriptors truncate at the threshold") {
  std::vector<double> v(85);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::log(1.0 + static_cast<double>(i));
  const auto u = as_curve(v);

  const auto d = proposed_descriptors(u, params(0.7, 51));
  CHECK(d.values.size() == 51);
  CHECK(d.source == DescriptorSource::Multiscale);
  REQUIRE(d.params.has_value());
  CHECK(d.params->threshold_index == 51);
  const auto full = scale_transform(u, params(0.7));
  CHECK(std::equal(d.values.begin(), d.values.end(), full.begin()));

  CHECK(proposed_descriptors(u, params(0.7, 85)).values == full);
  CHECK(proposed_descriptors(u, params(0.7, 500)).values == full);
  for (int th = 1; th <= 100; th += 7) {
    CHECK(proposed_descriptors(u, params(0.7, th)).values.size() ==
          std::min<std::size_t>(static_cast<std::size_t>(th), 85));
  }
}

TEST_CASE("intensity offset leaves proposed descriptors unchanged") {
  std::mt19937_64 rng(8);
  const auto img = bmfd::testing::random_image(rng, 24, 24, 120);
  const auto shifted = bmfd::testing::add_constant(img, 77);
  auto describe = [](const GrayImage& g) {
    const auto u = loglog_curve(exact_edt_volumes(build_surface(g), 10.0).curve);
    return proposed_descriptors(u, ScaleSpaceParams{}).values;
  };
  const auto a = describe(img);
  CHECK(a.size() == 51);
  CHECK(a == describe(shifted));
}
