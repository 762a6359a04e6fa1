#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bmfd/descriptors.hpp"
#include "bmfd/dilation.hpp"
#include "bmfd/error.hpp"
#include "bmfd/surface.hpp"
#include "support/synthetic.hpp"

using namespace bmfd;

namespace {

VolumeCurve make_curve(std::vector<double> radii, std::vector<std::int64_t> volumes) {
  VolumeCurve c;
  for (const double r : radii) c.sq_radii.push_back(std::llround(r * r));
  c.radii = std::move(radii);
  c.volumes = std::move(volumes);
  return c;
}

LogLogCurve line(double slope, double intercept, int n) {
  LogLogCurve u;
  for (int i = 1; i <= n; ++i) {
    const double t = std::log(static_cast<double>(i));
    u.t.push_back(t);
    u.v.push_back(slope * t + intercept);
  }
  return u;
}

}  // namespace

TEST_CASE("log-log curve drops the zero radius") {
  const auto u = loglog_curve(make_curve({0.0, 1.0, 2.0}, {4, 20, 60}));
  REQUIRE(u.size() == 2);
  CHECK(u.t[0] == 0.0);
  CHECK(u.t[1] == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(u.v[0] == doctest::Approx(std::log(20.0)).epsilon(1e-15));
  CHECK(u.v[1] == doctest::Approx(std::log(60.0)).epsilon(1e-15));

  CHECK_THROWS_AS(loglog_curve(make_curve({0.0, 1.0}, {4, 20})), Error);
}

TEST_CASE("log-log curve of an isolated point") {
  const auto curve =
      brute_force_volumes(build_surface(bmfd::testing::image_from(1, 1, {0})), std::sqrt(2.0));
  const auto u = loglog_curve(curve);
  REQUIRE(u.size() == 2);
  CHECK(u.t[0] == 0.0);
  CHECK(u.t[1] == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(u.v[0] == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(u.v[1] == doctest::Approx(std::log(19.0)).epsilon(1e-15));
}

TEST_CASE("dimension of constructed lines") {
  for (const double slope : {1.0, 3.0, 0.37, -2.5}) {
    const auto est = estimate_dimension(line(slope, 1.25, 40));
    CHECK(std::abs(est.slope - slope) < 1e-12);
    CHECK(std::abs(est.intercept - 1.25) < 1e-12);
    CHECK(est.dimension == doctest::Approx(3.0 - slope).epsilon(1e-12));
  }
  CHECK(estimate_dimension(line(1.0, 0.0, 10)).dimension == doctest::Approx(2.0));
  CHECK(estimate_dimension(line(3.0, 0.0, 10)).dimension == doctest::Approx(0.0));

  // Fit over a sub-range ignores a corrupted tail.
  auto u = line(1.5, 0.0, 20);
  u.v.back() += 10.0;
  const auto est = estimate_dimension(u, 0, 19);
  CHECK(std::abs(est.slope - 1.5) < 1e-12);
  CHECK(est.fit_end == 19);
}

TEST_CASE("dimension fit errors") {
  LogLogCurve flat;
  flat.t = {1.0, 1.0, 1.0};
  flat.v = {1.0, 2.0, 3.0};
  try {
    estimate_dimension(flat);
    FAIL("expected DegenerateFit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFit);
  }
  CHECK_THROWS_AS(estimate_dimension(line(1.0, 0.0, 5), 4), Error);
  CHECK_THROWS_AS(estimate_dimension(line(1.0, 0.0, 5), 0, 6), Error);
}

TEST_CASE("constant image is close to a plane") {
  const auto u = loglog_curve(exact_edt_volumes(build_surface(GrayImage::filled(64, 64, 90)), 10.0).curve);
  CHECK(u.size() == 85);
  const double d = estimate_dimension(u).dimension;
  CHECK(d >= 1.85);
  CHECK(d <= 2.15);
}

TEST_CASE("pipeline dimension stays inside (0, 3)") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 8; ++trial) {
    const int max_value = trial % 2 == 0 ? 255 : 15;
    const auto img = bmfd::testing::random_image(rng, 16 + trial, 20, max_value);
    const double d = estimate_dimension(loglog_curve(exact_edt_volumes(build_surface(img), 6.0).curve)).dimension;
    CHECK(d > 0.0);
    CHECK(d < 3.0);
  }
}

TEST_CASE("raw descriptors are prefixes of the log-volumes") {
  const auto u = line(1.3, 0.2, 30);
  const auto full = raw_descriptors(u, u.size());
  CHECK(full.values == u.v);
  CHECK(full.source == DescriptorSource::RawMinkowski);
  CHECK_FALSE(full.params.has_value());
  for (std::size_t n = 2; n <= u.size(); ++n) {
    const auto a = raw_descriptors(u, n).values;
    const auto b = raw_descriptors(u, n - 1).values;
    CHECK(std::equal(b.begin(), b.end(), a.begin()));
  }
  try {
    raw_descriptors(u, 0);
    FAIL("expected CurveTooShort");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CurveTooShort);
  }
  CHECK_THROWS_AS(raw_descriptors(u, u.size() + 1), Error);
}

TEST_CASE("descriptor CSV row") {
  std::ostringstream out;
  write_descriptor_header(out, 3);
  write_descriptor_row(out, 2, 7, {0.5, -1.25, 1e-300});
  CHECK(out.str() == "class_id,sample_index,d_1,d_2,d_3\n2,7,0.5,-1.25,1e-300\n");
}
