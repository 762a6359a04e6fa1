#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bmfd/dilation.hpp"
#include "bmfd/error.hpp"
#include "bmfd/surface.hpp"
#include "support/synthetic.hpp"

using namespace bmfd;
using bmfd::testing::image_from;
using bmfd::testing::random_image;

namespace {

// Sum-of-three-squares test by Legendre's criterion: n is representable
// unless n = 4^a (8b + 7).
bool legendre_representable(std::int64_t n) {
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

// Lattice points of the closed ball of squared radius n, counted directly.
std::int64_t lattice_ball(std::int64_t n) {
  std::int64_t count = 0;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  for (std::int64_t i = -r; i <= r; ++i)
    for (std::int64_t j = -r; j <= r; ++j)
      for (std::int64_t k = -r; k <= r; ++k)
        if (i * i + j * j + k * k <= n) ++count;
  return count;
}

}  // namespace

TEST_CASE("surface heights are intensity plus one") {
  const auto s1 = build_surface(image_from(1, 1, {0}));
  REQUIRE(s1.points.size() == 1);
  CHECK(s1.points[0] == SurfacePoint{1, 1, 1});

  const auto s2 = build_surface(image_from(2, 1, {0, 255}));
  REQUIRE(s2.points.size() == 2);
  CHECK(s2.points[0] == SurfacePoint{1, 1, 1});
  CHECK(s2.points[1] == SurfacePoint{2, 1, 256});
  CHECK(s2.min_z == 1);
  CHECK(s2.max_z == 256);

  const auto s3 = build_surface(GrayImage::filled(3, 3, 7));
  CHECK(s3.points.size() == 9);
  for (const auto& p : s3.points) CHECK(p.z == 8);
}

TEST_CASE("representable squared radii") {
  CHECK(representable_distances(2.0).squared == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK(representable_distances(std::sqrt(7.0)).squared ==
        std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
  CHECK(representable_distances(1.0).squared == std::vector<std::int64_t>{0, 1});

  const auto set = representable_distances(20.0);
  std::vector<std::int64_t> expected;
  for (std::int64_t n = 0; n <= 400; ++n) {
    if (legendre_representable(n)) expected.push_back(n);
  }
  CHECK(set.squared == expected);
  REQUIRE(set.distances.size() == set.squared.size());
  for (std::size_t i = 0; i < set.squared.size(); ++i) {
    CHECK(set.distances[i] == doctest::Approx(std::sqrt(static_cast<double>(set.squared[i]))));
  }
  // r_max = 10 gives 86 radii; dropping r = 0 leaves the 85-point curve.
  CHECK(representable_distances(10.0).squared.size() == 86);
}

TEST_CASE("single point dilation") {
  const auto surface = build_surface(image_from(1, 1, {0}));

  const auto r1 = exact_edt_volumes(surface, 1.0);
  CHECK(r1.shells.counts.at(0) == 1);
  CHECK(r1.shells.counts.at(1) == 6);
  CHECK(r1.curve.volumes == std::vector<std::int64_t>{1, 7});
  CHECK(r1.curve.radii == std::vector<double>{0.0, 1.0});

  const auto r2 = exact_edt_volumes(surface, std::sqrt(2.0));
  CHECK(r2.shells.counts.at(2) == 12);
  CHECK(r2.curve.volumes.back() == 19);
  CHECK(lattice_ball(2) == 19);

  CHECK(brute_force_volumes(surface, 1.0).volumes == std::vector<std::int64_t>{1, 7});

  // An isolated point's shells are the lattice spheres.
  const auto r5 = exact_edt_volumes(surface, 5.0);
  for (std::size_t i = 0; i < r5.curve.size(); ++i) {
    CHECK(r5.curve.volumes[i] == lattice_ball(r5.curve.sq_radii[i]));
  }
}

TEST_CASE("2x2 constant image at unit radius") {
  const auto surface = build_surface(GrayImage::filled(2, 2, 3));
  const auto exact = exact_edt_volumes(surface, 1.0);
  // 4 surface points; 4 above, 4 below and 8 in-plane neighbours at distance 1.
  CHECK(exact.curve.volumes == std::vector<std::int64_t>{4, 20});
  CHECK(brute_force_volumes(surface, 1.0) == exact.curve);
}

TEST_CASE("exact transform matches brute force on random images") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 6);
    const int h = 1 + static_cast<int>(rng() % 6);
    const auto image = random_image(rng, w, h, 15);
    const double r_max = 2.0 + static_cast<double>(rng() % 3);
    const auto surface = build_surface(image);
    CHECK(exact_edt_volumes(surface, r_max).curve == brute_force_volumes(surface, r_max));
  }
}

TEST_CASE("exact transform matches brute force on spiky surfaces") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    const auto image = random_image(rng, 8, 8, 255);
    const auto surface = build_surface(image);
    CHECK(exact_edt_volumes(surface, 5.0).curve == brute_force_volumes(surface, 5.0));
  }
  // Non-integer radius.
  const auto surface = build_surface(random_image(rng, 5, 4, 40));
  CHECK(exact_edt_volumes(surface, 3.7).curve == brute_force_volumes(surface, 3.7));
}

TEST_CASE("shell counts and curve invariants") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto image = random_image(rng, 3 + static_cast<int>(rng() % 10), 3 + static_cast<int>(rng() % 10), 255);
    const auto result = exact_edt_volumes(build_surface(image), 6.0);
    const auto pixels = static_cast<std::int64_t>(image.pixels().size());
    CHECK(result.shells.counts.at(0) == pixels);

    const auto reps = representable_distances(6.0).squared;
    for (const auto& [n, q] : result.shells.counts) {
      CHECK(q >= 0);
      CHECK(std::binary_search(reps.begin(), reps.end(), n));
    }

    const auto& c = result.curve;
    CHECK(c.radii.front() == 0.0);
    CHECK(c.volumes.front() == pixels);
    for (std::size_t i = 1; i < c.size(); ++i) {
      CHECK(c.radii[i] > c.radii[i - 1]);
      CHECK(c.volumes[i] > c.volumes[i - 1]);
      CHECK(c.volumes[i] >= pixels);
    }
  }
}

TEST_CASE("volume curve is invariant to intensity offset and transposition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto image = random_image(rng, 4 + static_cast<int>(rng() % 12), 4 + static_cast<int>(rng() % 12), 200);
    const auto base = exact_edt_volumes(build_surface(image), 7.0).curve;
    const auto shifted = bmfd::testing::add_constant(image, 1 + static_cast<int>(rng() % 55));
    CHECK(exact_edt_volumes(build_surface(shifted), 7.0).curve == base);
    CHECK(exact_edt_volumes(build_surface(image.transposed()), 7.0).curve == base);
  }
}

TEST_CASE("threaded slices give identical counts") {
  std::mt19937_64 rng(21);
  const auto surface = build_surface(random_image(rng, 24, 20, 255));
  EdtOptions threaded;
  threaded.threads = 3;
  const auto a = exact_edt_volumes(surface, 8.0);
  const auto b = exact_edt_volumes(surface, 8.0, threaded);
  CHECK(a.curve == b.curve);
  CHECK(a.shells.counts == b.shells.counts);
}

TEST_CASE("voxel cap") {
  EdtOptions tight;
  tight.max_voxels = 1000;
  const auto surface = build_surface(GrayImage::filled(16, 16, 0));
  try {
    exact_edt_volumes(surface, 10.0, tight);
    FAIL("expected VolumeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VolumeTooLarge);
    // 36 x 36 x 21 padded lattice
    CHECK(std::string(e.what()).find("27216") != std::string::npos);
  }
  CHECK_THROWS_AS(exact_edt_volumes(surface, 0.5), Error);
}

TEST_CASE("volume curve CSV") {
  const auto curve = exact_edt_volumes(build_surface(image_from(1, 1, {0})), std::sqrt(2.0)).curve;
  std::ostringstream out;
  write_volume_curve_csv(out, curve);
  CHECK(out.str() ==
        "radius,sq_radius,volume\n"
        "0.000000,0,1\n"
        "1.000000,1,7\n"
        "1.414214,2,19\n");
}
