#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "covlab/metrics.hpp"
#include "covlab/rng.hpp"

using namespace covlab;

TEST_CASE("euclidean distance closed forms") {
  CHECK(euclidean_distance({{0, 0}}, {{0, 0}}) == 0.0);
  CHECK(euclidean_distance({{0, 0}}, {{3, 4}}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(euclidean_distance({{1, 1, 1}}, {{2, 2, 2}}) ==
        doctest::Approx(1.7320508075688772).epsilon(1e-15));
  CHECK_THROWS_AS(euclidean_distance({{0, 0}}, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_distance({{0, std::nan("")}}, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("great-circle distance closed forms") {
  const GeoPoint origin{0, 0};
  CHECK(great_circle_distance(origin, origin) == 0.0);
  CHECK(great_circle_distance(origin, {180, 0}) == doctest::Approx(M_PI).epsilon(1e-15));

  // high-precision value from the spherical law of cosines
  const double d = great_circle_distance({-60.0, 60}, {-60.1, 60});
  CHECK(d == doctest::Approx(8.726645429273876e-4).epsilon(1e-10));

  // independent route: haversine formula on the same pair
  auto haversine = [](const GeoPoint& a, const GeoPoint& b) {
    const double la1 = a.lat * M_PI / 180, la2 = b.lat * M_PI / 180;
    const double dlat = (b.lat - a.lat) * M_PI / 180, dlon = (b.lon - a.lon) * M_PI / 180;
    const double s1 = std::sin(dlat / 2), s2 = std::sin(dlon / 2);
    return 2 * std::asin(std::sqrt(s1 * s1 + std::cos(la1) * std::cos(la2) * s2 * s2));
  };
  CHECK(d == doctest::Approx(haversine({-60.0, 60}, {-60.1, 60})).epsilon(1e-11));

  CHECK_THROWS_AS(great_circle_distance({-200, 0}, origin), std::invalid_argument);
  CHECK_THROWS_AS(great_circle_distance({0, 95}, origin), std::invalid_argument);
}

TEST_CASE("great-circle clamping never yields NaN for near-coincident points") {
  Rng rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    const double lon = rng.uniform(-180.0, 179.0);
    const double lat = rng.uniform(-89.0, 89.0);
    const double dl = rng.uniform(0.0, 1e-9);
    const double d = great_circle_distance({lon, lat}, {lon + dl, lat + dl * 0.5});
    CHECK(std::isfinite(d));
    CHECK(d >= 0.0);
  }
}

TEST_CASE("environmental and joint re-scaled distances") {
  CHECK(env_distance(sample_xy(0, 0, 0.1), sample_xy(1, 1, 0.1)) == 0.0);
  CHECK(env_distance(sample_xy(0, 0, 0.1), sample_xy(1, 1, 0.3)) ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK(env_distance(sample_xy(0, 0, -1), sample_xy(1, 1, 1)) == 2.0);

  const JointSample a = sample_xy(0, 0, 0);
  const JointSample b = sample_xy(3, 0, 4);
  CHECK(joint_rescaled_distance(a, a, 1, 1) == 0.0);
  CHECK(joint_rescaled_distance(a, b, 1, 1) == doctest::Approx(5.0).epsilon(1e-15));
  // alpha_g = 0 reduces to the environmental distance
  CHECK(joint_rescaled_distance(a, b, 0, 1) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(joint_rescaled_distance(sample_lonlat(0, 0), sample_lonlat(1, 1), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(joint_rescaled_distance(a, b, 0, 0), std::invalid_argument);
}

TEST_CASE("metric axioms on random pairs") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const JointSample a = sample_xy(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 2));
    const JointSample b = sample_xy(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 2));
    const GeoPoint ga{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const GeoPoint gb{rng.uniform(-180, 180), rng.uniform(-90, 90)};

    const double de = site_distance(a, b, MetricSpec::euclidean());
    CHECK(de >= 0.0);
    CHECK(de == site_distance(b, a, MetricSpec::euclidean()));
    CHECK(site_distance(a, a, MetricSpec::euclidean()) == 0.0);

    const double dg = great_circle_distance(ga, gb);
    CHECK(dg >= 0.0);
    CHECK(dg <= M_PI);
    CHECK(dg == great_circle_distance(gb, ga));
    CHECK(great_circle_distance(ga, ga) == 0.0);

    const double dj = joint_rescaled_distance(a, b, 0.7, 1.3);
    CHECK(dj >= 0.0);
    CHECK(dj == joint_rescaled_distance(b, a, 0.7, 1.3));
  }
}

TEST_CASE("triangle inequality on random triples") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const JointSample a = sample_xy(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 2));
    const JointSample b = sample_xy(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 2));
    const JointSample c = sample_xy(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-2, 2));
    const MetricSpec eu = MetricSpec::euclidean();
    CHECK(site_distance(a, c, eu) <= site_distance(a, b, eu) + site_distance(b, c, eu) + 1e-12);
    CHECK(joint_rescaled_distance(a, c, 0.7, 1.3) <=
          joint_rescaled_distance(a, b, 0.7, 1.3) + joint_rescaled_distance(b, c, 0.7, 1.3) + 1e-12);

    const GeoPoint ga{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const GeoPoint gb{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const GeoPoint gc{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    CHECK(great_circle_distance(ga, gc) <=
          great_circle_distance(ga, gb) + great_circle_distance(gb, gc) + 1e-12);
  }
}

TEST_CASE("degree and radian modes differ by exactly pi/180") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const GeoPoint a{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const GeoPoint b{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const double rad = great_circle_distance(a, b, AngleUnit::Radians);
    const double deg = great_circle_distance(a, b, AngleUnit::Degrees);
    CHECK(deg == rad * (180.0 / M_PI));  // one multiplication, exact relation
  }
}

TEST_CASE("geo unit vectors have unit norm") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint g{rng.uniform(-180, 180), rng.uniform(-90, 90)};
    const auto v = g.unit_vector();
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    CHECK(std::abs(n - 1.0) < 1e-12);
  }
}
