#include "covlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace covlab {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (double c : coords)
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
}

void require_valid(const GeoPoint& p) {
  if (!std::isfinite(p.lon) || !std::isfinite(p.lat) || p.lon < -180.0 || p.lon > 180.0 ||
      p.lat < -90.0 || p.lat > 90.0)
    throw std::invalid_argument("lon/lat out of range");
}

}  // namespace

std::array<double, 3> GeoPoint::unit_vector() const {
  const double lo = lon * M_PI / 180.0;
  const double la = lat * M_PI / 180.0;
  return {std::cos(la) * std::cos(lo), std::cos(la) * std::sin(lo), std::sin(la)};
}

MetricSpec MetricSpec::joint_rescaled(double alpha_g, double alpha_e) {
  if (alpha_g < 0.0 || alpha_e < 0.0 || (alpha_g == 0.0 && alpha_e == 0.0))
    throw std::invalid_argument("joint-rescaled weights must be >= 0 and not both zero");
  return {MetricKind::JointRescaled, AngleUnit::Radians, alpha_g, alpha_e};
}

double euclidean_distance(const EuclideanPoint& a, const EuclideanPoint& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("euclidean_distance: dimension mismatch");
  if (a.coords.empty()) throw std::invalid_argument("euclidean_distance: empty point");
  require_finite(a.coords);
  require_finite(b.coords);
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double great_circle_distance(const GeoPoint& a, const GeoPoint& b, AngleUnit unit) {
  require_valid(a);
  require_valid(b);
  // arccos(dot) loses ~sqrt(eps) near coincident points; identity is exact
  if (a.lon == b.lon && a.lat == b.lat) return 0.0;
  const auto va = a.unit_vector();
  const auto vb = b.unit_vector();
  double dot = va[0] * vb[0] + va[1] * vb[1] + va[2] * vb[2];
  // roundoff can push |dot| past 1 for near-coincident or antipodal points
  dot = std::clamp(dot, -1.0, 1.0);
  const double rad = std::acos(dot);
  return unit == AngleUnit::Radians ? rad : rad * (180.0 / M_PI);
}

double env_distance(const JointSample& a, const JointSample& b) {
  if (!std::isfinite(a.env) || !std::isfinite(b.env))
    throw std::invalid_argument("non-finite environmental value");
  return std::abs(a.env - b.env);
}

double joint_rescaled_distance(const JointSample& a, const JointSample& b, double alpha_g,
                               double alpha_e) {
  if (alpha_g < 0.0 || alpha_e < 0.0 || (alpha_g == 0.0 && alpha_e == 0.0))
    throw std::invalid_argument("joint-rescaled weights must be >= 0 and not both zero");
  const auto* pa = std::get_if<EuclideanPoint>(&a.site);
  const auto* pb = std::get_if<EuclideanPoint>(&b.site);
  if (!pa || !pb)
    throw std::invalid_argument(
        "joint_rescaled_distance requires Euclidean sites; there is no geodesic analogue");
  const double h = euclidean_distance(*pa, *pb);
  const double u = env_distance(a, b);
  return std::sqrt(alpha_g * h * h + alpha_e * u * u);
}

double site_distance(const JointSample& a, const JointSample& b, const MetricSpec& metric) {
  switch (metric.kind) {
    case MetricKind::Euclidean: {
      const auto* pa = std::get_if<EuclideanPoint>(&a.site);
      const auto* pb = std::get_if<EuclideanPoint>(&b.site);
      if (!pa || !pb) throw std::invalid_argument("euclidean metric requires Euclidean sites");
      return euclidean_distance(*pa, *pb);
    }
    case MetricKind::GreatCircle: {
      const auto* pa = std::get_if<GeoPoint>(&a.site);
      const auto* pb = std::get_if<GeoPoint>(&b.site);
      if (!pa || !pb) throw std::invalid_argument("great-circle metric requires lon/lat sites");
      return great_circle_distance(*pa, *pb, metric.angle_unit);
    }
    case MetricKind::JointRescaled:
      return joint_rescaled_distance(a, b, metric.alpha_g, metric.alpha_e);
  }
  throw std::logic_error("unreachable");
}

JointSample sample_xy(double x, double y, double env) {
  return JointSample{EuclideanPoint{{x, y}}, env};
}

JointSample sample_lonlat(double lon, double lat, double env) {
  return JointSample{GeoPoint{lon, lat}, env};
}

}  // namespace covlab
