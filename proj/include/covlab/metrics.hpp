#pragma once
#include <array>
#include <variant>
#include <vector>

namespace covlab {

// A point in R^d. Units (km, dimensionless, ...) are the caller's contract.
struct EuclideanPoint {
  std::vector<double> coords;
};

// A point on the unit sphere given as longitude/latitude in degrees.
struct GeoPoint {
  double lon = 0.0;  // [-180, 180]
  double lat = 0.0;  // [-90, 90]

  // (cos lat cos lon, cos lat sin lon, sin lat); unit norm to ~1e-12
  std::array<double, 3> unit_vector() const;
};

using Site = std::variant<EuclideanPoint, GeoPoint>;

// A sampling location in the geographic x environmental domain.
struct JointSample {
  Site site;
  double env = 0.0;
};

enum class MetricKind { Euclidean, GreatCircle, JointRescaled };
enum class AngleUnit { Radians, Degrees };

struct MetricSpec {
  MetricKind kind = MetricKind::Euclidean;
  AngleUnit angle_unit = AngleUnit::Radians;  // great-circle only
  double alpha_g = 1.0;                       // joint-rescaled weights
  double alpha_e = 1.0;

  static MetricSpec euclidean() { return {MetricKind::Euclidean, AngleUnit::Radians, 1.0, 1.0}; }
  static MetricSpec great_circle(AngleUnit unit = AngleUnit::Radians) {
    return {MetricKind::GreatCircle, unit, 1.0, 1.0};
  }
  static MetricSpec joint_rescaled(double alpha_g, double alpha_e);
};

double euclidean_distance(const EuclideanPoint& a, const EuclideanPoint& b);

// arccos of the clamped dot product of unit vectors; [0,pi] rad or [0,180] deg
double great_circle_distance(const GeoPoint& a, const GeoPoint& b,
                             AngleUnit unit = AngleUnit::Radians);

double env_distance(const JointSample& a, const JointSample& b);

// sqrt(alpha_g * ||x-x'||^2 + alpha_e * (e-e')^2); Euclidean sites only
double joint_rescaled_distance(const JointSample& a, const JointSample& b,
                               double alpha_g, double alpha_e);

// geographic separation of two samples under a Euclidean or great-circle metric
double site_distance(const JointSample& a, const JointSample& b, const MetricSpec& metric);

// convenience constructors
JointSample sample_xy(double x, double y, double env = 0.0);
JointSample sample_lonlat(double lon, double lat, double env = 0.0);

}  // namespace covlab
