#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "covlab/metrics.hpp"

namespace covlab {

enum class Family { Stable, Brc, ModifiedBrc, Exponential, Triangle, Sum, Product };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Parametric covariance catalog.
//   stable        C(h)   = (1/a0) exp[-(aG h)^a2]
//   brc           C(h,u) = (1/a0) exp[-(aG h + aE u)^a2]
//   modified-brc  C(d)   = (1/a0) exp[-d^a2],  d = sqrt(aG h^2 + aE u^2)
//   exponential   stable with a2 = 1
//   triangle      C(h)   = (1/a0) (1 - aG h)_+
//   sum/product   C_G(h) +/* C_E(u) with one geographic and one environmental child
struct CovarianceModel {
  Family family = Family::Stable;
  double alpha0 = 1.0;  // reciprocal sill
  double alpha_g = 1.0;
  double alpha_e = 0.0;
  double alpha2 = 1.0;
  std::vector<CovarianceModel> children;  // composites: exactly two

  static CovarianceModel stable(double alpha0, double alpha_g, double alpha2);
  static CovarianceModel brc(double alpha0, double alpha_g, double alpha_e, double alpha2);
  static CovarianceModel modified_brc(double alpha0, double alpha_g, double alpha_e,
                                      double alpha2);
  static CovarianceModel exponential(double alpha0, double alpha_g);
  static CovarianceModel triangle(double alpha0, double alpha_g);
  static CovarianceModel sum(CovarianceModel geographic, CovarianceModel environmental);
  static CovarianceModel product(CovarianceModel geographic, CovarianceModel environmental);

  // C at zero separation: 1/alpha0, composites combine children
  double sill() const;
  bool is_composite() const { return family == Family::Sum || family == Family::Product; }
};

double evaluate(const CovarianceModel& model, double h, double u);

// Computes (h, u) under the metric and delegates to evaluate(); the
// modified-BRC family instead uses the joint re-scaled distance directly.
double evaluate_pair(const CovarianceModel& model, const JointSample& a, const JointSample& b,
                     const MetricSpec& metric);

enum class BaseSpace { Euclidean, Sphere };

struct DomainSpec {
  BaseSpace base = BaseSpace::Euclidean;
  int dim = 2;  // Euclidean: d >= 1; sphere: surface dimension (S^dim)
  bool with_environment = false;

  static DomainSpec euclidean(int d, bool with_env = false);
  static DomainSpec sphere(int surface_dim = 2, bool with_env = false);
  std::string name() const;
};

enum class Validity { KnownValid, KnownInvalid, Unknown };

std::string validity_name(Validity v);

struct ValidityVerdict {
  Validity status = Validity::Unknown;
  std::string source;  // which summary-table row decided it
  std::string note;
};

// Range-of-validity lookup for the catalog. Throws on family/domain
// combinations the summary table does not cover.
ValidityVerdict validity_range(const CovarianceModel& model, const DomainSpec& domain);

nlohmann::json model_to_json(const CovarianceModel& model);
CovarianceModel model_from_json(const nlohmann::json& j);

}  // namespace covlab
