#pragma once
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "covlab/gram.hpp"
#include "covlab/models.hpp"

namespace covlab {

// Observations z over a configuration, with the (known) process mean.
struct FieldData {
  Configuration config;
  Eigen::VectorXd values;
  double mean = 0.0;
};

struct EmpiricalCovariance {
  std::vector<double> bin_edges;  // increasing; bin k = [edges[k], edges[k+1])
  std::vector<double> estimates;  // NaN where the bin is empty
  std::vector<long> counts;
  // bin 0 contains the i = j pairs and estimates C(0); its center is 0
  double bin_center(std::size_t k) const;
};

struct KrigingResult {
  Eigen::VectorXd predictions;
  Eigen::VectorXd variances;  // negative values preserved, never clipped
  std::vector<std::string> warnings;
  double solver_tolerance = 0.0;  // backward-error scale for variance checks
};

// Simple kriging with known mean: prediction m + c_t' C^-1 (z - m),
// variance C(0) - c_t' C^-1 c_t. The solve is a general LU decomposition on
// purpose: models that are not positive-definite still produce (pathological)
// output instead of failing.
KrigingResult simple_krige(const CovarianceModel& model, const FieldData& data,
                           const std::vector<JointSample>& targets);

// Binned covariance estimate over unordered pairs using the global sample
// mean. Bin 0 (lag < bin_width) includes the i = j pairs.
EmpiricalCovariance empirical_covariance(const FieldData& data, double bin_width,
                                         double max_lag);

struct FitOptions {
  int max_iter = 2000;
  double ftol_rel = 1e-8;  // relative decrease stopping rule
  DomainSpec domain = DomainSpec::euclidean(2);
};

// Weighted least squares over bin estimates (weights = pair counts) with a
// derivative-free simplex refinement from the init model. Returned parameters
// respect the validity range of the declared domain.
CovarianceModel fit_model(const EmpiricalCovariance& emp, const CovarianceModel& init,
                          const FitOptions& options = {});

}  // namespace covlab
