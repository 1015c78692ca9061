#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "covlab/models.hpp"

namespace covlab {

// A finite sampling configuration with the metric its pairwise lags use.
struct Configuration {
  std::vector<JointSample> samples;
  MetricSpec metric;
};

enum class PdVerdict { Pd, PsdBoundary, NotPd };

std::string pd_verdict_name(PdVerdict v);

// Outcome of an eigenvalue positive-definiteness check.
// verdict is not-pd iff lambda_min < -tolerance, psd-boundary iff
// |lambda_min| <= tolerance, with tolerance = n * eps * max(1, lambda_max).
struct PDCertificate {
  int n = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double tolerance = 0.0;
  PdVerdict verdict = PdVerdict::Pd;
  std::optional<Configuration> witness;  // present when not-pd
};

// M[i][j] = evaluate_pair(model, s_i, s_j); exactly symmetric
Eigen::MatrixXd gram_matrix(const CovarianceModel& model, const Configuration& config);

double min_eigenvalue(const Eigen::MatrixXd& m);

PDCertificate certify_pd(const CovarianceModel& model, const Configuration& config);

struct SearchOptions {
  int budget = 1000;      // restart count
  int max_points = 50;    // configuration sizes escalate 3..max_points
  std::uint64_t seed = 0;
  bool structured = true;  // include lattice / product-grid proposals
};

// Randomized hunt for a configuration whose Gram matrix is not
// positive semi-definite. Absence of a witness proves nothing.
std::optional<std::pair<Configuration, PDCertificate>> counterexample_search(
    const CovarianceModel& model, const DomainSpec& domain, const SearchOptions& options);

std::optional<std::pair<Configuration, PDCertificate>> counterexample_search(
    const CovarianceModel& model, const DomainSpec& domain, int budget, std::uint64_t seed);

// the 9-sample product grid of the published spherical counterexample:
// sites (-60.0,60), (-60.1,60), (-60.2,60) crossed with e in {0.1, 0.2, 0.3}
Configuration spherical_grid_configuration(AngleUnit unit);

// mean + L z with L the lower Cholesky factor of the Gram matrix.
// Refuses models that are not pd-certified on the configuration.
std::vector<Eigen::VectorXd> cholesky_simulate(const CovarianceModel& model,
                                               const Configuration& config, double mean,
                                               int count, std::uint64_t seed);

nlohmann::json certificate_to_json(const PDCertificate& cert);
nlohmann::json configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace covlab
