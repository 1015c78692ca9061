#include "covlab/kriging.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace covlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double metric_lag(const JointSample& a, const JointSample& b, const MetricSpec& metric) {
  if (metric.kind == MetricKind::JointRescaled)
    return joint_rescaled_distance(a, b, metric.alpha_g, metric.alpha_e);
  return site_distance(a, b, metric);
}

// standard Nelder-Mead simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5) with a relative-decrease stopping rule
template <typename F>
Eigen::VectorXd nelder_mead(const F& f, Eigen::VectorXd x0, int max_iter, double ftol_rel) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts;
  std::vector<double> vals;
  pts.push_back(x0);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = x0;
    x(i) += 0.05 * std::max(1e-4, std::abs(x(i)));
    pts.push_back(x);
  }
  for (const auto& p : pts) vals.push_back(f(p));

  auto order = [&] {
    for (std::size_t i = 1; i < pts.size(); ++i) {
      auto p = pts[i];
      auto v = vals[i];
      std::size_t j = i;
      while (j > 0 && vals[j - 1] > v) {
        pts[j] = pts[j - 1];
        vals[j] = vals[j - 1];
        --j;
      }
      pts[j] = p;
      vals[j] = v;
    }
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    if (std::abs(vals.back() - vals.front()) <= ftol_rel * std::max(1.0, std::abs(vals.front())))
      break;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) centroid += pts[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + (centroid - pts.back());
    const double fr = f(xr);
    if (fr < vals.front()) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts.back());
      const double fe = f(xe);
      if (fe < fr) {
        pts.back() = xe;
        vals.back() = fe;
      } else {
        pts.back() = xr;
        vals.back() = fr;
      }
    } else if (fr < vals[vals.size() - 2]) {
      pts.back() = xr;
      vals.back() = fr;
    } else {
      const Eigen::VectorXd xc = centroid + 0.5 * (pts.back() - centroid);
      const double fc = f(xc);
      if (fc < vals.back()) {
        pts.back() = xc;
        vals.back() = fc;
      } else {
        for (std::size_t i = 1; i < pts.size(); ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  order();
  return pts.front();
}

}  // namespace

double EmpiricalCovariance::bin_center(std::size_t k) const {
  if (k == 0) return 0.0;  // bin 0 holds the i = j pairs
  return 0.5 * (bin_edges[k] + bin_edges[k + 1]);
}

KrigingResult simple_krige(const CovarianceModel& model, const FieldData& data,
                           const std::vector<JointSample>& targets) {
  const auto n = static_cast<Eigen::Index>(data.config.samples.size());
  if (data.values.size() != n)
    throw std::invalid_argument("simple_krige: values length does not match configuration");
  if (!data.values.allFinite() || !std::isfinite(data.mean))
    throw std::invalid_argument("simple_krige: non-finite observations or mean");

  const Eigen::MatrixXd c = gram_matrix(model, data.config);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(c);
  const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
  const double dmax = diag.maxCoeff();
  const double dmin = diag.minCoeff();
  if (dmin <= static_cast<double>(n) * kEps * dmax) {
    std::ostringstream msg;
    msg << "simple_krige: covariance matrix is singular";
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (metric_lag(data.config.samples[i], data.config.samples[j], data.config.metric) == 0.0 &&
            env_distance(data.config.samples[i], data.config.samples[j]) == 0.0) {
          msg << "; duplicated samples at indices " << i << " and " << j;
          throw std::invalid_argument(msg.str());
        }
    throw std::invalid_argument(msg.str());
  }

  const double sill = model.sill();
  KrigingResult result;
  result.solver_tolerance = static_cast<double>(n) * kEps * std::max(1.0, sill) * (dmax / dmin);
  result.predictions.resize(static_cast<Eigen::Index>(targets.size()));
  result.variances.resize(static_cast<Eigen::Index>(targets.size()));

  const Eigen::VectorXd weights =
      lu.solve((data.values.array() - data.mean).matrix().eval());

  Eigen::VectorXd ct(n);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (Eigen::Index i = 0; i < n; ++i)
      ct(i) = evaluate_pair(model, data.config.samples[i], targets[t], data.config.metric);
    result.predictions(t) = data.mean + ct.dot(weights);
    result.variances(t) = sill - ct.dot(lu.solve(ct));
  }

  const Eigen::Index negatives =
      (result.variances.array() < -result.solver_tolerance).count();
  if (negatives > 0) {
    std::ostringstream w;
    w << negatives << " kriging variance(s) below -" << result.solver_tolerance
      << "; the covariance model is not positive-definite on this configuration";
    result.warnings.push_back(w.str());
  }
  return result;
}

EmpiricalCovariance empirical_covariance(const FieldData& data, double bin_width,
                                         double max_lag) {
  if (!(bin_width > 0.0) || !(max_lag > 0.0))
    throw std::invalid_argument("empirical_covariance: bin_width and max_lag must be > 0");
  const auto n = static_cast<Eigen::Index>(data.config.samples.size());
  if (data.values.size() != n)
    throw std::invalid_argument("empirical_covariance: values length does not match configuration");

  const std::size_t bins = static_cast<std::size_t>(std::ceil(max_lag / bin_width));
  EmpiricalCovariance emp;
  emp.bin_edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) emp.bin_edges[k] = k * bin_width;
  emp.estimates.assign(bins, std::numeric_limits<double>::quiet_NaN());
  emp.counts.assign(bins, 0);

  const double mean_hat = data.values.mean();
  std::vector<double> sums(bins, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double lag = metric_lag(data.config.samples[i], data.config.samples[j],
                                    data.config.metric);
      if (lag >= max_lag) continue;
      const auto k = static_cast<std::size_t>(lag / bin_width);
      sums[k] += (data.values(i) - mean_hat) * (data.values(j) - mean_hat);
      emp.counts[k] += 1;
    }
  }
  for (std::size_t k = 0; k < bins; ++k)
    if (emp.counts[k] > 0) emp.estimates[k] = sums[k] / static_cast<double>(emp.counts[k]);
  return emp;
}

CovarianceModel fit_model(const EmpiricalCovariance& emp, const CovarianceModel& init,
                          const FitOptions& options) {
  if (init.is_composite())
    throw std::invalid_argument("fit_model: composite families are not fittable");

  std::vector<double> lags, estimates, weights;
  for (std::size_t k = 0; k < emp.estimates.size(); ++k) {
    if (emp.counts[k] == 0) continue;
    lags.push_back(emp.bin_center(k));
    estimates.push_back(emp.estimates[k]);
    weights.push_back(static_cast<double>(emp.counts[k]));
  }
  if (lags.size() < 3) throw std::invalid_argument("fit_model: fewer than 3 nonempty bins");

  const bool has_exponent =
      init.family == Family::Stable || init.family == Family::Brc ||
      init.family == Family::ModifiedBrc;
  const double alpha2_cap = options.domain.base == BaseSpace::Sphere ? 1.0 : 2.0;

  constexpr double kLo = 1e-8, kHi = 1e8;
  if (init.alpha0 < kLo || init.alpha0 > kHi || init.alpha_g < kLo || init.alpha_g > kHi ||
      (has_exponent && (init.alpha2 <= 0.0 || init.alpha2 > alpha2_cap)))
    throw std::invalid_argument("fit_model: init parameters outside the valid box");

  auto build = [&](double a0, double ag, double a2) {
    a0 = std::clamp(a0, kLo, kHi);
    ag = std::clamp(ag, kLo, kHi);
    a2 = std::clamp(a2, 1e-6, alpha2_cap);
    switch (init.family) {
      case Family::Stable: return CovarianceModel::stable(a0, ag, a2);
      case Family::Brc: return CovarianceModel::brc(a0, ag, init.alpha_e, a2);
      case Family::ModifiedBrc: return CovarianceModel::modified_brc(a0, ag, init.alpha_e, a2);
      case Family::Exponential: return CovarianceModel::exponential(a0, ag);
      case Family::Triangle: return CovarianceModel::triangle(a0, ag);
      default: throw std::logic_error("unreachable");
    }
  };

  auto loss = [&](const Eigen::VectorXd& theta) {
    const CovarianceModel m = build(std::exp(theta(0)), std::exp(theta(1)),
                                    has_exponent ? std::exp(theta(2)) : 1.0);
    double s = 0.0;
    for (std::size_t k = 0; k < lags.size(); ++k) {
      const double r = estimates[k] - evaluate(m, lags[k], 0.0);
      s += weights[k] * r * r;
    }
    return s;
  };

  Eigen::VectorXd theta0(has_exponent ? 3 : 2);
  theta0(0) = std::log(init.alpha0);
  theta0(1) = std::log(init.alpha_g);
  if (has_exponent) theta0(2) = std::log(init.alpha2);

  const Eigen::VectorXd best = nelder_mead(loss, theta0, options.max_iter, options.ftol_rel);
  return build(std::exp(best(0)), std::exp(best(1)), has_exponent ? std::exp(best(2)) : 1.0);
}

}  // namespace covlab
