#pragma once
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "covlab/models.hpp"

namespace covlab {

// Bernstein function catalog: b*lambda, lambda^alpha (0 < alpha <= 1),
// log(1 + lambda). All vanish at 0, are nondecreasing and concave.
struct BernsteinFunction {
  enum class Form { Linear, Power, LogOnePlus };
  Form form = Form::Linear;
  double param = 1.0;

  static BernsteinFunction linear(double b);
  static BernsteinFunction power(double alpha);
  static BernsteinFunction log_one_plus();

  double operator()(double lambda) const;
  std::string name() const;
};

enum class VarForm {
  SquaredNorm,   // ||v||^2
  Quadratic,     // v . Q v, Q symmetric psd
  OneMinusCos,   // 1 - cos(y . v)
  LogOnePlusSq,  // log(1 + ||v||^2)
  PowerNorm,     // ||v||^alpha, 0 < alpha <= 2
  BrcExponent,   // (||eta|| + |tau|)^alpha, tau the last coordinate
  NormProduct,   // ||eta|| * |tau|, the mixed term of the alpha = 2 expansion
  DirectSum,     // gamma(v') + psi(v'') on axis blocks
  Subordinated,  // f(gamma(v)) with f Bernstein
  Restriction    // child with zeros on dropped axes
};

// Variogram candidates as closed-form expression trees. Construction checks
// structural invariants only; whether a member is really a variogram is what
// neg_def_test decides.
class Variogram {
 public:
  static Variogram squared_norm(int dim);
  static Variogram quadratic(Eigen::MatrixXd q);
  static Variogram one_minus_cos(Eigen::VectorXd y);
  static Variogram log_one_plus_sq(int dim);
  static Variogram power_norm(int dim, double alpha);
  static Variogram brc_exponent(int spatial_dim, double alpha);
  static Variogram norm_product(int spatial_dim);
  static Variogram direct_sum(Variogram first, Variogram second);
  static Variogram subordinated(BernsteinFunction f, Variogram child);
  static Variogram restriction(Variogram child, std::vector<int> kept_axes);

  int dimension() const;
  VarForm form() const;
  double operator()(const Eigen::VectorXd& v) const;

  nlohmann::json to_json() const;
  static Variogram from_json(const nlohmann::json& j);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit Variogram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

Variogram subordinate(const BernsteinFunction& f, const Variogram& gamma);
Variogram restrict_axes(const Variogram& gamma, const std::vector<int>& kept_axes);

struct NegDefWitness {
  Eigen::MatrixXd points;   // rows are the points
  Eigen::VectorXd weights;  // zero-sum
  double form_value = 0.0;  // positive quadratic form that broke the test
};

struct NegDefResult {
  bool pass = true;
  std::optional<NegDefWitness> witness;
};

// Randomized negative-definiteness test: draws point sets (random clouds and
// site x last-axis product grids) and zero-sum weight vectors; fails on the
// first quadratic form exceeding +tol. Deterministic given the seed.
NegDefResult neg_def_test(const Variogram& gamma, int trials, int points_per_trial,
                          std::uint64_t seed);

struct SubadditivityWitness {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  double lhs = 0.0;  // sqrt(gamma(a+b))
  double rhs = 0.0;  // sqrt(gamma(a)) + sqrt(gamma(b))
};

struct SubadditivityResult {
  bool pass = true;
  std::optional<SubadditivityWitness> witness;
};

SubadditivityResult subadditivity_check(const Variogram& gamma, int trials, std::uint64_t seed);
// same check over an arbitrary candidate function
SubadditivityResult subadditivity_check_fn(const std::function<double(const Eigen::VectorXd&)>& gamma,
                                           int dim, int trials, std::uint64_t seed);

// K(p, q) = exp(-r * gamma(p - q))
class SchoenbergKernel {
 public:
  SchoenbergKernel(Variogram gamma, double r);
  double operator()(const Eigen::VectorXd& p, const Eigen::VectorXd& q) const;
  Eigen::MatrixXd gram(const Eigen::MatrixXd& points) const;  // rows are points
  const Variogram& variogram() const { return gamma_; }
  double rate() const { return r_; }

 private:
  Variogram gamma_;
  double r_;
};

SchoenbergKernel schoenberg_cov(const Variogram& gamma, double r);

}  // namespace covlab
