#include "covlab/variogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "covlab/rng.hpp"

namespace covlab {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

BernsteinFunction BernsteinFunction::linear(double b) {
  if (b < 0.0 || !std::isfinite(b)) throw std::invalid_argument("linear Bernstein needs b >= 0");
  return {Form::Linear, b};
}

BernsteinFunction BernsteinFunction::power(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("power Bernstein needs 0 < alpha <= 1");
  return {Form::Power, alpha};
}

BernsteinFunction BernsteinFunction::log_one_plus() { return {Form::LogOnePlus, 0.0}; }

double BernsteinFunction::operator()(double lambda) const {
  if (lambda < 0.0) throw std::invalid_argument("Bernstein functions live on [0, inf)");
  switch (form) {
    case Form::Linear: return param * lambda;
    case Form::Power: return std::pow(lambda, param);
    case Form::LogOnePlus: return std::log1p(lambda);
  }
  throw std::logic_error("unreachable");
}

std::string BernsteinFunction::name() const {
  switch (form) {
    case Form::Linear: return "linear";
    case Form::Power: return "power";
    case Form::LogOnePlus: return "log-one-plus";
  }
  throw std::logic_error("unreachable");
}

struct Variogram::Node {
  VarForm form;
  int dim = 0;
  double alpha = 0.0;
  Eigen::MatrixXd q;
  Eigen::VectorXd y;
  BernsteinFunction bernstein;
  std::vector<int> kept;
  std::vector<Variogram> children;
};

Variogram Variogram::squared_norm(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  auto n = std::make_shared<Node>();
  n->form = VarForm::SquaredNorm;
  n->dim = dim;
  return Variogram(std::move(n));
}

Variogram Variogram::quadratic(Eigen::MatrixXd q) {
  if (q.rows() != q.cols() || q.rows() < 1) throw std::invalid_argument("Q must be square");
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, q.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("Q must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -q.rows() * kEps * std::max(1.0, es.eigenvalues().maxCoeff()))
    throw std::invalid_argument("Q must be positive semi-definite");
  auto n = std::make_shared<Node>();
  n->form = VarForm::Quadratic;
  n->dim = static_cast<int>(q.rows());
  n->q = std::move(q);
  return Variogram(std::move(n));
}

Variogram Variogram::one_minus_cos(Eigen::VectorXd y) {
  if (y.size() < 1) throw std::invalid_argument("y must be nonempty");
  auto n = std::make_shared<Node>();
  n->form = VarForm::OneMinusCos;
  n->dim = static_cast<int>(y.size());
  n->y = std::move(y);
  return Variogram(std::move(n));
}

Variogram Variogram::log_one_plus_sq(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  auto n = std::make_shared<Node>();
  n->form = VarForm::LogOnePlusSq;
  n->dim = dim;
  return Variogram(std::move(n));
}

Variogram Variogram::power_norm(int dim, double alpha) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("power-norm needs alpha > 0");
  auto n = std::make_shared<Node>();
  n->form = VarForm::PowerNorm;
  n->dim = dim;
  n->alpha = alpha;
  return Variogram(std::move(n));
}

Variogram Variogram::brc_exponent(int spatial_dim, double alpha) {
  if (spatial_dim < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("brc-exponent needs alpha > 0");
  auto n = std::make_shared<Node>();
  n->form = VarForm::BrcExponent;
  n->dim = spatial_dim + 1;
  n->alpha = alpha;
  return Variogram(std::move(n));
}

Variogram Variogram::norm_product(int spatial_dim) {
  if (spatial_dim < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  auto n = std::make_shared<Node>();
  n->form = VarForm::NormProduct;
  n->dim = spatial_dim + 1;
  return Variogram(std::move(n));
}

Variogram Variogram::direct_sum(Variogram first, Variogram second) {
  auto n = std::make_shared<Node>();
  n->form = VarForm::DirectSum;
  n->dim = first.dimension() + second.dimension();
  n->children.push_back(std::move(first));
  n->children.push_back(std::move(second));
  return Variogram(std::move(n));
}

Variogram Variogram::subordinated(BernsteinFunction f, Variogram child) {
  auto n = std::make_shared<Node>();
  n->form = VarForm::Subordinated;
  n->dim = child.dimension();
  n->bernstein = f;
  n->children.push_back(std::move(child));
  return Variogram(std::move(n));
}

Variogram Variogram::restriction(Variogram child, std::vector<int> kept_axes) {
  if (kept_axes.empty()) throw std::invalid_argument("restriction needs a nonempty axis set");
  for (int a : kept_axes)
    if (a < 0 || a >= child.dimension())
      throw std::invalid_argument("restriction axis out of range");
  auto n = std::make_shared<Node>();
  n->form = VarForm::Restriction;
  n->dim = static_cast<int>(kept_axes.size());
  n->kept = std::move(kept_axes);
  n->children.push_back(std::move(child));
  return Variogram(std::move(n));
}

int Variogram::dimension() const { return node_->dim; }
VarForm Variogram::form() const { return node_->form; }

double Variogram::operator()(const Eigen::VectorXd& v) const {
  const Node& n = *node_;
  if (v.size() != n.dim) throw std::invalid_argument("variogram argument has wrong dimension");
  switch (n.form) {
    case VarForm::SquaredNorm: return v.squaredNorm();
    case VarForm::Quadratic: return v.dot(n.q * v);
    case VarForm::OneMinusCos: return 1.0 - std::cos(n.y.dot(v));
    case VarForm::LogOnePlusSq: return std::log1p(v.squaredNorm());
    case VarForm::PowerNorm: return std::pow(v.norm(), n.alpha);
    case VarForm::BrcExponent:
      return std::pow(v.head(n.dim - 1).norm() + std::abs(v(n.dim - 1)), n.alpha);
    case VarForm::NormProduct: return v.head(n.dim - 1).norm() * std::abs(v(n.dim - 1));
    case VarForm::DirectSum: {
      const int d0 = n.children[0].dimension();
      return n.children[0](v.head(d0)) + n.children[1](v.tail(n.dim - d0));
    }
    case VarForm::Subordinated: return n.bernstein(n.children[0](v));
    case VarForm::Restriction: {
      Eigen::VectorXd padded = Eigen::VectorXd::Zero(n.children[0].dimension());
      for (int i = 0; i < n.dim; ++i) padded(n.kept[i]) = v(i);
      return n.children[0](padded);
    }
  }
  throw std::logic_error("unreachable");
}

Variogram subordinate(const BernsteinFunction& f, const Variogram& gamma) {
  return Variogram::subordinated(f, gamma);
}

Variogram restrict_axes(const Variogram& gamma, const std::vector<int>& kept_axes) {
  return Variogram::restriction(gamma, kept_axes);
}

NegDefResult neg_def_test(const Variogram& gamma, int trials, int points_per_trial,
                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("neg_def_test needs trials >= 1");
  if (points_per_trial < 2) throw std::invalid_argument("neg_def_test needs >= 2 points");
  const int dim = gamma.dimension();

  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    int n = std::min(points_per_trial, 4 + t % std::max(1, points_per_trial - 3));
    const bool grid = dim >= 2 && t % 2 == 1;

    Eigen::MatrixXd pts;
    if (grid) {
      // product structure over (leading block, last axis), after the
      // published spherical grid counterexample
      const int ns = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
      const int ne = std::max(2, n / ns);
      Eigen::MatrixXd blocks(ns, dim - 1);
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < dim - 1; ++j) blocks(i, j) = rng.uniform();
      Eigen::VectorXd last(ne);
      for (int i = 0; i < ne; ++i) last(i) = rng.uniform();
      pts.resize(ns * ne, dim);
      int row = 0;
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ne; ++j) {
          pts.row(row).head(dim - 1) = blocks.row(i);
          pts(row, dim - 1) = last(j);
          ++row;
        }
      n = ns * ne;
    } else {
      pts.resize(n, dim);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < dim; ++j) pts(i, j) = rng.uniform();
    }

    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
      g(i, i) = 0.0;
      for (int j = i + 1; j < n; ++j) {
        const double v = gamma(Eigen::VectorXd(pts.row(j) - pts.row(i)));
        g(i, j) = v;
        g(j, i) = v;
      }
    }

    for (int w = 0; w < 8; ++w) {
      Eigen::VectorXd a(n);
      for (int i = 0; i < n; ++i) a(i) = rng.normal();
      a.array() -= a.mean();  // zero-sum weights
      const double form = a.dot(g * a);
      const double scale = (g.cwiseAbs().array() * (a * a.transpose()).cwiseAbs().array()).sum();
      const double tol = n * kEps * std::max(1.0, scale);
      if (form > tol) {
        NegDefResult res;
        res.pass = false;
        res.witness = NegDefWitness{pts, a, form};
        return res;
      }
    }
  }
  return {};
}

SubadditivityResult subadditivity_check_fn(
    const std::function<double(const Eigen::VectorXd&)>& gamma, int dim, int trials,
    std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("subadditivity_check needs trials >= 1");
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    Eigen::VectorXd a(dim), b(dim);
    for (int i = 0; i < dim; ++i) {
      a(i) = rng.uniform(-1.0, 1.0);
      b(i) = rng.uniform(-1.0, 1.0);
    }
    // every 4th pair splits the axes: a on the leading block, b on the last
    // axis, the pairing the mixed-term argument uses
    if (dim >= 2 && t % 4 == 3) {
      a(dim - 1) = 0.0;
      b.head(dim - 1).setZero();
    }
    const double lhs = std::sqrt(std::max(0.0, gamma(a + b)));
    const double rhs = std::sqrt(std::max(0.0, gamma(a))) + std::sqrt(std::max(0.0, gamma(b)));
    const double tol = 32.0 * kEps * std::max(1.0, rhs);
    if (lhs > rhs + tol) {
      SubadditivityResult res;
      res.pass = false;
      res.witness = SubadditivityWitness{a, b, lhs, rhs};
      return res;
    }
  }
  return {};
}

SubadditivityResult subadditivity_check(const Variogram& gamma, int trials, std::uint64_t seed) {
  return subadditivity_check_fn([&gamma](const Eigen::VectorXd& v) { return gamma(v); },
                                gamma.dimension(), trials, seed);
}

SchoenbergKernel::SchoenbergKernel(Variogram gamma, double r) : gamma_(std::move(gamma)), r_(r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("schoenberg_cov needs r > 0");
}

double SchoenbergKernel::operator()(const Eigen::VectorXd& p, const Eigen::VectorXd& q) const {
  return std::exp(-r_ * gamma_(Eigen::VectorXd(p - q)));
}

Eigen::MatrixXd SchoenbergKernel::gram(const Eigen::MatrixXd& points) const {
  const int n = static_cast<int>(points.rows());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double v = std::exp(-r_ * gamma_(Eigen::VectorXd(points.row(i) - points.row(j))));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

SchoenbergKernel schoenberg_cov(const Variogram& gamma, double r) {
  return SchoenbergKernel(gamma, r);
}

namespace {

std::string form_name(VarForm f) {
  switch (f) {
    case VarForm::SquaredNorm: return "squared-norm";
    case VarForm::Quadratic: return "quadratic";
    case VarForm::OneMinusCos: return "one-minus-cos";
    case VarForm::LogOnePlusSq: return "log-one-plus-sq";
    case VarForm::PowerNorm: return "power-norm";
    case VarForm::BrcExponent: return "brc-exponent";
    case VarForm::NormProduct: return "norm-product";
    case VarForm::DirectSum: return "direct-sum";
    case VarForm::Subordinated: return "subordinated";
    case VarForm::Restriction: return "restriction";
  }
  throw std::logic_error("unreachable");
}

nlohmann::json bernstein_to_json(const BernsteinFunction& f) {
  return {{"form", f.name()}, {"param", f.param}};
}

BernsteinFunction bernstein_from_json(const nlohmann::json& j) {
  const std::string form = j.at("form").get<std::string>();
  if (form == "linear") return BernsteinFunction::linear(j.value("param", 1.0));
  if (form == "power") return BernsteinFunction::power(j.at("param").get<double>());
  if (form == "log-one-plus") return BernsteinFunction::log_one_plus();
  throw std::invalid_argument("unknown Bernstein form: " + form);
}

}  // namespace

nlohmann::json Variogram::to_json() const {
  const Node& n = *node_;
  nlohmann::json j;
  j["form"] = form_name(n.form);
  switch (n.form) {
    case VarForm::SquaredNorm:
    case VarForm::LogOnePlusSq:
      j["dim"] = n.dim;
      break;
    case VarForm::Quadratic: {
      std::vector<std::vector<double>> rows;
      for (int i = 0; i < n.q.rows(); ++i)
        rows.emplace_back(n.q.row(i).begin(), n.q.row(i).end());
      j["q"] = rows;
      break;
    }
    case VarForm::OneMinusCos:
      j["y"] = std::vector<double>(n.y.begin(), n.y.end());
      break;
    case VarForm::PowerNorm:
      j["dim"] = n.dim;
      j["alpha"] = n.alpha;
      break;
    case VarForm::BrcExponent:
      j["spatial_dim"] = n.dim - 1;
      j["alpha"] = n.alpha;
      break;
    case VarForm::NormProduct:
      j["spatial_dim"] = n.dim - 1;
      break;
    case VarForm::DirectSum:
      j["children"] = {n.children[0].to_json(), n.children[1].to_json()};
      break;
    case VarForm::Subordinated:
      j["bernstein"] = bernstein_to_json(n.bernstein);
      j["children"] = {n.children[0].to_json()};
      break;
    case VarForm::Restriction:
      j["kept_axes"] = n.kept;
      j["children"] = {n.children[0].to_json()};
      break;
  }
  return j;
}

Variogram Variogram::from_json(const nlohmann::json& j) {
  const std::string form = j.at("form").get<std::string>();
  if (form == "squared-norm") return squared_norm(j.at("dim").get<int>());
  if (form == "log-one-plus-sq") return log_one_plus_sq(j.at("dim").get<int>());
  if (form == "quadratic") {
    const auto rows = j.at("q").get<std::vector<std::vector<double>>>();
    Eigen::MatrixXd q(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < rows[i].size(); ++k) q(i, k) = rows[i][k];
    return quadratic(std::move(q));
  }
  if (form == "one-minus-cos") {
    const auto y = j.at("y").get<std::vector<double>>();
    return one_minus_cos(Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()));
  }
  if (form == "power-norm")
    return power_norm(j.at("dim").get<int>(), j.at("alpha").get<double>());
  if (form == "brc-exponent")
    return brc_exponent(j.at("spatial_dim").get<int>(), j.at("alpha").get<double>());
  if (form == "norm-product") return norm_product(j.at("spatial_dim").get<int>());
  if (form == "direct-sum") {
    const auto& ch = j.at("children");
    return direct_sum(from_json(ch.at(0)), from_json(ch.at(1)));
  }
  if (form == "subordinated")
    return subordinated(bernstein_from_json(j.at("bernstein")), from_json(j.at("children").at(0)));
  if (form == "restriction")
    return restriction(from_json(j.at("children").at(0)),
                       j.at("kept_axes").get<std::vector<int>>());
  throw std::invalid_argument("unknown variogram form: " + form);
}

}  // namespace covlab
