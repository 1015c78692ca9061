#include "covlab/models.hpp"

#include <cmath>
#include <stdexcept>

namespace covlab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be > 0");
}

void require_nonneg(double v, const char* what) {
  if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

// composite children: one geographic-only and one environmental-only model,
// each a univariate non-composite family
void require_child(const CovarianceModel& c, const char* role) {
  if (c.family != Family::Stable && c.family != Family::Exponential &&
      c.family != Family::Triangle)
    throw std::invalid_argument(std::string("composite ") + role +
                                " child must be a univariate family (stable/exponential/triangle)");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Stable: return "stable";
    case Family::Brc: return "brc";
    case Family::ModifiedBrc: return "modified-brc";
    case Family::Exponential: return "exponential";
    case Family::Triangle: return "triangle";
    case Family::Sum: return "sum";
    case Family::Product: return "product";
  }
  throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& name) {
  if (name == "stable") return Family::Stable;
  if (name == "brc") return Family::Brc;
  if (name == "modified-brc") return Family::ModifiedBrc;
  if (name == "exponential") return Family::Exponential;
  if (name == "triangle") return Family::Triangle;
  if (name == "sum") return Family::Sum;
  if (name == "product") return Family::Product;
  throw std::invalid_argument("unknown covariance family: " + name);
}

CovarianceModel CovarianceModel::stable(double alpha0, double alpha_g, double alpha2) {
  require_positive(alpha0, "alpha0");
  require_positive(alpha_g, "alphaG");
  require_positive(alpha2, "alpha2");
  return {Family::Stable, alpha0, alpha_g, 0.0, alpha2, {}};
}

CovarianceModel CovarianceModel::brc(double alpha0, double alpha_g, double alpha_e,
                                     double alpha2) {
  require_positive(alpha0, "alpha0");
  require_positive(alpha_g, "alphaG");
  require_nonneg(alpha_e, "alphaE");  // zero collapses BRC to stable
  require_positive(alpha2, "alpha2");
  return {Family::Brc, alpha0, alpha_g, alpha_e, alpha2, {}};
}

CovarianceModel CovarianceModel::modified_brc(double alpha0, double alpha_g, double alpha_e,
                                              double alpha2) {
  require_positive(alpha0, "alpha0");
  require_positive(alpha_g, "alphaG");
  require_nonneg(alpha_e, "alphaE");
  require_positive(alpha2, "alpha2");
  return {Family::ModifiedBrc, alpha0, alpha_g, alpha_e, alpha2, {}};
}

CovarianceModel CovarianceModel::exponential(double alpha0, double alpha_g) {
  require_positive(alpha0, "alpha0");
  require_positive(alpha_g, "alphaG");
  return {Family::Exponential, alpha0, alpha_g, 0.0, 1.0, {}};
}

CovarianceModel CovarianceModel::triangle(double alpha0, double alpha_g) {
  require_positive(alpha0, "alpha0");
  require_positive(alpha_g, "alphaG");
  return {Family::Triangle, alpha0, alpha_g, 0.0, 1.0, {}};
}

CovarianceModel CovarianceModel::sum(CovarianceModel geographic, CovarianceModel environmental) {
  require_child(geographic, "geographic");
  require_child(environmental, "environmental");
  CovarianceModel m{Family::Sum, 1.0, 1.0, 0.0, 1.0, {}};
  m.children.push_back(std::move(geographic));
  m.children.push_back(std::move(environmental));
  return m;
}

CovarianceModel CovarianceModel::product(CovarianceModel geographic,
                                         CovarianceModel environmental) {
  require_child(geographic, "geographic");
  require_child(environmental, "environmental");
  CovarianceModel m{Family::Product, 1.0, 1.0, 0.0, 1.0, {}};
  m.children.push_back(std::move(geographic));
  m.children.push_back(std::move(environmental));
  return m;
}

double CovarianceModel::sill() const {
  switch (family) {
    case Family::Sum: return children[0].sill() + children[1].sill();
    case Family::Product: return children[0].sill() * children[1].sill();
    default: return 1.0 / alpha0;
  }
}

double evaluate(const CovarianceModel& m, double h, double u) {
  if (h < 0.0 || u < 0.0 || !std::isfinite(h) || !std::isfinite(u))
    throw std::invalid_argument("evaluate: lags must be finite and >= 0");
  switch (m.family) {
    case Family::Stable:
      return std::exp(-std::pow(m.alpha_g * h, m.alpha2)) / m.alpha0;
    case Family::Exponential:
      return std::exp(-m.alpha_g * h) / m.alpha0;
    case Family::Brc:
      return std::exp(-std::pow(m.alpha_g * h + m.alpha_e * u, m.alpha2)) / m.alpha0;
    case Family::ModifiedBrc: {
      const double d = std::sqrt(m.alpha_g * h * h + m.alpha_e * u * u);
      return std::exp(-std::pow(d, m.alpha2)) / m.alpha0;
    }
    case Family::Triangle:
      return std::max(0.0, 1.0 - m.alpha_g * h) / m.alpha0;
    case Family::Sum:
      return evaluate(m.children[0], h, 0.0) + evaluate(m.children[1], u, 0.0);
    case Family::Product:
      return evaluate(m.children[0], h, 0.0) * evaluate(m.children[1], u, 0.0);
  }
  throw std::logic_error("unreachable");
}

double evaluate_pair(const CovarianceModel& m, const JointSample& a, const JointSample& b,
                     const MetricSpec& metric) {
  if (m.family == Family::ModifiedBrc) {
    if (metric.kind != MetricKind::JointRescaled)
      throw std::invalid_argument("modified-brc requires the joint-rescaled metric");
    const double d = joint_rescaled_distance(a, b, metric.alpha_g, metric.alpha_e);
    return std::exp(-std::pow(d, m.alpha2)) / m.alpha0;
  }
  if (metric.kind == MetricKind::JointRescaled)
    throw std::invalid_argument("joint-rescaled metric is only compatible with modified-brc");
  const double h = site_distance(a, b, metric);
  const double u = env_distance(a, b);
  return evaluate(m, h, u);
}

DomainSpec DomainSpec::euclidean(int d, bool with_env) {
  if (d < 1) throw std::invalid_argument("euclidean domain needs d >= 1");
  return {BaseSpace::Euclidean, d, with_env};
}

DomainSpec DomainSpec::sphere(int surface_dim, bool with_env) {
  if (surface_dim < 1) throw std::invalid_argument("sphere domain needs dimension >= 1");
  return {BaseSpace::Sphere, surface_dim, with_env};
}

std::string DomainSpec::name() const {
  std::string s = base == BaseSpace::Euclidean ? "R^" + std::to_string(dim)
                                               : "S^" + std::to_string(dim);
  if (with_environment) s += " x R";
  return s;
}

std::string validity_name(Validity v) {
  switch (v) {
    case Validity::KnownValid: return "known-valid";
    case Validity::KnownInvalid: return "known-invalid";
    case Validity::Unknown: return "unknown";
  }
  throw std::logic_error("unreachable");
}

namespace {

ValidityVerdict stable_verdict(double alpha2, BaseSpace base) {
  if (base == BaseSpace::Euclidean) {
    return alpha2 <= 2.0
               ? ValidityVerdict{Validity::KnownValid, "stable on R^d: alpha in (0,2]", ""}
               : ValidityVerdict{Validity::KnownInvalid, "stable on R^d: alpha in (0,2]",
                                 "exponent exceeds 2"};
  }
  return alpha2 <= 1.0
             ? ValidityVerdict{Validity::KnownValid, "stable on S^(d-1): alpha in (0,1]", ""}
             : ValidityVerdict{Validity::KnownInvalid, "stable on S^(d-1): alpha in (0,1]",
                               "exponent exceeds 1"};
}

ValidityVerdict child_verdict(const CovarianceModel& child, const DomainSpec& base_domain) {
  CovarianceModel c = child;
  return validity_range(c, base_domain);
}

}  // namespace

ValidityVerdict validity_range(const CovarianceModel& m, const DomainSpec& domain) {
  switch (m.family) {
    case Family::Stable:
      if (domain.with_environment)
        throw std::invalid_argument("stable is a geographic-only family; domain has an environment axis");
      return stable_verdict(m.alpha2, domain.base);

    case Family::Exponential:
      if (domain.with_environment)
        throw std::invalid_argument("exponential is a geographic-only family; domain has an environment axis");
      return {Validity::KnownValid,
              domain.base == BaseSpace::Euclidean ? "stable on R^d: alpha in (0,2]"
                                                  : "stable on S^(d-1): alpha in (0,1]",
              "exponential = stable with alpha2 = 1"};

    case Family::Triangle:
      if (domain.base != BaseSpace::Euclidean || domain.with_environment)
        throw std::invalid_argument("triangle model is only tabulated on R^d");
      return domain.dim == 1
                 ? ValidityVerdict{Validity::KnownValid, "triangle on R^1", ""}
                 : ValidityVerdict{Validity::KnownInvalid, "triangle on R^d, d >= 2",
                                   "valid in one dimension but not in two or more"};

    case Family::Brc: {
      if (!domain.with_environment)
        throw std::invalid_argument("brc needs a domain with an environment axis");
      if (m.alpha_e == 0.0) {
        // no u-dependence: the model is the stable model on the base space
        ValidityVerdict v = stable_verdict(m.alpha2, domain.base);
        v.note = "alphaE = 0 collapses BRC to the stable model";
        return v;
      }
      if (domain.base == BaseSpace::Euclidean) {
        return m.alpha2 <= 1.0
                   ? ValidityVerdict{Validity::KnownValid, "BRC on R^d x R: alpha in (0,1]", ""}
                   : ValidityVerdict{Validity::KnownInvalid, "BRC on R^d x R: alpha in (0,1]",
                                     "exponent exceeds 1"};
      }
      // sphere x R: open problem below 1.001; numerically refuted at and above
      if (m.alpha2 >= 1.001)
        return {Validity::KnownInvalid, "BRC on S^(d-1) x R",
                "counterexample plus continuity argument for alpha2 >= 1.001"};
      return {Validity::Unknown, "BRC on S^(d-1) x R",
              "conjectured valid if and only if alpha2 <= 1; no proof is known"};
    }

    case Family::ModifiedBrc:
      if (domain.base != BaseSpace::Euclidean || !domain.with_environment)
        throw std::invalid_argument(
            "modified-brc lives on R^d x R; the geodesic distance has no valid analogue");
      return m.alpha2 <= 2.0
                 ? ValidityVerdict{Validity::KnownValid, "modified BRC on R^d x R: alpha in (0,2]", ""}
                 : ValidityVerdict{Validity::KnownInvalid, "modified BRC on R^d x R: alpha in (0,2]",
                                   "exponent exceeds 2"};

    case Family::Sum:
    case Family::Product: {
      if (!domain.with_environment)
        throw std::invalid_argument("sum/product models need a domain with an environment axis");
      const DomainSpec geo_base{domain.base, domain.dim, false};
      const ValidityVerdict g = child_verdict(m.children[0], geo_base);
      const ValidityVerdict e = child_verdict(m.children[1], DomainSpec::euclidean(1));
      const char* src = m.family == Family::Sum ? "sum of univariate models"
                                                : "product of univariate models";
      if (g.status == Validity::KnownInvalid || e.status == Validity::KnownInvalid)
        return {Validity::KnownInvalid, src, "a child model is invalid on its factor space"};
      if (g.status == Validity::Unknown || e.status == Validity::Unknown)
        return {Validity::Unknown, src, "a child verdict is unknown"};
      return {Validity::KnownValid, src, ""};
    }
  }
  throw std::logic_error("unreachable");
}

nlohmann::json model_to_json(const CovarianceModel& m) {
  nlohmann::json j;
  j["family"] = family_name(m.family);
  if (m.is_composite()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : m.children) j["children"].push_back(model_to_json(c));
  } else {
    j["alpha0"] = m.alpha0;
    j["alphaG"] = m.alpha_g;
    j["alphaE"] = m.alpha_e;
    j["alpha2"] = m.alpha2;
  }
  return j;
}

CovarianceModel model_from_json(const nlohmann::json& j) {
  const Family f = family_from_name(j.at("family").get<std::string>());
  if (f == Family::Sum || f == Family::Product) {
    const auto& ch = j.at("children");
    if (!ch.is_array() || ch.size() != 2)
      throw std::invalid_argument("composite model needs exactly two children");
    CovarianceModel g = model_from_json(ch[0]);
    CovarianceModel e = model_from_json(ch[1]);
    return f == Family::Sum ? CovarianceModel::sum(std::move(g), std::move(e))
                            : CovarianceModel::product(std::move(g), std::move(e));
  }
  const double a0 = j.value("alpha0", 1.0);
  const double ag = j.value("alphaG", 1.0);
  const double ae = j.value("alphaE", 0.0);
  const double a2 = j.value("alpha2", 1.0);
  switch (f) {
    case Family::Stable: return CovarianceModel::stable(a0, ag, a2);
    case Family::Brc: return CovarianceModel::brc(a0, ag, ae, a2);
    case Family::ModifiedBrc: return CovarianceModel::modified_brc(a0, ag, ae, a2);
    case Family::Exponential: return CovarianceModel::exponential(a0, ag);
    case Family::Triangle: return CovarianceModel::triangle(a0, ag);
    default: throw std::logic_error("unreachable");
  }
}

}  // namespace covlab
