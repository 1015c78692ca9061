#include "covlab/gram.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "covlab/rng.hpp"

namespace covlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void validate_configuration(const Configuration& config) {
  if (config.samples.empty()) throw std::invalid_argument("configuration needs n >= 1 samples");
  const std::size_t site_kind = config.samples.front().site.index();
  std::size_t dim = 0;
  if (const auto* e = std::get_if<EuclideanPoint>(&config.samples.front().site))
    dim = e->coords.size();
  for (const auto& s : config.samples) {
    if (s.site.index() != site_kind)
      throw std::invalid_argument("configuration mixes Euclidean and lon/lat sites");
    if (const auto* e = std::get_if<EuclideanPoint>(&s.site))
      if (e->coords.size() != dim)
        throw std::invalid_argument("configuration mixes site dimensions");
  }
}

// length scale of the geographic part, used to sweep proposal sizes
double geo_scale(const CovarianceModel& m) {
  if (m.is_composite()) return m.children[0].alpha_g;
  if (m.family == Family::ModifiedBrc) return std::sqrt(m.alpha_g);
  return m.alpha_g;
}

double env_scale(const CovarianceModel& m) {
  if (m.is_composite()) return m.children[1].alpha_g;
  if (m.family == Family::ModifiedBrc) return m.alpha_e > 0.0 ? std::sqrt(m.alpha_e) : 1.0;
  return m.alpha_e > 0.0 ? m.alpha_e : 1.0;
}

MetricSpec metric_for(const CovarianceModel& m, const DomainSpec& domain) {
  if (m.family == Family::ModifiedBrc)
    return MetricSpec::joint_rescaled(m.alpha_g, m.alpha_e);
  return domain.base == BaseSpace::Sphere ? MetricSpec::great_circle() : MetricSpec::euclidean();
}

GeoPoint to_geo(const std::array<double, 3>& v) {
  const double z = std::clamp(v[2], -1.0, 1.0);
  const double lat = std::asin(z) * 180.0 / M_PI;
  const double lon = std::atan2(v[1], v[0]) * 180.0 / M_PI;
  return GeoPoint{std::clamp(lon, -180.0, 180.0), std::clamp(lat, -90.0, 90.0)};
}

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// uniform draw from the spherical cap of angular radius theta_max around a
// random center direction
std::vector<GeoPoint> cap_points(Rng& rng, int n, double theta_max) {
  Vec3 c{};
  double norm = 0.0;
  while (norm < 1e-12) {
    c = {rng.normal(), rng.normal(), rng.normal()};
    norm = std::sqrt(dot(c, c));
  }
  for (auto& x : c) x /= norm;

  // rotation taking the north pole onto c: axis = z x c, angle = acos(c_z)
  const Vec3 axis_raw = cross(Vec3{0.0, 0.0, 1.0}, c);
  const double axis_norm = std::sqrt(dot(axis_raw, axis_raw));
  const double cos_t = c[2];
  const double sin_t = axis_norm;
  const bool near_pole = axis_norm < 1e-12;
  Vec3 axis{1.0, 0.0, 0.0};
  if (!near_pole) axis = {axis_raw[0] / axis_norm, axis_raw[1] / axis_norm, axis_raw[2] / axis_norm};

  std::vector<GeoPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double z = rng.uniform(std::cos(theta_max), 1.0);
    const double az = rng.uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 p{s * std::cos(az), s * std::sin(az), z};
    Vec3 q;
    if (near_pole) {
      q = c[2] > 0.0 ? p : Vec3{p[0], -p[1], -p[2]};
    } else {
      const Vec3 ap = cross(axis, p);
      const double ad = dot(axis, p);
      for (int k = 0; k < 3; ++k)
        q[k] = p[k] * cos_t + ap[k] * sin_t + axis[k] * ad * (1.0 - cos_t);
    }
    out.push_back(to_geo(q));
  }
  return out;
}

}  // namespace

std::string pd_verdict_name(PdVerdict v) {
  switch (v) {
    case PdVerdict::Pd: return "pd";
    case PdVerdict::PsdBoundary: return "psd-boundary";
    case PdVerdict::NotPd: return "not-pd";
  }
  throw std::logic_error("unreachable");
}

Eigen::MatrixXd gram_matrix(const CovarianceModel& model, const Configuration& config) {
  validate_configuration(config);
  const int n = static_cast<int>(config.samples.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = evaluate_pair(model, config.samples[i], config.samples[j], config.metric);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw std::invalid_argument("min_eigenvalue: non-finite entries");
  if (m.rows() != m.cols()) throw std::invalid_argument("min_eigenvalue: matrix not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PDCertificate certify_pd(const CovarianceModel& model, const Configuration& config) {
  const Eigen::MatrixXd m = gram_matrix(model, config);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  PDCertificate cert;
  cert.n = static_cast<int>(m.rows());
  cert.lambda_min = es.eigenvalues().minCoeff();
  cert.lambda_max = es.eigenvalues().maxCoeff();
  cert.tolerance = cert.n * kEps * std::max(1.0, cert.lambda_max);
  if (cert.lambda_min < -cert.tolerance) {
    cert.verdict = PdVerdict::NotPd;
    cert.witness = config;
  } else if (cert.lambda_min <= cert.tolerance) {
    cert.verdict = PdVerdict::PsdBoundary;
  } else {
    cert.verdict = PdVerdict::Pd;
  }
  return cert;
}

std::optional<std::pair<Configuration, PDCertificate>> counterexample_search(
    const CovarianceModel& model, const DomainSpec& domain, const SearchOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("search budget must be >= 1");
  if (options.max_points < 4) throw std::invalid_argument("search needs max_points >= 4");

  const MetricSpec metric = metric_for(model, domain);
  const double gs = geo_scale(model);
  const double es = env_scale(model);

  for (int r = 0; r < options.budget; ++r) {
    Rng rng(Rng::derive(options.seed, static_cast<std::uint64_t>(r)));
    const int n = 3 + r % (options.max_points - 2);
    const bool structured = options.structured && (r % 3 == 2) && n >= 4;

    Configuration config;
    config.metric = metric;

    if (domain.base == BaseSpace::Euclidean) {
      if (structured && !domain.with_environment) {
        // lattice proposal; spacing swept relative to the model's range
        const int rows = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
        const int cols = std::max(2, n / rows);
        const double spacing = rng.log_uniform(0.15, 1.5) / gs;
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j) {
            EuclideanPoint p;
            p.coords.assign(domain.dim, 0.0);
            p.coords[0] = spacing * i;
            if (domain.dim > 1) p.coords[1] = spacing * j;
            config.samples.push_back(JointSample{p, 0.0});
          }
      } else if (structured && domain.with_environment) {
        // site x environment product grid
        const int ns = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
        const int ne = std::max(2, n / ns);
        const double edge = rng.log_uniform(1e-3, 10.0) / gs;
        std::vector<EuclideanPoint> sites(ns);
        for (auto& p : sites) {
          p.coords.resize(domain.dim);
          for (auto& c : p.coords) c = rng.uniform(0.0, edge);
        }
        std::vector<double> envs(ne);
        for (auto& e : envs) e = rng.uniform() / es;
        for (const auto& p : sites)
          for (double e : envs) config.samples.push_back(JointSample{p, e});
      } else {
        const double edge = rng.log_uniform(1e-3, 10.0) / gs;
        for (int i = 0; i < n; ++i) {
          EuclideanPoint p;
          p.coords.resize(domain.dim);
          for (auto& c : p.coords) c = rng.uniform(0.0, edge);
          config.samples.push_back(
              JointSample{p, domain.with_environment ? rng.uniform() / es : 0.0});
        }
      }
    } else {
      const double theta_max = rng.log_uniform(1e-3, M_PI);
      if (structured && domain.with_environment) {
        const int ns = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
        const int ne = std::max(2, n / ns);
        const auto sites = cap_points(rng, ns, theta_max);
        std::vector<double> envs(ne);
        for (auto& e : envs) e = rng.uniform() / es;
        for (const auto& p : sites)
          for (double e : envs) config.samples.push_back(JointSample{p, e});
      } else {
        const auto sites = cap_points(rng, n, theta_max);
        for (const auto& p : sites)
          config.samples.push_back(
              JointSample{p, domain.with_environment ? rng.uniform() / es : 0.0});
      }
    }

    PDCertificate cert = certify_pd(model, config);
    if (cert.verdict == PdVerdict::NotPd) return std::make_pair(std::move(config), std::move(cert));
  }
  return std::nullopt;
}

std::optional<std::pair<Configuration, PDCertificate>> counterexample_search(
    const CovarianceModel& model, const DomainSpec& domain, int budget, std::uint64_t seed) {
  SearchOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  return counterexample_search(model, domain, opts);
}

Configuration spherical_grid_configuration(AngleUnit unit) {
  Configuration config;
  config.metric = MetricSpec::great_circle(unit);
  const double lons[3] = {-60.0, -60.1, -60.2};
  const double envs[3] = {0.1, 0.2, 0.3};
  for (double lon : lons)
    for (double e : envs) config.samples.push_back(sample_lonlat(lon, 60.0, e));
  return config;
}

std::vector<Eigen::VectorXd> cholesky_simulate(const CovarianceModel& model,
                                               const Configuration& config, double mean,
                                               int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("cholesky_simulate: count must be >= 1");
  const PDCertificate cert = certify_pd(model, config);
  if (cert.verdict != PdVerdict::Pd) {
    std::ostringstream msg;
    msg << "cholesky_simulate refused: model is " << pd_verdict_name(cert.verdict)
        << " on this configuration (n=" << cert.n << ", lambda_min=" << cert.lambda_min
        << ", lambda_max=" << cert.lambda_max << ", tolerance=" << cert.tolerance << ")";
    throw std::runtime_error(msg.str());
  }
  const Eigen::MatrixXd m = gram_matrix(model, config);
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("cholesky_simulate: factorization failed despite pd certificate");
  const Eigen::MatrixXd lower = llt.matrixL();

  Rng rng(seed);
  const int n = static_cast<int>(m.rows());
  std::vector<Eigen::VectorXd> draws;
  draws.reserve(count);
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.normal();
    draws.push_back((lower * z).array() + mean);
  }
  return draws;
}

nlohmann::json configuration_to_json(const Configuration& config) {
  nlohmann::json j;
  switch (config.metric.kind) {
    case MetricKind::Euclidean: j["metric"] = {{"kind", "euclidean"}}; break;
    case MetricKind::GreatCircle:
      j["metric"] = {{"kind", "great-circle"},
                     {"angle_unit",
                      config.metric.angle_unit == AngleUnit::Radians ? "radians" : "degrees"}};
      break;
    case MetricKind::JointRescaled:
      j["metric"] = {{"kind", "joint-rescaled"},
                     {"alphaG", config.metric.alpha_g},
                     {"alphaE", config.metric.alpha_e}};
      break;
  }
  j["samples"] = nlohmann::json::array();
  for (const auto& s : config.samples) {
    nlohmann::json row;
    if (const auto* e = std::get_if<EuclideanPoint>(&s.site)) {
      row["x"] = e->coords;
    } else {
      const auto& g = std::get<GeoPoint>(s.site);
      row["lon"] = g.lon;
      row["lat"] = g.lat;
    }
    row["e"] = s.env;
    j["samples"].push_back(row);
  }
  return j;
}

Configuration configuration_from_json(const nlohmann::json& j) {
  Configuration config;
  const auto& m = j.at("metric");
  const std::string kind = m.at("kind").get<std::string>();
  if (kind == "euclidean") {
    config.metric = MetricSpec::euclidean();
  } else if (kind == "great-circle") {
    config.metric = MetricSpec::great_circle(
        m.value("angle_unit", std::string("radians")) == "degrees" ? AngleUnit::Degrees
                                                                   : AngleUnit::Radians);
  } else if (kind == "joint-rescaled") {
    config.metric = MetricSpec::joint_rescaled(m.at("alphaG").get<double>(),
                                               m.at("alphaE").get<double>());
  } else {
    throw std::invalid_argument("unknown metric kind: " + kind);
  }
  for (const auto& row : j.at("samples")) {
    JointSample s;
    if (row.contains("x")) {
      s.site = EuclideanPoint{row.at("x").get<std::vector<double>>()};
    } else {
      s.site = GeoPoint{row.at("lon").get<double>(), row.at("lat").get<double>()};
    }
    s.env = row.value("e", 0.0);
    config.samples.push_back(std::move(s));
  }
  return config;
}

nlohmann::json certificate_to_json(const PDCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["lambda_min"] = cert.lambda_min;
  j["lambda_max"] = cert.lambda_max;
  j["verdict"] = pd_verdict_name(cert.verdict);
  j["tolerance"] = cert.tolerance;
  if (cert.witness) j["witness"] = configuration_to_json(*cert.witness);
  return j;
}

}  // namespace covlab
