#include "covlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "covlab/gram.hpp"
#include "covlab/kriging.hpp"
#include "covlab/models.hpp"
#include "covlab/table_io.hpp"
#include "covlab/variogram.hpp"

namespace covlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWitness = 2;

struct ModelFlags {
  std::string model_file;
  std::string family = "exponential";
  double alpha0 = 1.0;
  double alpha_g = -1.0;  // -1: family default
  double alpha_e = -1.0;
  double alpha2 = -1.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags* mf) {
  cmd->add_option("--model-file", mf->model_file, "covariance model as JSON");
  cmd->add_option("--family", mf->family,
                  "stable|brc|modified-brc|exponential|triangle (composites need --model-file)");
  cmd->add_option("--alpha0", mf->alpha0, "reciprocal sill");
  cmd->add_option("--alphag", mf->alpha_g, "geographic scale");
  cmd->add_option("--alphae", mf->alpha_e, "environmental scale");
  cmd->add_option("--alpha2", mf->alpha2, "exponent");
}

CovarianceModel build_model(const ModelFlags& mf, double default_scale = 1.0) {
  if (!mf.model_file.empty()) {
    std::ifstream in(mf.model_file);
    if (!in) throw std::invalid_argument("cannot open model file: " + mf.model_file);
    nlohmann::json j;
    in >> j;
    return model_from_json(j);
  }
  const Family family = family_from_name(mf.family);
  const double ag = mf.alpha_g > 0 ? mf.alpha_g : default_scale;
  const double ae = mf.alpha_e >= 0 ? mf.alpha_e
                    : (family == Family::Brc || family == Family::ModifiedBrc) ? default_scale
                                                                               : 0.0;
  const double a2 = mf.alpha2 > 0 ? mf.alpha2 : 1.0;
  switch (family) {
    case Family::Stable: return CovarianceModel::stable(mf.alpha0, ag, a2);
    case Family::Brc: return CovarianceModel::brc(mf.alpha0, ag, ae, a2);
    case Family::ModifiedBrc: return CovarianceModel::modified_brc(mf.alpha0, ag, ae, a2);
    case Family::Exponential: return CovarianceModel::exponential(mf.alpha0, ag);
    case Family::Triangle: return CovarianceModel::triangle(mf.alpha0, ag);
    default:
      throw std::invalid_argument("composite families need --model-file");
  }
}

DomainSpec parse_domain(const std::string& name) {
  std::string base = name;
  bool env = false;
  if (base.size() > 4 && base.substr(base.size() - 4) == "-env") {
    env = true;
    base = base.substr(0, base.size() - 4);
  }
  if (base == "sphere") return DomainSpec::sphere(2, env);
  if (base.size() == 2 && base[0] == 'r' && base[1] >= '1' && base[1] <= '9')
    return DomainSpec::euclidean(base[1] - '0', env);
  throw std::invalid_argument("unknown domain '" + name + "' (use r1|r2|r3|sphere[-env])");
}

AngleUnit parse_angle_unit(const std::string& s) {
  if (s == "radians") return AngleUnit::Radians;
  if (s == "degrees") return AngleUnit::Degrees;
  throw std::invalid_argument("angle unit must be radians or degrees");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COVLAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string inputs_digest(const std::vector<std::string>& files,
                          const std::vector<std::string>& args) {
  std::string acc = join_args(args);
  for (const auto& f : files)
    if (!f.empty()) acc += "|" + digest_file(f);
  return digest_string(acc);
}

void emit_report(const std::string& path, const std::vector<std::string>& args,
                 const std::vector<std::string>& input_files, const nlohmann::json& model,
                 const nlohmann::json& result, std::uint64_t seed) {
  RunReport report;
  report.command = join_args(args);
  report.inputs_digest = inputs_digest(input_files, args);
  report.model = model;
  report.result = result;
  report.seed = seed;
  report.version = kVersion;
  write_report(report, path);
}

void write_prediction_csv(const std::string& path, const std::vector<JointSample>& targets,
                          const KrigingResult& result) {
  const bool geographic =
      !targets.empty() && std::holds_alternative<GeoPoint>(targets.front().site);
  std::ostringstream out;
  out << (geographic ? "lon,lat" : "x,y") << ",e,prediction,variance\n";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (geographic) {
      const auto& g = std::get<GeoPoint>(targets[i].site);
      out << format_double(g.lon) << "," << format_double(g.lat);
    } else {
      const auto& p = std::get<EuclideanPoint>(targets[i].site);
      out << format_double(p.coords[0]) << ","
          << format_double(p.coords.size() > 1 ? p.coords[1] : 0.0);
    }
    out << "," << format_double(targets[i].env) << ","
        << format_double(result.predictions(static_cast<Eigen::Index>(i))) << ","
        << format_double(result.variances(static_cast<Eigen::Index>(i))) << "\n";
  }
  atomic_write(path, out.str());
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"covariance model validity toolkit"};
  app.require_subcommand(1);

  // ---- validate ----
  auto* validate = app.add_subcommand("validate", "range-of-validity verdict for a model/domain");
  ModelFlags v_model;
  std::string v_domain = "r2";
  std::string v_report = "covlab_report.json";
  add_model_flags(validate, &v_model);
  validate->add_option("--domain", v_domain, "r1|r2|r3|sphere with optional -env suffix");
  validate->add_option("--report", v_report, "run report path");

  // ---- gram ----
  auto* gram = app.add_subcommand("gram", "assemble the Gram matrix and certify definiteness");
  ModelFlags g_model;
  std::string g_data, g_out = "certificate.json", g_report = "covlab_report.json";
  std::string g_unit = "radians";
  add_model_flags(gram, &g_model);
  gram->add_option("--data", g_data, "sample CSV")->required();
  gram->add_option("--angle-unit", g_unit, "radians|degrees for lon/lat data");
  gram->add_option("--out", g_out, "certificate JSON path");
  gram->add_option("--report", g_report, "run report path");

  // ---- krige ----
  auto* krige = app.add_subcommand("krige", "simple kriging predictions and variances");
  ModelFlags k_model;
  std::string k_data, k_targets, k_out = "predictions.csv", k_report = "covlab_report.json";
  std::string k_unit = "radians";
  double k_mean = std::numeric_limits<double>::quiet_NaN();
  int k_grid_n = 0;
  double k_box = 0.0;
  add_model_flags(krige, &k_model);
  krige->add_option("--data", k_data, "sample CSV with a value column")->required();
  krige->add_option("--targets", k_targets, "target sample CSV");
  krige->add_option("--grid-n", k_grid_n, "alternatively: n x n target grid");
  krige->add_option("--box", k_box, "grid extent (same units as the data)");
  krige->add_option("--mean", k_mean, "known mean (default: sample mean)");
  krige->add_option("--angle-unit", k_unit, "radians|degrees for lon/lat data");
  krige->add_option("--out", k_out, "prediction CSV path");
  krige->add_option("--report", k_report, "run report path");

  // ---- simulate ----
  auto* simulate = app.add_subcommand("simulate", "Cholesky draws of a Gaussian field");
  ModelFlags s_model;
  std::string s_data, s_out = "draws.csv", s_report = "covlab_report.json";
  std::string s_unit = "radians";
  int s_count = 1;
  double s_mean = 0.0;
  std::uint64_t s_seed = default_seed();
  add_model_flags(simulate, &s_model);
  simulate->add_option("--data", s_data, "sample CSV with the sites")->required();
  simulate->add_option("--count", s_count, "number of draws");
  simulate->add_option("--mean", s_mean, "process mean");
  simulate->add_option("--seed", s_seed, "rng seed (default: COVLAB_SEED or 0)");
  simulate->add_option("--angle-unit", s_unit, "radians|degrees for lon/lat data");
  simulate->add_option("--out", s_out, "draw CSV path");
  simulate->add_option("--report", s_report, "run report path");

  // ---- fit ----
  auto* fit = app.add_subcommand("fit", "weighted least-squares model fit to binned covariance");
  std::string f_data, f_family = "exponential", f_domain = "r2";
  std::string f_out = "fitted_model.json", f_report = "covlab_report.json";
  std::string f_unit = "radians";
  double f_bin_width = 0.0, f_max_lag = 0.0;
  double f_init_alpha0 = 1.0, f_init_alphag = 1.0, f_init_alpha2 = 1.0;
  fit->add_option("--data", f_data, "sample CSV with a value column")->required();
  fit->add_option("--family", f_family, "stable|brc|modified-brc|exponential|triangle");
  fit->add_option("--bin-width", f_bin_width, "lag bin width")->required();
  fit->add_option("--max-lag", f_max_lag, "largest lag used")->required();
  fit->add_option("--init-alpha0", f_init_alpha0, "initial reciprocal sill");
  fit->add_option("--init-alphag", f_init_alphag, "initial geographic scale");
  fit->add_option("--init-alpha2", f_init_alpha2, "initial exponent");
  fit->add_option("--domain", f_domain, "domain whose validity box constrains the fit");
  fit->add_option("--angle-unit", f_unit, "radians|degrees for lon/lat data");
  fit->add_option("--out", f_out, "fitted model JSON path");
  fit->add_option("--report", f_report, "run report path");

  // ---- counterexample ----
  auto* counter = app.add_subcommand("counterexample",
                                     "randomized hunt for a not-pd configuration");
  ModelFlags c_model;
  std::string c_domain = "r2", c_unit = "radians";
  std::string c_witness = "witness.csv", c_cert = "certificate.json";
  std::string c_report = "covlab_report.json";
  int c_budget = 1000, c_max_points = 50;
  std::uint64_t c_seed = default_seed();
  bool c_grid312 = false;
  add_model_flags(counter, &c_model);
  counter->add_option("--domain", c_domain, "r1|r2|r3|sphere with optional -env suffix");
  counter->add_option("--budget", c_budget, "restart count");
  counter->add_option("--max-points", c_max_points, "largest configuration size");
  counter->add_option("--seed", c_seed, "rng seed (default: COVLAB_SEED or 0)");
  counter->add_flag("--grid-312", c_grid312,
                    "use the published 9-sample spherical product grid");
  counter->add_option("--angle-unit", c_unit, "radians|degrees");
  counter->add_option("--out-witness", c_witness, "witness CSV path");
  counter->add_option("--out-cert", c_cert, "certificate JSON path");
  counter->add_option("--report", c_report, "run report path");

  // ---- nd-test ----
  auto* ndtest = app.add_subcommand("nd-test",
                                    "negative-definiteness and subadditivity checks");
  std::string n_file, n_report = "covlab_report.json";
  int n_trials = 400, n_points = 16;
  std::uint64_t n_seed = default_seed();
  ndtest->add_option("--variogram-file", n_file, "variogram expression tree JSON")->required();
  ndtest->add_option("--trials", n_trials, "trial count");
  ndtest->add_option("--points", n_points, "points per trial");
  ndtest->add_option("--seed", n_seed, "rng seed (default: COVLAB_SEED or 0)");
  ndtest->add_option("--report", n_report, "run report path");

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "synthetic clustered field data");
  ModelFlags y_model;
  std::string y_out = "synthetic.csv", y_report = "covlab_report.json";
  int y_n = 100;
  double y_box = 1000.0, y_mean = 0.0;
  std::uint64_t y_seed = default_seed();
  add_model_flags(synth, &y_model);
  synth->add_option("--n", y_n, "sample count");
  synth->add_option("--box-km", y_box, "layout box edge");
  synth->add_option("--mean", y_mean, "process mean");
  synth->add_option("--seed", y_seed, "rng seed (default: COVLAB_SEED or 0)");
  synth->add_option("--out", y_out, "sample CSV path");
  synth->add_option("--report", y_report, "run report path");

  std::vector<const char*> argv;
  argv.push_back("covlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitError;
  }

  if (validate->parsed()) {
    const CovarianceModel model = build_model(v_model);
    const DomainSpec domain = parse_domain(v_domain);
    const ValidityVerdict verdict = validity_range(model, domain);
    std::cout << validity_name(verdict.status) << " on " << domain.name() << " ["
              << verdict.source << "]";
    if (!verdict.note.empty()) std::cout << " -- " << verdict.note;
    std::cout << "\n";
    emit_report(v_report, args, {v_model.model_file}, model_to_json(model),
                {{"verdict", validity_name(verdict.status)},
                 {"source", verdict.source},
                 {"note", verdict.note},
                 {"domain", domain.name()}},
                0);
    return kExitOk;
  }

  if (gram->parsed()) {
    const CovarianceModel model = build_model(g_model);
    const LoadedSamples loaded = load_samples(g_data, parse_angle_unit(g_unit));
    const PDCertificate cert = certify_pd(model, loaded.config);
    const nlohmann::json cj = certificate_to_json(cert);
    atomic_write(g_out, cj.dump(2) + "\n");
    std::cout << pd_verdict_name(cert.verdict) << " (n=" << cert.n
              << ", lambda_min=" << format_double(cert.lambda_min)
              << ", lambda_max=" << format_double(cert.lambda_max) << ")\n";
    emit_report(g_report, args, {g_model.model_file, g_data}, model_to_json(model), cj, 0);
    return cert.verdict == PdVerdict::NotPd ? kExitWitness : kExitOk;
  }

  if (krige->parsed()) {
    const CovarianceModel model = build_model(k_model);
    const LoadedSamples loaded = load_samples(k_data, parse_angle_unit(k_unit));
    if (!loaded.values) throw std::invalid_argument("krige needs a value column in --data");
    FieldData data{loaded.config, *loaded.values,
                   std::isnan(k_mean) ? loaded.values->mean() : k_mean};
    std::vector<JointSample> targets;
    if (!k_targets.empty()) {
      targets = load_samples(k_targets, parse_angle_unit(k_unit)).config.samples;
    } else if (k_grid_n > 1 && k_box > 0.0) {
      for (int i = 0; i < k_grid_n; ++i)
        for (int j = 0; j < k_grid_n; ++j)
          targets.push_back(sample_xy(k_box * i / (k_grid_n - 1.0), k_box * j / (k_grid_n - 1.0)));
    } else {
      throw std::invalid_argument("krige needs --targets or --grid-n with --box");
    }
    const KrigingResult result = simple_krige(model, data, targets);
    write_prediction_csv(k_out, targets, result);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "kriged " << targets.size() << " targets; min variance "
              << format_double(result.variances.minCoeff()) << "\n";
    emit_report(k_report, args, {k_model.model_file, k_data, k_targets}, model_to_json(model),
                {{"targets", targets.size()},
                 {"min_variance", result.variances.minCoeff()},
                 {"max_variance", result.variances.maxCoeff()},
                 {"warnings", result.warnings},
                 {"solver_tolerance", result.solver_tolerance},
                 {"mean", data.mean}},
                0);
    return kExitOk;
  }

  if (simulate->parsed()) {
    const CovarianceModel model = build_model(s_model);
    const LoadedSamples loaded = load_samples(s_data, parse_angle_unit(s_unit));
    std::vector<Eigen::VectorXd> draws;
    try {
      draws = cholesky_simulate(model, loaded.config, s_mean, s_count, s_seed);
    } catch (const std::runtime_error& e) {
      const PDCertificate cert = certify_pd(model, loaded.config);
      atomic_write(s_out + ".certificate.json", certificate_to_json(cert).dump(2) + "\n");
      std::cerr << e.what() << "\n";
      emit_report(s_report, args, {s_model.model_file, s_data}, model_to_json(model),
                  certificate_to_json(cert), s_seed);
      return kExitWitness;
    }
    std::ostringstream out;
    const bool geographic =
        std::holds_alternative<GeoPoint>(loaded.config.samples.front().site);
    out << "draw,id," << (geographic ? "lon,lat" : "x,y") << ",e,value\n";
    for (int d = 0; d < s_count; ++d)
      for (std::size_t i = 0; i < loaded.config.samples.size(); ++i) {
        const auto& smp = loaded.config.samples[i];
        out << d + 1 << "," << i + 1 << ",";
        if (geographic) {
          const auto& g = std::get<GeoPoint>(smp.site);
          out << format_double(g.lon) << "," << format_double(g.lat);
        } else {
          const auto& p = std::get<EuclideanPoint>(smp.site);
          out << format_double(p.coords[0]) << ","
              << format_double(p.coords.size() > 1 ? p.coords[1] : 0.0);
        }
        out << "," << format_double(smp.env) << ","
            << format_double(draws[d](static_cast<Eigen::Index>(i))) << "\n";
      }
    atomic_write(s_out, out.str());
    std::cout << "wrote " << s_count << " draw(s) over " << loaded.config.samples.size()
              << " sites\n";
    emit_report(s_report, args, {s_model.model_file, s_data}, model_to_json(model),
                {{"count", s_count}, {"n", loaded.config.samples.size()}, {"mean", s_mean}},
                s_seed);
    return kExitOk;
  }

  if (fit->parsed()) {
    const LoadedSamples loaded = load_samples(f_data, parse_angle_unit(f_unit));
    if (!loaded.values) throw std::invalid_argument("fit needs a value column in --data");
    FieldData data{loaded.config, *loaded.values, loaded.values->mean()};
    const EmpiricalCovariance emp = empirical_covariance(data, f_bin_width, f_max_lag);
    const Family family = family_from_name(f_family);
    CovarianceModel init = [&] {
      switch (family) {
        case Family::Stable: return CovarianceModel::stable(f_init_alpha0, f_init_alphag, f_init_alpha2);
        case Family::Brc: return CovarianceModel::brc(f_init_alpha0, f_init_alphag, 0.0, f_init_alpha2);
        case Family::ModifiedBrc:
          return CovarianceModel::modified_brc(f_init_alpha0, f_init_alphag, 0.0, f_init_alpha2);
        case Family::Exponential: return CovarianceModel::exponential(f_init_alpha0, f_init_alphag);
        case Family::Triangle: return CovarianceModel::triangle(f_init_alpha0, f_init_alphag);
        default: throw std::invalid_argument("composite families are not fittable");
      }
    }();
    FitOptions fopts;
    fopts.domain = parse_domain(f_domain);
    const CovarianceModel fitted = fit_model(emp, init, fopts);
    const nlohmann::json mj = model_to_json(fitted);
    atomic_write(f_out, mj.dump(2) + "\n");
    std::cout << mj.dump() << "\n";
    nlohmann::json bins = nlohmann::json::array();
    for (std::size_t k = 0; k < emp.estimates.size(); ++k)
      bins.push_back({{"center", emp.bin_center(k)},
                      {"estimate", emp.counts[k] > 0 ? emp.estimates[k] : 0.0},
                      {"count", emp.counts[k]}});
    emit_report(f_report, args, {f_data}, mj, {{"bins", bins}}, 0);
    return kExitOk;
  }

  if (counter->parsed()) {
    if (c_grid312) {
      // the published 9-sample spherical instance; defaults alphaG = alphaE = 1/300
      ModelFlags mf = c_model;
      if (mf.family == "exponential" && mf.model_file.empty()) mf.family = "brc";
      if (mf.alpha2 <= 0) mf.alpha2 = 1.01;
      const CovarianceModel model = build_model(mf, 1.0 / 300.0);
      nlohmann::json modes;
      PDCertificate chosen;
      const AngleUnit wanted = parse_angle_unit(c_unit);
      for (AngleUnit unit : {AngleUnit::Radians, AngleUnit::Degrees}) {
        const Configuration config = spherical_grid_configuration(unit);
        const PDCertificate cert = certify_pd(model, config);
        const char* label = unit == AngleUnit::Radians ? "radians" : "degrees";
        modes[label] = certificate_to_json(cert);
        std::cout << label << ": lambda_min = " << format_double(cert.lambda_min) << " ("
                  << pd_verdict_name(cert.verdict) << ")\n";
        if (unit == wanted) chosen = cert;
      }
      atomic_write(c_cert, certificate_to_json(chosen).dump(2) + "\n");
      if (chosen.witness)
        write_sample_table(table_from_configuration(*chosen.witness), c_witness);
      emit_report(c_report, args, {c_model.model_file}, model_to_json(model),
                  {{"grid_312", true},
                   {"modes", modes},
                   {"note", "the published magnitude 1.84e-5 corresponds to km-scaled "
                            "great-circle distance (Earth radius ~6371 km)"}},
                  c_seed);
      return chosen.verdict == PdVerdict::NotPd ? kExitWitness : kExitOk;
    }

    const CovarianceModel model = build_model(c_model);
    const DomainSpec domain = parse_domain(c_domain);
    SearchOptions opts;
    opts.budget = c_budget;
    opts.max_points = c_max_points;
    opts.seed = c_seed;
    const auto found = counterexample_search(model, domain, opts);
    if (!found) {
      std::cout << "no witness found within budget " << c_budget
                << " (this is not a proof of validity)\n";
      emit_report(c_report, args, {c_model.model_file}, model_to_json(model),
                  {{"witness_found", false}, {"budget", c_budget}}, c_seed);
      return kExitOk;
    }
    const auto& [config, cert] = *found;
    atomic_write(c_cert, certificate_to_json(cert).dump(2) + "\n");
    write_sample_table(table_from_configuration(config), c_witness);
    std::cout << "witness found: n=" << cert.n
              << ", lambda_min=" << format_double(cert.lambda_min) << "\n";
    emit_report(c_report, args, {c_model.model_file}, model_to_json(model),
                certificate_to_json(cert), c_seed);
    return kExitWitness;
  }

  if (ndtest->parsed()) {
    std::ifstream in(n_file);
    if (!in) throw std::invalid_argument("cannot open variogram file: " + n_file);
    nlohmann::json vj;
    in >> vj;
    const Variogram gamma = Variogram::from_json(vj);
    const NegDefResult nd = neg_def_test(gamma, n_trials, n_points, n_seed);
    const SubadditivityResult sub = subadditivity_check(gamma, 4 * n_trials, n_seed + 1);
    nlohmann::json result;
    result["neg_def"] = nd.pass ? "pass" : "fail";
    if (nd.witness) {
      result["neg_def_form_value"] = nd.witness->form_value;
      result["neg_def_points"] = nd.witness->points.rows();
    }
    result["subadditivity"] = sub.pass ? "pass" : "fail";
    if (sub.witness) {
      result["subadditivity_lhs"] = sub.witness->lhs;
      result["subadditivity_rhs"] = sub.witness->rhs;
    }
    std::cout << "neg-def: " << (nd.pass ? "pass" : "fail")
              << ", subadditivity: " << (sub.pass ? "pass" : "fail") << "\n";
    emit_report(n_report, args, {n_file}, vj, result, n_seed);
    return nd.pass && sub.pass ? kExitOk : kExitWitness;
  }

  if (synth->parsed()) {
    SynthSpec spec;
    spec.n = y_n;
    spec.box_km = y_box;
    spec.model = build_model(y_model, 1.0 / 200.0);
    spec.seed = y_seed;
    spec.mean = y_mean;
    SampleTable table;
    try {
      table = synth_generate(spec);
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      emit_report(y_report, args, {y_model.model_file}, model_to_json(spec.model),
                  {{"refused", e.what()}}, y_seed);
      return kExitWitness;
    }
    write_sample_table(table, y_out);
    std::cout << "wrote " << table.rows.size() << " synthetic samples to " << y_out << "\n";
    emit_report(y_report, args, {y_model.model_file}, model_to_json(spec.model),
                {{"n", table.rows.size()}, {"box_km", y_box}, {"mean", y_mean}}, y_seed);
    return kExitOk;
  }

  return kExitError;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cli_dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_dispatch(args);
}

}  // namespace covlab
