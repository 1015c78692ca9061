#include "covlab/table_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "covlab/rng.hpp"

namespace covlab {

const char* const kVersion = "covlab 0.1.0";

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string digest_string(const std::string& text) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_string(ss.str());
}

void atomic_write(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp~";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp);
    out << contents;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    std::ostringstream msg;
    msg << "malformed number '" << s << "' at line " << line_no;
    throw std::invalid_argument(msg.str());
  }
  return v;
}

}  // namespace

SampleTable read_sample_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sample file: " + path);

  std::string header;
  if (!std::getline(in, header) || header.empty())
    throw std::invalid_argument("empty sample file: " + path);

  const auto names = split_csv_line(header);
  auto col = [&](const char* name) {
    const auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  };
  const int c_id = col("id"), c_x = col("x"), c_y = col("y"), c_lon = col("lon"),
            c_lat = col("lat"), c_e = col("e"), c_value = col("value");

  const bool planar = c_x >= 0 || c_y >= 0;
  const bool geographic = c_lon >= 0 || c_lat >= 0;
  if (planar == geographic)
    throw std::invalid_argument(
        "sample file must declare exactly one coordinate scheme: (x,y) or (lon,lat)");
  if (planar && (c_x < 0 || c_y < 0))
    throw std::invalid_argument("planar scheme needs both x and y columns");
  if (geographic && (c_lon < 0 || c_lat < 0))
    throw std::invalid_argument("geographic scheme needs both lon and lat columns");

  SampleTable table;
  table.geographic = geographic;
  table.has_env = c_e >= 0;
  table.has_value = c_value >= 0;

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != names.size()) {
      std::ostringstream msg;
      msg << "wrong field count at line " << line_no << " (expected " << names.size()
          << ", got " << fields.size() << ")";
      throw std::invalid_argument(msg.str());
    }
    SampleRow row;
    row.id = c_id >= 0 ? fields[c_id] : std::to_string(table.rows.size() + 1);
    if (planar) {
      row.x = parse_double(fields[c_x], line_no);
      row.y = parse_double(fields[c_y], line_no);
    } else {
      row.lon = parse_double(fields[c_lon], line_no);
      row.lat = parse_double(fields[c_lat], line_no);
    }
    if (c_e >= 0) row.e = parse_double(fields[c_e], line_no);
    if (c_value >= 0) row.value = parse_double(fields[c_value], line_no);
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw std::invalid_argument("sample file has no data rows: " + path);
  return table;
}

void write_sample_table(const SampleTable& table, const std::string& path) {
  std::ostringstream out;
  out << "id";
  if (table.geographic)
    out << ",lon,lat";
  else
    out << ",x,y";
  if (table.has_env) out << ",e";
  if (table.has_value) out << ",value";
  out << "\n";
  for (const auto& row : table.rows) {
    out << row.id;
    if (table.geographic)
      out << "," << format_double(row.lon.value()) << "," << format_double(row.lat.value());
    else
      out << "," << format_double(row.x.value()) << "," << format_double(row.y.value());
    if (table.has_env) out << "," << format_double(row.e.value_or(0.0));
    if (table.has_value) out << "," << format_double(row.value.value());
    out << "\n";
  }
  atomic_write(path, out.str());
}

LoadedSamples to_configuration(const SampleTable& table, AngleUnit unit) {
  LoadedSamples loaded;
  loaded.config.metric =
      table.geographic ? MetricSpec::great_circle(unit) : MetricSpec::euclidean();
  std::vector<double> values;
  for (const auto& row : table.rows) {
    JointSample s;
    if (table.geographic)
      s.site = GeoPoint{row.lon.value(), row.lat.value()};
    else
      s.site = EuclideanPoint{{row.x.value(), row.y.value()}};
    s.env = row.e.value_or(0.0);
    loaded.config.samples.push_back(std::move(s));
    if (table.has_value) values.push_back(row.value.value());
  }
  if (table.has_value)
    loaded.values = Eigen::Map<const Eigen::VectorXd>(values.data(), values.size());
  return loaded;
}

SampleTable table_from_configuration(const Configuration& config, const Eigen::VectorXd* values) {
  SampleTable table;
  if (config.samples.empty()) throw std::invalid_argument("empty configuration");
  table.geographic = std::holds_alternative<GeoPoint>(config.samples.front().site);
  table.has_env = true;
  table.has_value = values != nullptr;
  for (std::size_t i = 0; i < config.samples.size(); ++i) {
    const auto& s = config.samples[i];
    SampleRow row;
    row.id = std::to_string(i + 1);
    if (const auto* g = std::get_if<GeoPoint>(&s.site)) {
      row.lon = g->lon;
      row.lat = g->lat;
    } else {
      const auto& p = std::get<EuclideanPoint>(s.site);
      if (p.coords.size() > 2)
        throw std::invalid_argument(
            "sample CSV schema carries at most two Euclidean coordinates");
      row.x = p.coords[0];
      row.y = p.coords.size() > 1 ? p.coords[1] : 0.0;
    }
    row.e = s.env;
    if (values) row.value = (*values)(static_cast<Eigen::Index>(i));
    table.rows.push_back(std::move(row));
  }
  return table;
}

LoadedSamples load_samples(const std::string& path, AngleUnit unit) {
  return to_configuration(read_sample_table(path), unit);
}

std::vector<JointSample> clustered_layout(int n, double box, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("layout needs n >= 1");
  if (!(box > 0.0)) throw std::invalid_argument("layout needs box > 0");
  Rng rng(Rng::derive(seed, 0x1a70u));
  const int clusters = std::min(10, n);
  std::vector<std::pair<double, double>> centers(clusters);
  for (auto& c : centers) c = {rng.uniform(0.0, box), rng.uniform(0.0, box)};
  const double spread = box / 20.0;
  std::vector<JointSample> sites;
  sites.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& c = centers[i % clusters];
    const double x = std::clamp(c.first + spread * rng.normal(), 0.0, box);
    const double y = std::clamp(c.second + spread * rng.normal(), 0.0, box);
    sites.push_back(sample_xy(x, y));
  }
  return sites;
}

SampleTable synth_generate(const SynthSpec& spec) {
  Configuration config;
  config.metric = MetricSpec::euclidean();
  config.samples = clustered_layout(spec.n, spec.box_km, spec.seed);
  const auto draws = cholesky_simulate(spec.model, config, spec.mean, 1,
                                       Rng::derive(spec.seed, 0x5a17u));
  return table_from_configuration(config, &draws.front());
}

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["inputs_digest"] = report.inputs_digest;
  j["model"] = report.model;
  j["result"] = report.result;
  j["seed"] = report.seed;
  j["version"] = report.version;
  return j;
}

void write_report(const RunReport& report, const std::string& path) {
  atomic_write(path, report_to_json(report).dump(2) + "\n");
}

}  // namespace covlab
