#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "covlab/gram.hpp"
#include "covlab/models.hpp"

namespace covlab {

// One CSV row. Exactly one of (x, y) or (lon, lat) is present per table;
// e defaults to 0, value is only required by kriging/estimation commands.
struct SampleRow {
  std::string id;
  std::optional<double> x, y, lon, lat, e, value;
};

struct SampleTable {
  bool geographic = false;  // lon/lat columns instead of x/y
  bool has_env = false;
  bool has_value = false;
  std::vector<SampleRow> rows;
};

SampleTable read_sample_table(const std::string& path);
// header row, comma delimiter, '.' decimal separator, 17 significant digits;
// written atomically (write-then-rename)
void write_sample_table(const SampleTable& table, const std::string& path);

struct LoadedSamples {
  Configuration config;
  std::optional<Eigen::VectorXd> values;
};

// metric inferred from the columns: lon/lat -> great-circle, x/y -> euclidean
LoadedSamples to_configuration(const SampleTable& table,
                               AngleUnit unit = AngleUnit::Radians);
SampleTable table_from_configuration(const Configuration& config,
                                     const Eigen::VectorXd* values = nullptr);

LoadedSamples load_samples(const std::string& path, AngleUnit unit = AngleUnit::Radians);

struct SynthSpec {
  int n = 100;
  double box_km = 1000.0;
  CovarianceModel model = CovarianceModel::exponential(1.0, 1.0 / 200.0);
  std::uint64_t seed = 0;
  double mean = 0.0;
};

// clustered site layout in the box plus Gaussian values simulated from the
// model; refuses models that are not pd-certified on the layout
SampleTable synth_generate(const SynthSpec& spec);

// clustered sites only (10 cluster centers, normal scatter, clipped to box)
std::vector<JointSample> clustered_layout(int n, double box, std::uint64_t seed);

struct RunReport {
  std::string command;
  std::string inputs_digest;
  nlohmann::json model;
  nlohmann::json result;
  std::uint64_t seed = 0;
  std::string version;
};

nlohmann::json report_to_json(const RunReport& report);
void write_report(const RunReport& report, const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_file(const std::string& path);    // FNV-1a 64 hex of the bytes
std::string digest_string(const std::string& text);

void atomic_write(const std::string& path, const std::string& contents);
std::string format_double(double v);  // 17 significant digits

extern const char* const kVersion;

}  // namespace covlab
