#ifndef QKD_SCENARIO_HPP
#define QKD_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkd/finite_stats.hpp"

namespace qkd {

/// Configuration / input validation failure (CLI exit code 2).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct AliceDetectorConfig {
  std::string type = "threshold";  // threshold | pnr
  double eta_a = 0.145;
  double y0a = 0.0;
  int resolution = 1;
};

struct LossRange {
  double start = 0.0;
  double stop = 40.0;
  double step = 1.0;

  std::vector<double> grid() const;
};

struct ScenarioConfig {
  // channel
  double eta_bob = 0.145;
  double y0b = 6.024e-6;
  double e_d = 0.015;
  double extra_loss_db = 0.0;  // fixed optical loss outside the swept channel

  AliceDetectorConfig detector;
  std::vector<std::string> protocols;
  LossRange loss;
  ProtocolParams params;
  MuInterval mu_interval;

  std::string ayki_mode = "minimized";  // minimized | conservative
  std::optional<double> weak_nu_ratio;
  std::optional<double> weak_signal_fraction;

  std::optional<FluctuationParams> fluctuation;

  // analyze command inputs
  std::string analyze_input;
  std::string analyze_protocol;

  std::string output;

  ChannelParams channel_at(double loss_db) const;
  EvalOptions eval_options() const;
};

ScenarioConfig load_config(const std::string& path);

/// CSV bodies (header + rows, '\n' line ends, 10-significant-digit
/// scientific notation). Sweep points are evaluated concurrently on
/// `threads` workers and assembled in deterministic order.
std::string run_sweep(const ScenarioConfig& cfg, int threads = 0);
std::string run_optimize(const ScenarioConfig& cfg, int threads = 0);
std::string run_fluctuation(const ScenarioConfig& cfg, int threads = 0);

struct AnalyzeOutput {
  std::string report;  // human-readable
  std::string csv;
};
AnalyzeOutput run_analyze(const ScenarioConfig& cfg);

void write_file(const std::string& path, const std::string& body);

/// "%.9e" (10 significant digits), the fixed number format of every CSV.
std::string format_sci(double v);

}  // namespace qkd

#endif
