// Batch front-end for the triggered-PDC QKD toolkit: loss sweeps, source
// intensity optimization, finite-statistics runs and measured-data analysis,
// all emitting deterministic CSV.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qkd/scenario.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "scenario configuration (JSON)")
      ->required();
  cmd->add_option("--out", args.out_path, "output CSV path (default: config \"output\")");
  cmd->add_option("--threads", args.threads, "worker threads (default: all cores)");
}

std::string resolve_out(const CommonArgs& args, const qkd::ScenarioConfig& cfg) {
  if (!args.out_path.empty()) return args.out_path;
  if (!cfg.output.empty()) return cfg.output;
  throw qkd::config_error("no output path: pass --out or set \"output\" in the config");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triggered-PDC QKD key-rate toolkit"};
  app.require_subcommand(1);

  CommonArgs sweep_args, opt_args, fl_args, an_args;
  CLI::App* sweep = app.add_subcommand("sweep", "key rate vs optical loss per protocol");
  add_common(sweep, sweep_args);
  CLI::App* optimize = app.add_subcommand("optimize", "optimal mu vs optical loss");
  add_common(optimize, opt_args);
  CLI::App* fluct =
      app.add_subcommand("fluctuation", "finite-statistics rates vs optical loss");
  add_common(fluct, fl_args);
  CLI::App* analyze =
      app.add_subcommand("analyze", "estimate bounds and rate from measured counts");
  add_common(analyze, an_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      qkd::ScenarioConfig cfg = qkd::load_config(sweep_args.config_path);
      qkd::write_file(resolve_out(sweep_args, cfg), qkd::run_sweep(cfg, sweep_args.threads));
    } else if (optimize->parsed()) {
      qkd::ScenarioConfig cfg = qkd::load_config(opt_args.config_path);
      qkd::write_file(resolve_out(opt_args, cfg),
                      qkd::run_optimize(cfg, opt_args.threads));
    } else if (fluct->parsed()) {
      qkd::ScenarioConfig cfg = qkd::load_config(fl_args.config_path);
      qkd::write_file(resolve_out(fl_args, cfg),
                      qkd::run_fluctuation(cfg, fl_args.threads));
    } else if (analyze->parsed()) {
      qkd::ScenarioConfig cfg = qkd::load_config(an_args.config_path);
      qkd::AnalyzeOutput out = qkd::run_analyze(cfg);
      std::cout << out.report;
      qkd::write_file(resolve_out(an_args, cfg), out.csv);
    }
  } catch (const qkd::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
