#include "qkd/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qkd {

using nlohmann::json;

std::vector<double> LossRange::grid() const {
  std::vector<double> g;
  for (int k = 0; start + k * step <= stop + 1e-9; ++k) g.push_back(start + k * step);
  return g;
}

ChannelParams ScenarioConfig::channel_at(double loss_db) const {
  return ChannelParams::from_loss(eta_bob, loss_db + extra_loss_db, y0b, e_d);
}

EvalOptions ScenarioConfig::eval_options() const {
  EvalOptions opt;
  opt.ayki_mode = ayki_mode == "conservative" ? AykiMode::conservative : AykiMode::minimized;
  if (weak_nu_ratio) opt.weak_nu_ratio = *weak_nu_ratio;
  if (weak_signal_fraction) opt.weak.signal_fraction = *weak_signal_fraction;
  return opt;
}

namespace {

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw config_error("unknown key \"" + key + "\" in " + where);
    }
  }
}

double get_prob(const json& j, const std::string& field) {
  double v = j.at(field).get<double>();
  if (!(v >= 0.0 && v <= 1.0)) {
    throw config_error(field + " out of [0,1]");
  }
  return v;
}

}  // namespace

namespace {
ScenarioConfig load_config_checked(const json& j, const std::string& path);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("config parse error in " + path + ": " + e.what());
  }
  try {
    return load_config_checked(j, path);
  } catch (const json::exception& e) {
    // wrong value types, missing required keys inside blocks, ...
    throw config_error("invalid config " + path + ": " + e.what());
  }
}

namespace {

ScenarioConfig load_config_checked(const json& j, const std::string& path) {
  ScenarioConfig cfg;
  require_keys(j, "config root",
               {"channel", "alice_detector", "protocols", "loss_db", "protocol_params",
                "mu_interval", "ayki_mode", "weak_decoy", "fluctuation", "analyze",
                "output"});

  const json& ch = j.at("channel");
  require_keys(ch, "channel", {"eta_bob", "y0b", "e_d", "extra_loss_db"});
  cfg.eta_bob = get_prob(ch, "eta_bob");
  cfg.y0b = get_prob(ch, "y0b");
  cfg.e_d = get_prob(ch, "e_d");
  if (ch.contains("extra_loss_db")) {
    cfg.extra_loss_db = ch.at("extra_loss_db").get<double>();
    if (cfg.extra_loss_db < 0.0) throw config_error("extra_loss_db must be >= 0");
  }

  if (j.contains("alice_detector")) {
    const json& det = j.at("alice_detector");
    require_keys(det, "alice_detector", {"type", "eta_a", "y0a", "resolution"});
    cfg.detector.type = det.value("type", "threshold");
    if (cfg.detector.type != "threshold" && cfg.detector.type != "pnr") {
      throw config_error("alice_detector.type must be \"threshold\" or \"pnr\"");
    }
    if (det.contains("eta_a")) cfg.detector.eta_a = get_prob(det, "eta_a");
    if (det.contains("y0a")) cfg.detector.y0a = get_prob(det, "y0a");
    if (det.contains("resolution")) {
      cfg.detector.resolution = det.at("resolution").get<int>();
      if (cfg.detector.resolution < 1) throw config_error("resolution must be >= 1");
    }
  }

  if (j.contains("protocols")) {
    for (const auto& p : j.at("protocols")) {
      std::string name = p.get<std::string>();
      protocol_from_name(name);  // rejects unknown names
      cfg.protocols.push_back(name);
    }
  }

  if (j.contains("loss_db")) {
    const json& loss = j.at("loss_db");
    require_keys(loss, "loss_db", {"start", "stop", "step"});
    cfg.loss.start = loss.at("start").get<double>();
    cfg.loss.stop = loss.at("stop").get<double>();
    cfg.loss.step = loss.at("step").get<double>();
    if (cfg.loss.step <= 0.0) throw config_error("loss_db.step must be > 0");
    if (cfg.loss.stop < cfg.loss.start) throw config_error("loss_db.stop < loss_db.start");
  }

  if (j.contains("protocol_params")) {
    const json& pp = j.at("protocol_params");
    require_keys(pp, "protocol_params", {"q", "f"});
    if (pp.contains("q")) {
      cfg.params.q = pp.at("q").get<double>();
      if (!(cfg.params.q > 0.0 && cfg.params.q <= 1.0)) {
        throw config_error("protocol_params.q out of (0,1]");
      }
    }
    if (pp.contains("f")) {
      const json& f = pp.at("f");
      if (f.is_number()) {
        cfg.params.ec = EcModel::constant(f.get<double>());
      } else if (f.is_array()) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& row : f) {
          if (!row.is_array() || row.size() != 2) {
            throw config_error("protocol_params.f table rows must be [error, efficiency]");
          }
          pts.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
        try {
          cfg.params.ec = EcModel::table(std::move(pts));
        } catch (const std::exception& e) {
          throw config_error(std::string("protocol_params.f: ") + e.what());
        }
      } else {
        throw config_error("protocol_params.f must be a number or a table");
      }
    }
  }

  if (j.contains("mu_interval")) {
    const json& mi = j.at("mu_interval");
    require_keys(mi, "mu_interval", {"min", "max"});
    cfg.mu_interval.lo = mi.at("min").get<double>();
    cfg.mu_interval.hi = mi.at("max").get<double>();
    if (!(cfg.mu_interval.lo > 0.0 && cfg.mu_interval.lo < cfg.mu_interval.hi &&
          cfg.mu_interval.hi <= 1.0)) {
      throw config_error("mu_interval must satisfy 0 < min < max <= 1");
    }
  }

  if (j.contains("ayki_mode")) {
    cfg.ayki_mode = j.at("ayki_mode").get<std::string>();
    if (cfg.ayki_mode != "minimized" && cfg.ayki_mode != "conservative") {
      throw config_error("ayki_mode must be \"minimized\" or \"conservative\"");
    }
  }

  if (j.contains("weak_decoy")) {
    const json& w = j.at("weak_decoy");
    require_keys(w, "weak_decoy", {"nu_ratio", "signal_fraction"});
    if (w.contains("nu_ratio")) {
      double r = w.at("nu_ratio").get<double>();
      if (!(r > 0.0 && r < 1.0)) throw config_error("weak_decoy.nu_ratio out of (0,1)");
      cfg.weak_nu_ratio = r;
    }
    if (w.contains("signal_fraction")) {
      double f = w.at("signal_fraction").get<double>();
      if (!(f > 0.0 && f < 1.0)) {
        throw config_error("weak_decoy.signal_fraction out of (0,1)");
      }
      cfg.weak_signal_fraction = f;
    }
  }

  if (j.contains("fluctuation")) {
    const json& fl = j.at("fluctuation");
    require_keys(fl, "fluctuation", {"n_pulses", "u_alpha"});
    FluctuationParams fp;
    fp.n_pulses = fl.at("n_pulses").get<double>();
    if (fp.n_pulses <= 0.0) throw config_error("fluctuation.n_pulses must be > 0");
    fp.u_alpha = fl.value("u_alpha", 10.0);
    if (fp.u_alpha < 0.0) throw config_error("fluctuation.u_alpha must be >= 0");
    cfg.fluctuation = fp;
  }

  if (j.contains("analyze")) {
    const json& an = j.at("analyze");
    require_keys(an, "analyze", {"input", "protocol"});
    cfg.analyze_input = an.at("input").get<std::string>();
    cfg.analyze_protocol = an.at("protocol").get<std::string>();
    // resolve the data file relative to the config's directory
    std::filesystem::path p(cfg.analyze_input);
    if (p.is_relative()) {
      cfg.analyze_input = (std::filesystem::path(path).parent_path() / p).string();
    }
  }

  if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  return cfg;
}

}  // namespace

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9e", v);
  return buf;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

// Evaluates job(i) for i in [0, n) on `threads` workers; results land in a
// pre-sized vector so assembly order never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& job) {
  std::vector<T> out(n);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n > 0 ? n : 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          out[i] = job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<std::string> sorted_protocols(const ScenarioConfig& cfg) {
  if (cfg.protocols.empty()) throw config_error("protocols list is empty");
  std::vector<std::string> names = cfg.protocols;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

std::string run_sweep(const ScenarioConfig& cfg, int threads) {
  if (cfg.detector.type != "threshold") {
    throw config_error("sweep requires alice_detector.type = threshold");
  }
  std::vector<std::string> names = sorted_protocols(cfg);
  std::vector<double> losses = cfg.loss.grid();
  EvalOptions opt = cfg.eval_options();
  if (opt.weak.nu <= 0.0 && cfg.weak_nu_ratio) opt.weak_nu_ratio = *cfg.weak_nu_ratio;

  struct Cell {
    double loss = 0.0;
    std::string name;
    OptimizationResult best;
    ObservedStatistics obs;
    KeyRateReport rep;
  };
  int n = static_cast<int>(losses.size() * names.size());
  std::function<Cell(int)> job = [&](int idx) {
    Cell c;
    c.loss = losses[idx / names.size()];
    c.name = names[idx % names.size()];
    Protocol p = protocol_from_name(c.name);
    ChannelParams ch = cfg.channel_at(c.loss);
    EvalOptions o = opt;
    c.best = optimize_mu(
        [&](double mu) {
          EvalOptions oo = o;
          if (p == Protocol::weak_decoy && oo.weak.nu <= 0.0) {
            oo.weak.nu = mu * (cfg.weak_nu_ratio ? *cfg.weak_nu_ratio : 0.1);
          }
          return asymptotic_rate(p, mu, cfg.detector.eta_a, ch, cfg.params, oo).total;
        },
        cfg.mu_interval, c.name);
    EvalOptions oo = o;
    if (p == Protocol::weak_decoy && oo.weak.nu <= 0.0) {
      oo.weak.nu = c.best.mu_star * (cfg.weak_nu_ratio ? *cfg.weak_nu_ratio : 0.1);
    }
    c.rep = asymptotic_rate(p, c.best.mu_star, cfg.detector.eta_a, ch, cfg.params, oo);
    c.obs = protocol_observables(p, c.best.mu_star, cfg.detector.eta_a, ch);
    return c;
  };
  std::vector<Cell> cells = parallel_map<Cell>(n, threads, job);

  std::ostringstream out;
  out << "loss_db,protocol,mu_star,r_total,r_j0,r_j1,q_mu_0,q_mu_1,e_mu_0,e_mu_1,"
         "y1_lower,e1_upper\n";
  for (const Cell& c : cells) {
    out << format_sci(c.loss) << ',' << c.name << ',' << format_sci(c.best.mu_star)
        << ',' << format_sci(c.rep.total) << ',' << format_sci(c.rep.group[0].clamped)
        << ',' << format_sci(c.rep.group[1].clamped) << ',' << format_sci(c.obs.gain[0])
        << ',' << format_sci(c.obs.gain[1]) << ',' << format_sci(c.obs.qber[0]) << ','
        << format_sci(c.obs.qber[1]) << ',' << format_sci(c.rep.y1_lower) << ','
        << format_sci(c.rep.e1_upper) << '\n';
  }
  return out.str();
}

std::string run_optimize(const ScenarioConfig& cfg, int threads) {
  if (cfg.detector.type != "threshold") {
    throw config_error("optimize requires alice_detector.type = threshold");
  }
  std::vector<std::string> names = sorted_protocols(cfg);
  std::vector<double> losses = cfg.loss.grid();
  EvalOptions opt = cfg.eval_options();

  struct Cell {
    double loss = 0.0;
    std::string name;
    double mu_star = 0.0;
    double rate_star = 0.0;
  };
  int n = static_cast<int>(losses.size() * names.size());
  std::function<Cell(int)> job = [&](int idx) {
    Cell c;
    c.loss = losses[idx / names.size()];
    c.name = names[idx % names.size()];
    Protocol p = protocol_from_name(c.name);
    ChannelParams ch = cfg.channel_at(c.loss);
    OptimizationResult r = optimize_mu(
        [&](double mu) {
          EvalOptions oo = opt;
          if (p == Protocol::weak_decoy && oo.weak.nu <= 0.0) {
            oo.weak.nu = mu * (cfg.weak_nu_ratio ? *cfg.weak_nu_ratio : 0.1);
          }
          return asymptotic_rate(p, mu, cfg.detector.eta_a, ch, cfg.params, oo).total;
        },
        cfg.mu_interval, c.name);
    c.mu_star = r.mu_star;
    c.rate_star = r.rate_star;
    return c;
  };
  std::vector<Cell> cells = parallel_map<Cell>(n, threads, job);

  std::ostringstream out;
  out << "loss_db,protocol,mu_star,rate_star\n";
  for (const Cell& c : cells) {
    out << format_sci(c.loss) << ',' << c.name << ',' << format_sci(c.mu_star) << ','
        << format_sci(c.rate_star) << '\n';
  }
  return out.str();
}

std::string run_fluctuation(const ScenarioConfig& cfg, int threads) {
  if (!cfg.fluctuation) {
    throw config_error("fluctuation block missing from the config");
  }
  std::vector<std::string> names = sorted_protocols(cfg);
  for (const std::string& name : names) {
    Protocol p = protocol_from_name(name);
    if (p != Protocol::infinite_decoy && p != Protocol::weak_decoy && p != Protocol::ayki) {
      throw config_error("fluctuation supports protocols infinite, weak, ayki; got " + name);
    }
  }
  std::vector<double> losses = cfg.loss.grid();
  EvalOptions opt = cfg.eval_options();

  struct Cell {
    double loss = 0.0;
    std::string name;
    FluctuationOptimum best;
  };
  int n = static_cast<int>(losses.size() * names.size());
  std::function<Cell(int)> job = [&](int idx) {
    Cell c;
    c.loss = losses[idx / names.size()];
    c.name = names[idx % names.size()];
    ChannelParams ch = cfg.channel_at(c.loss);
    c.best = optimize_with_fluctuations(protocol_from_name(c.name), cfg.detector.eta_a,
                                        ch, cfg.params, *cfg.fluctuation,
                                        cfg.mu_interval, opt);
    return c;
  };
  std::vector<Cell> cells = parallel_map<Cell>(n, threads, job);

  std::ostringstream out;
  out << "loss_db,protocol,mu_star,nu_star,signal_fraction,rate\n";
  for (const Cell& c : cells) {
    out << format_sci(c.loss) << ',' << c.name << ',' << format_sci(c.best.mu_star)
        << ',' << format_sci(c.best.nu_star) << ','
        << format_sci(c.best.signal_fraction) << ',' << format_sci(c.best.rate) << '\n';
  }

  // refined cutoff row per protocol: the loss where the rate first hits 0
  for (const std::string& name : names) {
    double last_pos = -1.0, first_zero = -1.0;
    for (const Cell& c : cells) {
      if (c.name != name) continue;
      if (c.best.rate > 0.0) {
        last_pos = c.loss;
      } else if (last_pos >= 0.0 && first_zero < 0.0) {
        first_zero = c.loss;
      }
    }
    if (last_pos < 0.0 || first_zero < 0.0) continue;
    Protocol p = protocol_from_name(name);
    double lo = last_pos, hi = first_zero;
    FluctuationOptimum at_cut;
    while (hi - lo > 0.01) {
      double mid = 0.5 * (lo + hi);
      FluctuationOptimum r = optimize_with_fluctuations(
          p, cfg.detector.eta_a, cfg.channel_at(mid), cfg.params, *cfg.fluctuation,
          cfg.mu_interval, opt);
      if (r.rate > 0.0) {
        lo = mid;
        at_cut = r;
      } else {
        hi = mid;
      }
    }
    out << format_sci(hi) << ',' << name << ',' << format_sci(at_cut.mu_star) << ','
        << format_sci(at_cut.nu_star) << ',' << format_sci(at_cut.signal_fraction)
        << ',' << format_sci(0.0) << '\n';
  }
  return out.str();
}

namespace {

struct CountRow {
  double intensity = 0.0;
  int j = 0;
  double pulses = 0.0;
  double detections = 0.0;
  double errors = 0.0;
};

std::vector<CountRow> parse_counts(const std::string& path, int resolution) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open measured data: " + path);
  std::vector<CountRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.find("intensity") != std::string::npos) continue;  // header
    std::istringstream ss(line);
    CountRow r;
    char c1, c2, c3, c4;
    if (!(ss >> r.intensity >> c1 >> r.j >> c2 >> r.pulses >> c3 >> r.detections >> c4 >>
          r.errors) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',') {
      throw config_error("malformed row at line " + std::to_string(lineno) + " of " + path);
    }
    if (r.j < 0 || r.j > resolution) {
      throw config_error("line " + std::to_string(lineno) +
                         ": trigger outcome j outside the detector resolution");
    }
    if (r.intensity <= 0.0 || r.pulses <= 0.0) {
      throw config_error("line " + std::to_string(lineno) +
                         ": intensity and pulses must be positive");
    }
    if (r.detections > r.pulses) {
      throw config_error("line " + std::to_string(lineno) + ": detections exceed pulses");
    }
    if (r.errors > r.detections) {
      throw config_error("line " + std::to_string(lineno) + ": errors exceed detections");
    }
    for (const CountRow& seen : rows) {
      if (seen.intensity == r.intensity && seen.j == r.j) {
        throw config_error("line " + std::to_string(lineno) +
                           ": duplicate row for this intensity and trigger outcome");
      }
      if (seen.intensity == r.intensity && seen.pulses != r.pulses) {
        throw config_error("line " + std::to_string(lineno) +
                           ": pulse count differs across rows of one intensity");
      }
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw config_error("no data rows in " + path);
  return rows;
}

}  // namespace

AnalyzeOutput run_analyze(const ScenarioConfig& cfg) {
  if (cfg.analyze_input.empty() || cfg.analyze_protocol.empty()) {
    throw config_error("analyze block missing from the config");
  }
  const int resolution = cfg.detector.type == "pnr" ? cfg.detector.resolution : 1;
  std::vector<CountRow> rows = parse_counts(cfg.analyze_input, resolution);

  // group rows by intensity -> ObservedStatistics from raw counts
  std::map<double, ObservedStatistics> stats;
  for (const CountRow& r : rows) {
    auto [it, fresh] = stats.try_emplace(r.intensity);
    ObservedStatistics& s = it->second;
    if (fresh) {
      s.mu = r.intensity;
      s.resolution = resolution;
      s.gain.assign(resolution + 1, 0.0);
      s.qber.assign(resolution + 1, 0.0);
      s.trigger_prob.assign(resolution + 1, 0.0);
    }
    s.gain[r.j] = r.detections / r.pulses;
    s.qber[r.j] = r.detections > 0.0 ? r.errors / r.detections : 0.0;
  }

  const std::string proto = cfg.analyze_protocol;
  std::ostringstream report;
  KeyRateReport rep;
  if (proto == "weak") {
    if (stats.size() != 2) {
      throw config_error("weak-decoy analysis needs exactly two intensities, got " +
                         std::to_string(stats.size()));
    }
    auto it = stats.begin();
    const ObservedStatistics& lo = it->second;
    const ObservedStatistics& hi = std::next(it)->second;
    SinglePhotonBounds b =
        estimate_weak_decoy(hi, lo, hi.mu, lo.mu, cfg.detector.eta_a);
    rep = rate_total(b, hi, cfg.params);
  } else if (proto == "nondecoy" || proto == "ayki" || proto == "passive" ||
             proto == "pnr") {
    if (stats.size() != 1) {
      throw config_error(proto + " analysis needs exactly one intensity, got " +
                         std::to_string(stats.size()));
    }
    const ObservedStatistics& obs = stats.begin()->second;
    if (proto == "nondecoy") {
      rep = rate_total(estimate_nondecoy(obs, obs.mu, cfg.detector.eta_a), obs, cfg.params);
    } else if (proto == "ayki") {
      SinglePhotonBounds seed = estimate_ayki(obs, obs.mu, cfg.detector.eta_a, 0.0);
      rep = rate_total(seed, obs, cfg.params, cfg.eval_options().ayki_mode);
    } else if (proto == "passive") {
      DetectorResponse det =
          cfg.detector.type == "pnr"
              ? pnr_response(cfg.detector.resolution)
              : threshold_response(cfg.detector.eta_a, cfg.detector.y0a);
      SinglePhotonBounds b =
          estimate_passive_general(obs, det, std::max(det.resolution() + 2, 12));
      rep = rate_total(b, obs, cfg.params);
    } else {  // pnr: single-photon group read off directly
      if (resolution < 1) throw config_error("pnr analysis needs resolution >= 1");
      double r = rate_pnr(obs.gain[1], obs.qber[1], cfg.params);
      rep.mu = obs.mu;
      rep.protocol = "pnr";
      rep.group[1] = {r, r};
      rep.total = r;
      rep.y1_lower = obs.gain[1] / std::max(thermal_pn(obs.mu, 1), 1e-300);
      rep.e1_upper = obs.qber[1];
    }
  } else {
    throw config_error("analyze.protocol must be one of nondecoy, ayki, weak, passive, pnr");
  }

  report << "protocol: " << rep.protocol << "\n";
  for (const auto& [mu, s] : stats) {
    report << "intensity mu = " << format_sci(mu) << "\n";
    for (int jj = 0; jj <= s.resolution; ++jj) {
      report << "  group j=" << jj << ": gain = " << format_sci(s.gain[jj])
             << ", qber = " << format_sci(s.qber[jj]) << "\n";
    }
  }
  report << "Y1 lower bound  = " << format_sci(rep.y1_lower) << "\n";
  report << "e1 upper bound  = " << format_sci(rep.e1_upper) << "\n";
  report << "R (non-triggered group) = " << format_sci(rep.group[0].clamped) << "\n";
  report << "R (triggered group)     = " << format_sci(rep.group[1].clamped) << "\n";
  report << "R total                 = " << format_sci(rep.total)
         << " bits per pump pulse\n";

  std::ostringstream csv;
  csv << "protocol,mu,r_total,r_j0,r_j1,y1_lower,e1_upper\n";
  csv << rep.protocol << ',' << format_sci(rep.mu) << ',' << format_sci(rep.total) << ','
      << format_sci(rep.group[0].clamped) << ',' << format_sci(rep.group[1].clamped)
      << ',' << format_sci(rep.y1_lower) << ',' << format_sci(rep.e1_upper) << '\n';
  return {report.str(), csv.str()};
}

}  // namespace qkd
