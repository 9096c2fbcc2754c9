#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "qkd/scenario.hpp"

using namespace qkd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qkd_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& body) const {
    fs::path p = path / name;
    std::ofstream(p) << body;
    return p.string();
  }
};

const char* kBaseConfig = R"({
  "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015, "extra_loss_db": 0.51},
  "alice_detector": {"type": "threshold", "eta_a": 0.145, "y0a": 0.0, "resolution": 1},
  "protocols": ["nondecoy", "infinite", "ayki", "pnr"],
  "loss_db": {"start": 0.0, "stop": 2.0, "step": 1.0},
  "protocol_params": {"q": 0.5, "f": 1.22},
  "mu_interval": {"min": 1e-4, "max": 1.0},
  "output": "out.csv"
})";

}  // namespace

TEST_CASE("table1 config loads with the documented values") {
  ScenarioConfig cfg = load_config("configs/table1.json");
  CHECK(cfg.eta_bob == 0.145);
  CHECK(cfg.detector.eta_a == 0.145);
  CHECK(cfg.e_d == 0.015);
  CHECK(cfg.y0b == 6.024e-6);
  CHECK(cfg.params.q == 0.5);
  CHECK(cfg.params.ec(0.03) == 1.22);
  CHECK(!cfg.fluctuation.has_value());  // asymptotic mode by default
}

TEST_CASE("config validation names the offending field") {
  TempDir tmp;
  std::string bad = kBaseConfig;
  bad.replace(bad.find("0.015"), 5, "1.5  ");
  try {
    load_config(tmp.file("bad.json", bad));
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("e_d") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected") {
  TempDir tmp;
  std::string bad = kBaseConfig;
  bad.insert(bad.rfind('}') - 1, ", \"surprise\": 1\n");
  CHECK_THROWS_AS(load_config(tmp.file("bad.json", bad)), config_error);
}

TEST_CASE("parse errors carry the file name") {
  TempDir tmp;
  try {
    load_config(tmp.file("broken.json", "{ not json"));
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
}

TEST_CASE("sweep output is deterministic and well-formed") {
  TempDir tmp;
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", kBaseConfig));
  std::string a = run_sweep(cfg, 1);
  std::string b = run_sweep(cfg, 4);
  CHECK(a == b);  // byte-identical across thread counts

  std::istringstream lines(a);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "loss_db,protocol,mu_star,r_total,r_j0,r_j1,q_mu_0,q_mu_1,e_mu_0,e_mu_1,"
        "y1_lower,e1_upper");
  int rows = 0;
  std::string line;
  std::string prev_key;
  while (std::getline(lines, line)) {
    ++rows;
    // ordered by (loss, protocol name): keys must be non-decreasing
    std::string key = line.substr(0, line.find(',', line.find(',') + 1));
    CHECK(prev_key <= key);
    prev_key = key;
  }
  CHECK(rows == 3 * 4);
}

TEST_CASE("empty protocol list is a validation error") {
  TempDir tmp;
  std::string cfg_text = kBaseConfig;
  cfg_text.replace(cfg_text.find("[\"nondecoy\", \"infinite\", \"ayki\", \"pnr\"]"),
                   std::string("[\"nondecoy\", \"infinite\", \"ayki\", \"pnr\"]").size(),
                   "[]");
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", cfg_text));
  CHECK_THROWS_AS(run_sweep(cfg, 1), config_error);
}

TEST_CASE("optimize output schema") {
  TempDir tmp;
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", kBaseConfig));
  std::string csv = run_optimize(cfg, 2);
  CHECK(csv.rfind("loss_db,protocol,mu_star,rate_star\n", 0) == 0);
  CHECK(run_optimize(cfg, 1) == csv);
}

TEST_CASE("weak decoy is sweepable with a pinned decoy ratio") {
  TempDir tmp;
  std::string text = R"({
    "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015, "extra_loss_db": 0.51},
    "alice_detector": {"type": "threshold", "eta_a": 0.145},
    "protocols": ["weak", "infinite"],
    "loss_db": {"start": 0.0, "stop": 0.0, "step": 1.0},
    "protocol_params": {"q": 0.5, "f": 1.22},
    "mu_interval": {"min": 1e-4, "max": 1.0},
    "weak_decoy": {"nu_ratio": 0.01, "signal_fraction": 0.55}
  })";
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", text));
  std::string csv = run_sweep(cfg, 1);
  std::istringstream ss(csv);
  std::string header, inf_line, weak_line;
  std::getline(ss, header);
  std::getline(ss, inf_line);
  std::getline(ss, weak_line);
  CHECK(inf_line.find(",infinite,") != std::string::npos);
  CHECK(weak_line.find(",weak,") != std::string::npos);
  auto rate_of = [](const std::string& line) {
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c <= 3; ++c) std::getline(ls, cell, ',');
    return std::stod(cell);
  };
  // asymptotically the weak bounds sit just below the infinite ceiling
  CHECK(rate_of(weak_line) > 0.0);
  CHECK(rate_of(weak_line) <= rate_of(inf_line));
  CHECK(rate_of(weak_line) > 0.8 * rate_of(inf_line));
}

TEST_CASE("loss grid is generated without accumulation drift") {
  LossRange loss{0.0, 4.5, 0.1};
  std::vector<double> g = loss.grid();
  REQUIRE(g.size() == 46);
  CHECK(g[45] == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(g[13] == doctest::Approx(1.3).epsilon(1e-15));
}

TEST_CASE("fluctuation command requires its config block and known protocols") {
  TempDir tmp;
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", kBaseConfig));
  CHECK_THROWS_AS(run_fluctuation(cfg, 1), config_error);

  std::string with_fl = kBaseConfig;
  with_fl.insert(with_fl.rfind('}') - 1,
                 ", \"fluctuation\": {\"n_pulses\": 6e9, \"u_alpha\": 2.0}\n");
  ScenarioConfig cfg2 = load_config(tmp.file("cfg2.json", with_fl));
  CHECK_THROWS_AS(run_fluctuation(cfg2, 1), config_error);  // pnr in the list
}

TEST_CASE("fluctuation run at u=0 equals the asymptotic sweep rate") {
  TempDir tmp;
  std::string text = R"({
    "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015},
    "alice_detector": {"type": "threshold", "eta_a": 0.145},
    "protocols": ["infinite"],
    "loss_db": {"start": 0.0, "stop": 0.0, "step": 1.0},
    "protocol_params": {"q": 0.5, "f": 1.22},
    "mu_interval": {"min": 1e-4, "max": 1.0},
    "fluctuation": {"n_pulses": 6e9, "u_alpha": 0.0}
  })";
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", text));
  std::string fl_csv = run_fluctuation(cfg, 1);
  std::string sweep_csv = run_sweep(cfg, 1);
  // rate column of the single data row in each file
  auto field = [](const std::string& csv, int row, int col) {
    std::istringstream ss(csv);
    std::string line;
    for (int r = 0; r <= row; ++r) std::getline(ss, line);
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c <= col; ++c) std::getline(ls, cell, ',');
    return cell;
  };
  CHECK(field(fl_csv, 1, 5) == field(sweep_csv, 1, 3));
}

TEST_CASE("analyze round-trips synthetic counts to the model rate") {
  // counts drawn as exact expectations of the Eve-free model: the recovered
  // rate must match the closed-form evaluation
  double mu = 0.194;
  ChannelParams ch = ChannelParams::from_loss(0.145, 0.51, 6.024e-6, 0.015);
  ObservedStatistics obs = closed_form_threshold(SourceParams{mu}, 0.145, ch);
  double pulses = 1e12;
  std::ostringstream data;
  data << "intensity,j,pulses,detections,errors\n";
  for (int j = 0; j < 2; ++j) {
    data << mu << ',' << j << ',' << format_sci(pulses) << ','
         << format_sci(obs.gain[j] * pulses) << ','
         << format_sci(obs.error_gain(j) * pulses) << '\n';
  }
  TempDir tmp;
  std::string data_path = tmp.file("counts.csv", data.str());
  std::string cfg_text = R"({
    "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015},
    "alice_detector": {"type": "threshold", "eta_a": 0.145},
    "analyze": {"input": "counts.csv", "protocol": "ayki"}
  })";
  ScenarioConfig cfg = load_config(tmp.file("cfg.json", cfg_text));
  AnalyzeOutput out = run_analyze(cfg);

  SinglePhotonBounds seed = estimate_ayki(obs, mu, 0.145, 0.0);
  KeyRateReport expect = rate_total(seed, obs, cfg.params);
  std::istringstream ss(out.csv);
  std::string line;
  std::getline(ss, line);
  std::getline(ss, line);
  std::istringstream ls(line);
  std::string cell;
  std::getline(ls, cell, ',');  // protocol
  CHECK(cell == "ayki");
  std::getline(ls, cell, ',');  // mu
  std::getline(ls, cell, ',');  // r_total
  CHECK(std::stod(cell) == doctest::Approx(expect.total).epsilon(1e-6));
  CHECK(out.report.find("R total") != std::string::npos);
}

TEST_CASE("analyze validates the measured rows") {
  TempDir tmp;
  std::string cfg_tpl = R"({
    "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015},
    "alice_detector": {"type": "threshold", "eta_a": 0.145},
    "analyze": {"input": "FILE", "protocol": "nondecoy"}
  })";

  auto config_for = [&](const std::string& name) {
    std::string text = cfg_tpl;
    text.replace(text.find("FILE"), 4, name);
    return load_config(tmp.file("cfg_" + name + ".json", text));
  };

  tmp.file("over.csv", "intensity,j,pulses,detections,errors\n0.2,1,100,200,5\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(run_analyze(config_for("over.csv"))),
                       doctest::Contains("detections exceed pulses"), config_error);

  tmp.file("badj.csv", "intensity,j,pulses,detections,errors\n0.2,3,100,10,1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(run_analyze(config_for("badj.csv"))),
                       doctest::Contains("resolution"), config_error);

  tmp.file("mangled.csv", "intensity,j,pulses,detections,errors\n0.2;1;100;10;1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(run_analyze(config_for("mangled.csv"))),
                       doctest::Contains("line 2"), config_error);

  // all-zero detections: zero rate, no crash
  tmp.file("zero.csv",
           "intensity,j,pulses,detections,errors\n0.2,0,1000,0,0\n0.2,1,1000,0,0\n");
  AnalyzeOutput out = run_analyze(config_for("zero.csv"));
  CHECK(out.csv.find("0.000000000e+00") != std::string::npos);
}

TEST_CASE("scientific formatting is fixed-width") {
  CHECK(format_sci(0.0) == "0.000000000e+00");
  CHECK(format_sci(8.566567985e-3) == "8.566567985e-03");
  CHECK(format_sci(1.0) == "1.000000000e+00");
}

TEST_CASE("config type errors surface as validation errors") {
  TempDir tmp;
  std::string bad = kBaseConfig;
  bad.replace(bad.find("6.024e-6"), 8, "\"oops\" ");
  CHECK_THROWS_AS(load_config(tmp.file("bad.json", bad)), config_error);
}

TEST_CASE("analyze rejects duplicate and inconsistent count rows") {
  TempDir tmp;
  std::string cfg_tpl = R"({
    "channel": {"eta_bob": 0.145, "y0b": 6.024e-6, "e_d": 0.015},
    "alice_detector": {"type": "threshold", "eta_a": 0.145},
    "analyze": {"input": "FILE", "protocol": "nondecoy"}
  })";
  auto config_for = [&](const std::string& name) {
    std::string text = cfg_tpl;
    text.replace(text.find("FILE"), 4, name);
    return load_config(tmp.file("cfg_" + name + ".json", text));
  };
  tmp.file("dup.csv",
           "intensity,j,pulses,detections,errors\n0.2,1,100,10,1\n0.2,1,100,9,1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(run_analyze(config_for("dup.csv"))),
                       doctest::Contains("duplicate"), config_error);
  tmp.file("mix.csv",
           "intensity,j,pulses,detections,errors\n0.2,0,100,10,1\n0.2,1,200,9,1\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(run_analyze(config_for("mix.csv"))),
                       doctest::Contains("pulse count differs"), config_error);
}
