#include "qkd/mu_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

namespace {

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

OptimizationResult optimize_mu(const std::function<double(double)>& rate,
                               MuInterval interval, const std::string& tag,
                               int grid_points) {
  if (!(interval.lo > 0.0 && interval.lo < interval.hi && interval.hi <= 1.0)) {
    throw std::invalid_argument("optimize_mu: interval must satisfy 0 < lo < hi <= 1");
  }
  OptimizationResult res;
  res.protocol = tag;

  std::vector<double> grid;
  grid.reserve(grid_points);
  const double split = 0.1;
  if (interval.hi <= split || interval.lo >= split) {
    bool log_spaced = interval.hi <= split;
    for (int k = 0; k < grid_points; ++k) {
      double t = static_cast<double>(k) / (grid_points - 1);
      grid.push_back(log_spaced
                         ? interval.lo * std::pow(interval.hi / interval.lo, t)
                         : interval.lo + t * (interval.hi - interval.lo));
    }
  } else {
    int n_log = grid_points / 2;
    int n_lin = grid_points - n_log;
    for (int k = 0; k < n_log; ++k) {
      double t = static_cast<double>(k) / (n_log - 1);
      grid.push_back(interval.lo * std::pow(split / interval.lo, t));
    }
    for (int k = 1; k <= n_lin; ++k) {
      double t = static_cast<double>(k) / n_lin;
      grid.push_back(split + t * (interval.hi - split));
    }
  }

  int best = 0;
  double best_rate = -1.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double r = rate(grid[k]);
    res.trace.emplace_back(grid[k], r);
    if (r > best_rate) {  // strict: ties keep the smaller mu
      best_rate = r;
      best = static_cast<int>(k);
    }
  }

  // golden-section refinement between the neighbours of the best grid point
  double a = grid[std::max(best - 1, 0)];
  double b = grid[std::min<std::size_t>(best + 1, grid.size() - 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = rate(c);
  double fd = rate(d);
  res.trace.emplace_back(c, fc);
  res.trace.emplace_back(d, fd);
  while (b - a > 1e-6) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = rate(c);
      res.trace.emplace_back(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = rate(d);
      res.trace.emplace_back(d, fd);
    }
  }
  double mu_ref = 0.5 * (a + b);
  double r_ref = rate(mu_ref);
  res.trace.emplace_back(mu_ref, r_ref);

  // certificate: never report less than the best evaluated point
  res.mu_star = mu_ref;
  res.rate_star = r_ref;
  for (const auto& [m, r] : res.trace) {
    if (r > res.rate_star || (r == res.rate_star && m < res.mu_star)) {
      res.mu_star = m;
      res.rate_star = r;
    }
  }
  return res;
}

OptimizationResult optimize_mu(Protocol p, double eta_a, const ChannelParams& ch,
                               const ProtocolParams& params, MuInterval interval,
                               const EvalOptions& opt) {
  return optimize_mu(
      [&](double mu) { return asymptotic_rate(p, mu, eta_a, ch, params, opt).total; },
      interval, protocol_name(p));
}

double approx_rate_nondecoy(double mu, double eta, double e_d,
                            const ProtocolParams& params) {
  if (!(mu > 0.0 && mu < eta)) {
    throw std::domain_error("approx_rate_nondecoy: requires 0 < mu < eta");
  }
  double e1 = eta * e_d / (eta - mu);
  double h1 = e1 < 1.0 ? binary_entropy(std::min(e1, 0.5)) : 1.0;
  return params.q * (-params.ec(e_d) * eta * mu * binary_entropy(e_d) +
                     (eta * mu - mu * mu) * (1.0 - h1));
}

double solve_x_nondecoy(double e_d, const EcModel& ec) {
  if (!(e_d >= 0.0 && e_d < 0.1)) {
    throw std::domain_error("solve_x_nondecoy: e_d must lie in [0, 0.1)");
  }
  double fh = ec(e_d) * binary_entropy(e_d);
  auto g = [&](double x) {
    return -fh + 1.0 - 2.0 * x + xlog2(e_d) - e_d * std::log2(1.0 - x) +
           (1.0 - e_d - 2.0 * x) * std::log2(1.0 - e_d / (1.0 - x));
  };
  double lo = 1e-9, hi = 0.5;
  double ghi = g(hi);
  if (ghi >= 0.0) {
    if (ghi < 1e-12) return hi;  // e_d = 0 puts the root at the endpoint
    throw std::runtime_error("solve_x_nondecoy: no sign change on (0, 1/2]");
  }
  if (g(lo) <= 0.0) {
    throw std::runtime_error("solve_x_nondecoy: no sign change on (0, 1/2]");
  }
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_mu_decoy(double e_d, const EcModel& ec) {
  if (!(e_d >= 0.0 && e_d <= 0.5)) {
    throw std::domain_error("solve_mu_decoy: e_d outside [0, 0.5]");
  }
  double h = binary_entropy(e_d);
  double rhs = h < 1.0 ? ec(e_d) * h / (1.0 - h) : 2.0;
  if (rhs >= 1.0) {
    throw std::runtime_error("solve_mu_decoy: no positive rate (f H2 / (1-H2) >= 1)");
  }
  // (1-mu)/(1+mu)^3 decreases from 1 to 0 on (0, 1]
  auto g = [&](double m) { return (1.0 - m) / std::pow(1.0 + m, 3) - rhs; };
  double lo = 1e-12, hi = 1.0;
  if (g(hi) >= 0.0) return hi;  // rhs = 0 (e_d = 0) puts the root at mu = 1
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<MuSweepRow> mu_sweep(const std::vector<Protocol>& protocols,
                                 const std::vector<double>& losses_db, double eta_bob,
                                 double extra_loss_db, double y0b, double e_d,
                                 double eta_a, const ProtocolParams& params,
                                 MuInterval interval, const EvalOptions& opt) {
  std::vector<MuSweepRow> rows;
  rows.reserve(losses_db.size() * protocols.size());
  for (double loss : losses_db) {
    ChannelParams ch = ChannelParams::from_loss(eta_bob, loss + extra_loss_db, y0b, e_d);
    for (Protocol p : protocols) {
      OptimizationResult r = optimize_mu(p, eta_a, ch, params, interval, opt);
      rows.push_back({loss, p, r.mu_star, r.rate_star});
    }
  }
  return rows;
}

}  // namespace qkd
