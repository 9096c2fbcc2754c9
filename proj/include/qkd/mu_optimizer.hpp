#ifndef QKD_MU_OPTIMIZER_HPP
#define QKD_MU_OPTIMIZER_HPP

#include <functional>
#include <vector>

#include "qkd/protocols.hpp"

namespace qkd {

struct MuInterval {
  double lo = 1e-4;
  double hi = 1.0;
};

struct OptimizationResult {
  double mu_star = 0.0;
  double rate_star = 0.0;
  std::string protocol;
  std::vector<std::pair<double, double>> trace;  // every (mu, rate) evaluated
};

/// Maximize a rate function over mu by a 200-point coarse grid (log-spaced
/// below 0.1, linear above — the rate can have a kink where the non-triggered
/// group stops contributing, so pure unimodal search is unsafe) followed by
/// golden-section refinement between the best grid point's neighbours to
/// |d mu| < 1e-6. Ties break toward smaller mu.
OptimizationResult optimize_mu(const std::function<double(double)>& rate,
                               MuInterval interval, const std::string& tag,
                               int grid_points = 200);

OptimizationResult optimize_mu(Protocol p, double eta_a, const ChannelParams& ch,
                               const ProtocolParams& params, MuInterval interval,
                               const EvalOptions& opt = {});

/// Low-loss/low-background approximation of the non-decoy rate:
///   R ~= q { -f(e_d) eta mu H2(e_d)
///            + (eta mu - mu^2) [1 - H2(eta e_d / (eta - mu))] }
/// Valid for 0 < mu < eta.
double approx_rate_nondecoy(double mu, double eta, double e_d,
                            const ProtocolParams& params);

/// The optimal mu = x eta of the approximated non-decoy rate solves
///   -f(e_d) H2(e_d) + 1 - 2x + e_d log2(e_d/(1-x))
///     + (1 - e_d - 2x) log2(1 - e_d/(1-x)) = 0,
/// solved by bisection on x in (0, 1/2] to 1e-9 (x = 1/2 at e_d = 0).
double solve_x_nondecoy(double e_d, const EcModel& ec);

/// The optimal mu of the approximated infinite-decoy rate solves
///   (1-mu)/(1+mu)^3 = f(e_d) H2(e_d) / (1 - H2(e_d)),
/// solved by bisection on mu in (0, 1] to 1e-9 (mu = 1 at e_d = 0).
/// Throws when the right-hand side is >= 1 (no positive rate).
double solve_mu_decoy(double e_d, const EcModel& ec);

struct MuSweepRow {
  double loss_db = 0.0;
  Protocol protocol = Protocol::nondecoy;
  double mu_star = 0.0;
  double rate_star = 0.0;
};

/// Optimal mu and rate per (loss, protocol) over a loss grid.
std::vector<MuSweepRow> mu_sweep(const std::vector<Protocol>& protocols,
                                 const std::vector<double>& losses_db, double eta_bob,
                                 double extra_loss_db, double y0b, double e_d,
                                 double eta_a, const ProtocolParams& params,
                                 MuInterval interval, const EvalOptions& opt = {});

}  // namespace qkd

#endif
