#ifndef QKD_FINITE_STATS_HPP
#define QKD_FINITE_STATS_HPP

#include <vector>

#include "qkd/mu_optimizer.hpp"

namespace qkd {

/// Finite pulse budget and the number of standard deviations used for the
/// confidence interval on every measured rate.
struct FluctuationParams {
  double n_pulses = 6e9;
  double u_alpha = 10.0;
  std::vector<std::pair<double, double>> allocation;  // (intensity, pulse fraction)

  double fraction_for(double intensity) const;  // throws if absent or zero
};

struct Bound {
  double lower = 0.0;
  double upper = 0.0;
};

/// Confidence intervals x -+ u_alpha sqrt(x / n) on each group's gain and
/// error-count rate E*Q, clamped to [0,1].
struct BoundedStatistics {
  double mu = 0.0;
  std::vector<Bound> gain;
  std::vector<Bound> error_gain;
};

BoundedStatistics fluctuate(const ObservedStatistics& obs,
                            const FluctuationParams& fl, double intensity);

/// Worst-case propagation of the confidence intervals through one protocol's
/// estimator and the GLLP rate. Infinite decoy keeps its exact Y_1/e_1 and
/// only pays fluctuations on the measured error-correction term; weak decoy
/// splits the budget between the signal and decoy intensities and scales the
/// key by the signal fraction.
KeyRateReport rate_with_fluctuations(Protocol p, double mu, double eta_a,
                                     const ChannelParams& ch,
                                     const ProtocolParams& params,
                                     const FluctuationParams& fl,
                                     const EvalOptions& opt = {});

struct FluctuationOptimum {
  double mu_star = 0.0;
  double nu_star = 0.0;
  double signal_fraction = 1.0;
  double rate = 0.0;
};

/// Optimal source settings under fluctuations. For the weak-decoy protocol
/// the decoy intensity and the pulse split are optimized jointly with mu
/// (coarse grid, then coordinate descent) unless the options pin them.
FluctuationOptimum optimize_with_fluctuations(Protocol p, double eta_a,
                                              const ChannelParams& ch,
                                              const ProtocolParams& params,
                                              const FluctuationParams& fl,
                                              MuInterval interval,
                                              const EvalOptions& opt = {});

}  // namespace qkd

#endif
