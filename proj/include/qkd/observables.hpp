#ifndef QKD_OBSERVABLES_HPP
#define QKD_OBSERVABLES_HPP

#include <vector>

#include "qkd/system_model.hpp"

namespace qkd {

/// The statistics Alice and Bob can measure, grouped by Alice's trigger
/// outcome j = 0..N: gain Q_{mu,j} (per pump pulse), QBER E_{mu,j} and
/// trigger probability P_Aj.
struct ObservedStatistics {
  double mu = 0.0;
  int resolution = 0;
  std::vector<double> gain;          // Q_{mu,j}
  std::vector<double> qber;          // E_{mu,j}
  std::vector<double> trigger_prob;  // P_Aj

  double error_gain(int j) const { return gain[j] * qber[j]; }  // E_{mu,j} Q_{mu,j}
};

/// Eve-free truth for the vacuum and single-photon contributions; the
/// single-photon error e_1 and yield Y_1 are shared across groups.
struct TrueDecomposition {
  double vacuum_gain[2] = {0.0, 0.0};  // Q_{0,j}
  double single_gain[2] = {0.0, 0.0};  // Q_{1,j}
  double y1 = 0.0;
  double e1 = 0.0;
};

/// Tail bound for the truncated photon-number series: the contribution of
/// terms above kPhotonTruncation is at most thermal_tail(mu, K+1) because
/// every response entry and yield is <= 1.
double series_tail_bound(double mu);

/// P_Aj = sum_i P(i) eta_{j|i}.
double trigger_prob(const SourceParams& src, const DetectorResponse& det, int j);

/// Q_{mu,j} = sum_i P(i) eta_{j|i} Y_i.
double gain_j(const SourceParams& src, const DetectorResponse& det,
              const ChannelParams& ch, int j);

/// E_{mu,j} = sum_i P(i) eta_{j|i} Y_i e_i / Q_{mu,j}. Throws on zero gain.
double qber_j(const SourceParams& src, const DetectorResponse& det,
              const ChannelParams& ch, int j);

/// Full per-group statistics through the truncated series (any detector).
ObservedStatistics observe(const SourceParams& src, const DetectorResponse& det,
                           const ChannelParams& ch);

/// Closed forms for a threshold trigger detector (approximate response,
/// Alice-side background dropped):
///   Q_{mu,0} = 1/(1+eta_a mu) - (1-Y0B)/(1+(eta_a+eta-eta_a eta)mu)
///   Q_{mu,1} = 1 - 1/(1+eta_a mu) - (1-Y0B)/(1+eta mu)
///                + (1-Y0B)/(1+(eta_a+eta-eta_a eta)mu)
///   E_{mu,j} Q_{mu,j} = e_d Q_{mu,j} + (e_0-e_d) Y0B {1, eta_a mu}/(1+eta_a mu)
/// evaluated in a cancellation-free rearrangement.
ObservedStatistics closed_form_threshold(const SourceParams& src, double eta_a,
                                         const ChannelParams& ch);

/// Eve-free single-photon/vacuum truth for the threshold detector:
///   Q_{1,0} = mu(1-eta_a) Y_1/(1+mu)^2,  Q_{1,1} = mu eta_a Y_1/(1+mu)^2,
///   Q_{0,0} = P(0) Y0B, Q_{0,1} = 0 (vacuum never triggers).
TrueDecomposition true_decomposition(const SourceParams& src, double eta_a,
                                     const ChannelParams& ch);

/// Perfect photon-number-resolving detector: Q_{mu,i} = P(i) Y_i,
/// E_{mu,i} = e_i.
ObservedStatistics pnr_observables(const SourceParams& src, const ChannelParams& ch,
                                   int k_max);

}  // namespace qkd

#endif
