#ifndef QKD_KEYRATE_HPP
#define QKD_KEYRATE_HPP

#include <string>

#include "qkd/estimators.hpp"
#include "qkd/photonics.hpp"

namespace qkd {

/// GLLP post-processing parameters: basis reconciliation factor q and the
/// error-correction efficiency model.
struct ProtocolParams {
  double q = 0.5;
  EcModel ec = EcModel::constant(1.22);
};

struct GroupRate {
  double raw = 0.0;      // possibly negative
  double clamped = 0.0;  // max(raw, 0); forced 0 for vacuous bounds
};

struct KeyRateReport {
  GroupRate group[2];
  double total = 0.0;  // bits per pump pulse
  double mu = 0.0;
  std::string protocol;
  double y1_lower = 0.0;
  double e1_upper = 0.0;
};

/// Per-group GLLP rate:
///   R_j >= q { -f(E_j) Q_j H2(E_j) + Q1_j [1 - H2(e_1)] + Q0_j }
/// H2 of the privacy-amplification term is evaluated at min(e_1, 1/2).
GroupRate rate_group(double gain, double qber, double vacuum_gain,
                     double single_gain, double e1, const ProtocolParams& params);

/// How the AYKI free parameter Q_{0,0} is handled:
///   minimized    - golden-section minimization of the total rate over
///                  [0, 2 E_{mu,0} Q_{mu,0}], crediting the hypothesised
///                  vacuum gain in the non-triggered group
///   conservative - worst-case endpoint, no vacuum credit
enum class AykiMode { minimized, conservative };

/// Total rate R = sum_j max(R_j, 0). For AYKI bounds the free Q_{0,0} is
/// resolved per `mode` before reporting.
KeyRateReport rate_total(const SinglePhotonBounds& bounds,
                         const ObservedStatistics& obs, const ProtocolParams& params,
                         AykiMode mode = AykiMode::minimized);

/// Single-photon-only rate for the perfect photon-number-resolving setup:
///   R >= q Q_1 [1 - f(e_1) H2(e_1) - H2(e_1)], clamped at 0.
double rate_pnr(double q1, double e1, const ProtocolParams& params);

}  // namespace qkd

#endif
