#ifndef QKD_ESTIMATORS_HPP
#define QKD_ESTIMATORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qkd/observables.hpp"

namespace qkd {

/// Bounds on the vacuum/single-photon contributions feeding the key-rate
/// formula, produced by one of the five estimation protocols. Lower bounds
/// floor at zero; a floored group is flagged vacuous and earns no key.
struct SinglePhotonBounds {
  double q0_lower[2] = {0.0, 0.0};
  double q1_lower[2] = {0.0, 0.0};
  double e1_upper[2] = {1.0, 1.0};  // per-group for non-decoy, shared otherwise
  double y1_lower = 0.0;
  bool vacuous[2] = {false, false};
  std::string method;

  // AYKI free parameter Q_{0,0} and the inputs needed to re-evaluate the
  // bound while minimizing the rate over it.
  double q00 = 0.0;
  double q00_max = 0.0;
  double mu = 0.0;
  double eta_a = 0.0;
};

struct WeakDecoyConfig {
  double nu = 0.0;
  double signal_fraction = 1.0;
};

/// Everything blamed on single photons:
///   Q_{1,0} >= Q_{mu,0} - (1-eta_a)^2 mu^2 / ((1+eta_a mu)(1+mu)^2)
///   Q_{1,1} >= Q_{mu,1} - eta_a(2-eta_a+mu) mu^2 / ((1+eta_a mu)(1+mu)^2)
///   e_{1,j} <= E_{mu,j} Q_{mu,j} / Q_{1,j}
/// with the vacuum contribution taken as zero.
SinglePhotonBounds estimate_nondecoy(const ObservedStatistics& obs, double mu,
                                     double eta_a);

/// Theoretical ceiling: the exact Eve-free decomposition (what an infinite
/// family of decoy intensities would recover).
SinglePhotonBounds estimate_infinite(const TrueDecomposition& truth, double mu,
                                     double eta_a);

/// One weak decoy intensity nu < mu, triggered statistics only:
///   Y_1 >= [ (mu/nu)(1+nu)^3 Q_{nu,1} - (nu/mu)(1+mu)^3 Q_{mu,1} ]
///          / (eta_a (mu-nu))
///   e_1 <= min over m in {mu,nu} of (1+m)^2 E_{m,1}Q_{m,1} / (m eta_a Y_1)
SinglePhotonBounds estimate_weak_decoy(const ObservedStatistics& obs_mu,
                                       const ObservedStatistics& obs_nu, double mu,
                                       double nu, double eta_a);

/// Passive decoy from triggered/non-triggered statistics alone, for a given
/// hypothesis q00 = Q_{0,0} in [0, 2 E_{mu,0} Q_{mu,0}]:
///   Y_1 >= (1+mu)^2/mu [ (2-eta_a)/(1-eta_a) (Q_{mu,0}-q00)
///                        - (1-eta_a)/eta_a Q_{mu,1} ]
///   e_1 <= E_{mu,1} Q_{mu,1} / Q_{1,1}
SinglePhotonBounds estimate_ayki(const ObservedStatistics& obs, double mu,
                                 double eta_a, double q00);

double ayki_q00_max(const ObservedStatistics& obs);

/// Measurement intervals for the linear-feasibility estimator (finite
/// statistics); absent entries mean exact equality.
struct ObservationSlack {
  std::vector<double> gain_lower, gain_upper;
  std::vector<double> error_gain_lower, error_gain_upper;
};

struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// Generalized passive decoy: treat every trigger outcome group as one decoy
/// setting and solve two linear programs over {Y_i, e_i Y_i : i <= truncation}
/// constrained by the per-group gain/error equations (photon numbers above
/// the truncation enter through their exact tail caps), 0 <= Y_i <= 1,
/// 0 <= e_i Y_i <= Y_i/2 and e_0 = 1/2. Returns the minimized Y_1 and the
/// upper bound e_1 <= max(e_1 Y_1) / min(Y_1).
/// Throws infeasible_error naming the violated constraint when the
/// observations admit no photon-number decomposition.
SinglePhotonBounds estimate_passive_general(const ObservedStatistics& obs,
                                            const DetectorResponse& det,
                                            int truncation,
                                            const ObservationSlack* slack = nullptr);

}  // namespace qkd

#endif
