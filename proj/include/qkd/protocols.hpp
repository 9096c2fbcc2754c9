#ifndef QKD_PROTOCOLS_HPP
#define QKD_PROTOCOLS_HPP

#include <string>

#include "qkd/keyrate.hpp"

namespace qkd {

enum class Protocol { nondecoy, infinite_decoy, weak_decoy, ayki, pnr };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

/// Which trigger groups of the signal intensity generate key under the
/// weak-decoy protocol. Both groups carry single-photon credit through the
/// shared Y_1 bound; triggered_only discards the non-triggered group.
enum class WeakGroups { both, triggered_only };

struct EvalOptions {
  AykiMode ayki_mode = AykiMode::minimized;
  WeakGroups weak_groups = WeakGroups::both;
  WeakDecoyConfig weak{};     // decoy intensity for Protocol::weak_decoy
  double weak_nu_ratio = 0.0; // pins nu = ratio * mu when optimizing (0 = free)
};

/// Eve-free forward model + estimator + GLLP rate for one source intensity.
KeyRateReport asymptotic_rate(Protocol p, double mu, double eta_a,
                              const ChannelParams& ch, const ProtocolParams& params,
                              const EvalOptions& opt = {});

/// The observables the CLI reports alongside a rate (threshold closed forms,
/// or the j = 0,1 groups of the perfect-PNR detector).
ObservedStatistics protocol_observables(Protocol p, double mu, double eta_a,
                                        const ChannelParams& ch);

}  // namespace qkd

#endif
