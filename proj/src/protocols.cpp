#include "qkd/protocols.hpp"

#include <stdexcept>

namespace qkd {

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::nondecoy: return "nondecoy";
    case Protocol::infinite_decoy: return "infinite";
    case Protocol::weak_decoy: return "weak";
    case Protocol::ayki: return "ayki";
    case Protocol::pnr: return "pnr";
  }
  throw std::logic_error("protocol_name: unknown protocol");
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "nondecoy") return Protocol::nondecoy;
  if (name == "infinite") return Protocol::infinite_decoy;
  if (name == "weak") return Protocol::weak_decoy;
  if (name == "ayki") return Protocol::ayki;
  if (name == "pnr") return Protocol::pnr;
  throw std::invalid_argument("unknown protocol name: " + name);
}

KeyRateReport asymptotic_rate(Protocol p, double mu, double eta_a,
                              const ChannelParams& ch, const ProtocolParams& params,
                              const EvalOptions& opt) {
  SourceParams src{mu};
  switch (p) {
    case Protocol::nondecoy: {
      ObservedStatistics obs = closed_form_threshold(src, eta_a, ch);
      return rate_total(estimate_nondecoy(obs, mu, eta_a), obs, params);
    }
    case Protocol::infinite_decoy: {
      ObservedStatistics obs = closed_form_threshold(src, eta_a, ch);
      TrueDecomposition truth = true_decomposition(src, eta_a, ch);
      return rate_total(estimate_infinite(truth, mu, eta_a), obs, params);
    }
    case Protocol::ayki: {
      ObservedStatistics obs = closed_form_threshold(src, eta_a, ch);
      SinglePhotonBounds seed = estimate_ayki(obs, mu, eta_a, 0.0);
      return rate_total(seed, obs, params, opt.ayki_mode);
    }
    case Protocol::weak_decoy: {
      double nu = opt.weak.nu > 0.0 ? opt.weak.nu : mu / 10.0;
      ObservedStatistics obs_mu = closed_form_threshold(src, eta_a, ch);
      ObservedStatistics obs_nu = closed_form_threshold(SourceParams{nu}, eta_a, ch);
      SinglePhotonBounds b = estimate_weak_decoy(obs_mu, obs_nu, mu, nu, eta_a);
      if (opt.weak_groups == WeakGroups::triggered_only) {
        b.q1_lower[0] = 0.0;
        b.vacuous[0] = true;
      }
      return rate_total(b, obs_mu, params);
    }
    case Protocol::pnr: {
      TrueDecomposition truth = true_decomposition(src, eta_a, ch);
      double q1 = thermal_pn(mu, 1) * truth.y1;
      KeyRateReport rep;
      rep.mu = mu;
      rep.protocol = "pnr";
      rep.y1_lower = truth.y1;
      rep.e1_upper = truth.e1;
      rep.group[1].raw = rate_pnr(q1, truth.e1, params);
      rep.group[1].clamped = rep.group[1].raw;
      rep.total = rep.group[1].clamped;
      return rep;
    }
  }
  throw std::logic_error("asymptotic_rate: unknown protocol");
}

ObservedStatistics protocol_observables(Protocol p, double mu, double eta_a,
                                        const ChannelParams& ch) {
  SourceParams src{mu};
  if (p == Protocol::pnr) {
    ObservedStatistics full = pnr_observables(src, ch, 2);
    ObservedStatistics obs;
    obs.mu = mu;
    obs.resolution = 1;
    obs.gain = {full.gain[0], full.gain[1]};
    obs.qber = {full.qber[0], full.qber[1]};
    obs.trigger_prob = {full.trigger_prob[0], full.trigger_prob[1]};
    return obs;
  }
  return closed_form_threshold(src, eta_a, ch);
}

}  // namespace qkd
