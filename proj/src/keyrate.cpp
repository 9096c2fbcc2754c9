#include "qkd/keyrate.hpp"

#include <algorithm>
#include <cmath>

namespace qkd {

GroupRate rate_group(double gain, double qber, double vacuum_gain,
                     double single_gain, double e1, const ProtocolParams& params) {
  double pa = binary_entropy(std::min(e1, 0.5));
  double ec = gain > 0.0 ? params.ec(qber) * gain * binary_entropy(qber) : 0.0;
  GroupRate r;
  r.raw = params.q * (-ec + single_gain * (1.0 - pa) + vacuum_gain);
  r.clamped = std::max(r.raw, 0.0);
  return r;
}

namespace {

KeyRateReport assemble(const SinglePhotonBounds& b, const ObservedStatistics& obs,
                       const ProtocolParams& params) {
  KeyRateReport rep;
  rep.mu = obs.mu;
  rep.protocol = b.method;
  rep.y1_lower = b.y1_lower;
  rep.e1_upper = std::max(b.e1_upper[0], b.e1_upper[1]);
  rep.total = 0.0;
  for (int j = 0; j < 2 && j <= obs.resolution; ++j) {
    rep.group[j] = rate_group(obs.gain[j], obs.qber[j], b.q0_lower[j], b.q1_lower[j],
                              b.e1_upper[j], params);
    if (b.vacuous[j] && b.q0_lower[j] <= 0.0) rep.group[j].clamped = 0.0;
    rep.total += rep.group[j].clamped;
  }
  return rep;
}

}  // namespace

KeyRateReport rate_total(const SinglePhotonBounds& bounds,
                         const ObservedStatistics& obs, const ProtocolParams& params,
                         AykiMode mode) {
  if (bounds.method != "ayki") return assemble(bounds, obs, params);

  double hi = bounds.q00_max;
  if (mode == AykiMode::conservative) {
    SinglePhotonBounds worst = estimate_ayki(obs, bounds.mu, bounds.eta_a, hi);
    worst.q0_lower[0] = 0.0;  // no credit for the unknown vacuum contribution
    return assemble(worst, obs, params);
  }

  auto rate_at = [&](double q00) {
    return assemble(estimate_ayki(obs, bounds.mu, bounds.eta_a, q00), obs, params);
  };
  // golden-section minimization of the total rate over q00 in [0, hi]
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0;
  double c = hi - kInvPhi * hi;
  double d = kInvPhi * hi;
  double fc = rate_at(c).total;
  double fd = rate_at(d).total;
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = rate_at(c).total;
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = rate_at(d).total;
    }
  }
  // compare against the interval ends; ties keep the interior minimizer
  KeyRateReport best = rate_at(0.5 * (lo + hi));
  for (double q00 : {0.0, bounds.q00_max}) {
    KeyRateReport cand = rate_at(q00);
    if (cand.total < best.total) best = cand;
  }
  return best;
}

double rate_pnr(double q1, double e1, const ProtocolParams& params) {
  double h = binary_entropy(std::min(e1, 1.0));
  double r = params.q * q1 * (1.0 - params.ec(std::min(e1, 1.0)) * h - h);
  return std::max(r, 0.0);
}

}  // namespace qkd
