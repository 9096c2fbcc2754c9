#include "qkd/finite_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

double FluctuationParams::fraction_for(double intensity) const {
  for (const auto& [mu, frac] : allocation) {
    if (std::fabs(mu - intensity) <= 1e-12 * std::max(1.0, std::fabs(mu))) {
      if (frac <= 0.0) {
        throw std::invalid_argument("FluctuationParams: zero pulse allocation");
      }
      return frac;
    }
  }
  throw std::invalid_argument("FluctuationParams: intensity not in the allocation");
}

BoundedStatistics fluctuate(const ObservedStatistics& obs,
                            const FluctuationParams& fl, double intensity) {
  if (fl.n_pulses <= 0.0) throw std::invalid_argument("fluctuate: n_pulses <= 0");
  if (fl.u_alpha < 0.0) throw std::invalid_argument("fluctuate: u_alpha < 0");
  double n = fl.n_pulses * fl.fraction_for(intensity);
  BoundedStatistics out;
  out.mu = obs.mu;
  int groups = obs.resolution + 1;
  out.gain.resize(groups);
  out.error_gain.resize(groups);
  for (int j = 0; j < groups; ++j) {
    double q = obs.gain[j];
    double w = fl.u_alpha * std::sqrt(std::max(q, 0.0) / n);
    out.gain[j] = {std::clamp(q - w, 0.0, 1.0), std::clamp(q + w, 0.0, 1.0)};
    double eq = obs.error_gain(j);
    double we = fl.u_alpha * std::sqrt(std::max(eq, 0.0) / n);
    out.error_gain[j] = {std::clamp(eq - we, 0.0, 1.0), std::clamp(eq + we, 0.0, 1.0)};
  }
  return out;
}

namespace {

// Worst-case error-correction penalty f(E) Q H2(E) over the interval corner
// (Q upper, EQ upper); the penalty is increasing in both as long as E < 1/2,
// beyond which H2's maximum is charged.
double ec_penalty(double q_up, double eq_up, const EcModel& ec) {
  if (q_up <= 0.0) return 0.0;
  double e = std::min(eq_up / q_up, 1.0);
  if (e > 0.5) return ec(0.5) * q_up;
  return ec(e) * q_up * binary_entropy(e);
}

KeyRateReport rate_infinite_fl(double mu, double eta_a, const ChannelParams& ch,
                               const ProtocolParams& params,
                               const FluctuationParams& fl) {
  SourceParams src{mu};
  ObservedStatistics obs = closed_form_threshold(src, eta_a, ch);
  FluctuationParams whole = fl;
  whole.allocation = {{mu, 1.0}};
  BoundedStatistics bs = fluctuate(obs, whole, mu);
  TrueDecomposition truth = true_decomposition(src, eta_a, ch);

  KeyRateReport rep;
  rep.mu = mu;
  rep.protocol = "infinite";
  rep.y1_lower = truth.y1;
  rep.e1_upper = truth.e1;
  double pa = 1.0 - binary_entropy(std::min(truth.e1, 0.5));
  for (int j = 0; j < 2; ++j) {
    double raw = params.q * (-ec_penalty(bs.gain[j].upper, bs.error_gain[j].upper, params.ec) +
                             truth.single_gain[j] * pa + truth.vacuum_gain[j]);
    rep.group[j] = {raw, std::max(raw, 0.0)};
    rep.total += rep.group[j].clamped;
  }
  return rep;
}

KeyRateReport rate_ayki_fl(double mu, double eta_a, const ChannelParams& ch,
                           const ProtocolParams& params, const FluctuationParams& fl,
                           AykiMode mode) {
  SourceParams src{mu};
  ObservedStatistics obs = closed_form_threshold(src, eta_a, ch);
  FluctuationParams whole = fl;
  whole.allocation = {{mu, 1.0}};
  BoundedStatistics bs = fluctuate(obs, whole, mu);

  double onepmu2 = (1.0 + mu) * (1.0 + mu);
  double p1 = mu / onepmu2;
  double q00_hi = 2.0 * bs.error_gain[0].upper;

  auto rate_at = [&](double q00, bool credit) {
    // worst case: non-triggered gain low, triggered gain high
    double y1 = onepmu2 / mu *
                ((2.0 - eta_a) / (1.0 - eta_a) * (bs.gain[0].lower - q00) -
                 (1.0 - eta_a) / eta_a * bs.gain[1].upper);
    KeyRateReport rep;
    rep.mu = mu;
    rep.protocol = "ayki";
    double q10 = 0.0, q11 = 0.0, e1 = 1.0;
    if (y1 > 0.0) {
      y1 = std::min(y1, 1.0);
      q10 = p1 * (1.0 - eta_a) * y1;
      q11 = p1 * eta_a * y1;
      e1 = std::min(bs.error_gain[1].upper / q11, 1.0);
    } else {
      y1 = 0.0;
    }
    rep.y1_lower = y1;
    rep.e1_upper = e1;
    double pa = 1.0 - binary_entropy(std::min(e1, 0.5));
    double r0 = params.q * (-ec_penalty(bs.gain[0].upper, bs.error_gain[0].upper, params.ec) +
                            q10 * pa + (credit ? q00 : 0.0));
    double r1 = params.q * (-ec_penalty(bs.gain[1].upper, bs.error_gain[1].upper, params.ec) +
                            q11 * pa);
    rep.group[0] = {r0, std::max(r0, 0.0)};
    rep.group[1] = {r1, std::max(r1, 0.0)};
    rep.total = rep.group[0].clamped + rep.group[1].clamped;
    return rep;
  };

  if (mode == AykiMode::conservative) return rate_at(q00_hi, false);

  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0, hi = q00_hi;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = rate_at(c, true).total;
  double fd = rate_at(d, true).total;
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = rate_at(c, true).total;
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = rate_at(d, true).total;
    }
  }
  KeyRateReport best = rate_at(0.5 * (lo + hi), true);
  for (double q00 : {0.0, q00_hi}) {
    KeyRateReport cand = rate_at(q00, true);
    if (cand.total < best.total) best = cand;
  }
  return best;
}

KeyRateReport rate_weak_fl(double mu, double eta_a, const ChannelParams& ch,
                           const ProtocolParams& params, const FluctuationParams& fl,
                           const EvalOptions& opt) {
  double nu = opt.weak.nu;
  double frac = opt.weak.signal_fraction;
  if (!(nu > 0.0 && nu < mu)) {
    throw std::invalid_argument("rate_with_fluctuations: weak decoy requires 0 < nu < mu");
  }
  if (!(frac > 0.0 && frac < 1.0)) {
    throw std::invalid_argument("rate_with_fluctuations: signal fraction outside (0,1)");
  }
  ObservedStatistics obs_mu = closed_form_threshold(SourceParams{mu}, eta_a, ch);
  ObservedStatistics obs_nu = closed_form_threshold(SourceParams{nu}, eta_a, ch);
  FluctuationParams split = fl;
  split.allocation = {{mu, frac}, {nu, 1.0 - frac}};
  BoundedStatistics bmu = fluctuate(obs_mu, split, mu);
  BoundedStatistics bnu = fluctuate(obs_nu, split, nu);

  // worst case in the Y_1 bound: decoy gain low, signal gain high
  double y1 = ((mu / nu) * std::pow(1.0 + nu, 3) * bnu.gain[1].lower -
               (nu / mu) * std::pow(1.0 + mu, 3) * bmu.gain[1].upper) /
              (eta_a * (mu - nu));
  KeyRateReport rep;
  rep.mu = mu;
  rep.protocol = "weak";
  double q10 = 0.0, q11 = 0.0, e1 = 1.0;
  if (y1 > 0.0) {
    y1 = std::min(y1, 1.0);
    double p1 = mu / ((1.0 + mu) * (1.0 + mu));
    q10 = p1 * (1.0 - eta_a) * y1;
    q11 = p1 * eta_a * y1;
    e1 = std::min((1.0 + mu) * (1.0 + mu) / mu * bmu.error_gain[1].upper / (eta_a * y1),
                  (1.0 + nu) * (1.0 + nu) / nu * bnu.error_gain[1].upper / (eta_a * y1));
    e1 = std::min(e1, 1.0);
  } else {
    y1 = 0.0;
  }
  rep.y1_lower = y1;
  rep.e1_upper = e1;
  double pa = 1.0 - binary_entropy(std::min(e1, 0.5));
  // key from the signal pulses only, hence the fraction scaling
  double r1 = frac * params.q *
              (-ec_penalty(bmu.gain[1].upper, bmu.error_gain[1].upper, params.ec) + q11 * pa);
  double r0 = 0.0;
  if (opt.weak_groups == WeakGroups::both) {
    r0 = frac * params.q *
         (-ec_penalty(bmu.gain[0].upper, bmu.error_gain[0].upper, params.ec) + q10 * pa);
  }
  rep.group[0] = {r0, std::max(r0, 0.0)};
  rep.group[1] = {r1, std::max(r1, 0.0)};
  rep.total = rep.group[0].clamped + rep.group[1].clamped;
  return rep;
}

}  // namespace

KeyRateReport rate_with_fluctuations(Protocol p, double mu, double eta_a,
                                     const ChannelParams& ch,
                                     const ProtocolParams& params,
                                     const FluctuationParams& fl,
                                     const EvalOptions& opt) {
  switch (p) {
    case Protocol::infinite_decoy: return rate_infinite_fl(mu, eta_a, ch, params, fl);
    case Protocol::ayki: return rate_ayki_fl(mu, eta_a, ch, params, fl, opt.ayki_mode);
    case Protocol::weak_decoy: return rate_weak_fl(mu, eta_a, ch, params, fl, opt);
    default:
      throw std::invalid_argument(
          "rate_with_fluctuations: protocol must be infinite, weak or ayki");
  }
}

FluctuationOptimum optimize_with_fluctuations(Protocol p, double eta_a,
                                              const ChannelParams& ch,
                                              const ProtocolParams& params,
                                              const FluctuationParams& fl,
                                              MuInterval interval,
                                              const EvalOptions& opt) {
  FluctuationOptimum out;
  if (p != Protocol::weak_decoy) {
    OptimizationResult r = optimize_mu(
        [&](double mu) {
          return rate_with_fluctuations(p, mu, eta_a, ch, params, fl, opt).total;
        },
        interval, protocol_name(p));
    out.mu_star = r.mu_star;
    out.rate = r.rate_star;
    return out;
  }

  // weak decoy: nu and the pulse split ride along with mu
  std::vector<double> nu_ratios;
  std::vector<double> fractions;
  bool ratio_fixed = opt.weak_nu_ratio > 0.0;
  bool frac_fixed = opt.weak.signal_fraction > 0.0 && opt.weak.signal_fraction < 1.0;
  if (ratio_fixed) {
    nu_ratios = {opt.weak_nu_ratio};
  } else {
    nu_ratios = {0.01, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5};
  }
  if (frac_fixed) {
    fractions = {opt.weak.signal_fraction};
  } else {
    for (double f = 0.5; f < 0.96; f += 0.05) fractions.push_back(f);
  }

  auto best_mu_for = [&](double ratio, double frac, int grid) {
    EvalOptions o = opt;
    o.weak.signal_fraction = frac;
    auto rate_of = [&, ratio](double mu) {
      EvalOptions oo = o;
      oo.weak.nu = std::max(mu * ratio, 1e-9);
      return rate_with_fluctuations(p, mu, eta_a, ch, params, fl, oo).total;
    };
    return optimize_mu(rate_of, interval, "weak", grid);
  };

  double best_rate = -1.0;
  double best_ratio = nu_ratios.front(), best_frac = fractions.front();
  for (double ratio : nu_ratios) {
    for (double frac : fractions) {
      OptimizationResult r = best_mu_for(ratio, frac, 120);
      if (r.rate_star > best_rate) {
        best_rate = r.rate_star;
        best_ratio = ratio;
        best_frac = frac;
        out.mu_star = r.mu_star;
        out.rate = r.rate_star;
      }
    }
  }
  // one coordinate-descent pass around the best coarse cell
  if (!ratio_fixed || !frac_fixed) {
    for (int round = 0; round < 2; ++round) {
      if (!ratio_fixed) {
        for (double f : {0.7, 0.85, 1.2, 1.4}) {
          double ratio = std::clamp(best_ratio * f, 0.01, 0.5);
          OptimizationResult r = best_mu_for(ratio, best_frac, 120);
          if (r.rate_star > best_rate) {
            best_rate = r.rate_star;
            best_ratio = ratio;
            out.mu_star = r.mu_star;
            out.rate = r.rate_star;
          }
        }
      }
      if (!frac_fixed) {
        for (double df : {-0.025, 0.025}) {
          double frac = std::clamp(best_frac + df, 0.5, 0.95);
          OptimizationResult r = best_mu_for(best_ratio, frac, 120);
          if (r.rate_star > best_rate) {
            best_rate = r.rate_star;
            best_frac = frac;
            out.mu_star = r.mu_star;
            out.rate = r.rate_star;
          }
        }
      }
    }
  }
  out.nu_star = std::max(out.mu_star * best_ratio, 1e-9);
  out.signal_fraction = best_frac;
  return out;
}

}  // namespace qkd
