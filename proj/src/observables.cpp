#include "qkd/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "qkd/photonics.hpp"

namespace qkd {

double series_tail_bound(double mu) { return thermal_tail(mu, kPhotonTruncation + 1); }

namespace {

void check_outcome(const DetectorResponse& det, int j) {
  if (j < 0 || j > det.resolution()) {
    throw std::domain_error("observables: trigger outcome j above detector resolution");
  }
}

}  // namespace

double trigger_prob(const SourceParams& src, const DetectorResponse& det, int j) {
  check_outcome(det, j);
  double sum = 0.0;
  for (int i = 0; i <= det.truncation(); ++i) {
    sum += thermal_pn(src.mu, i) * det.response(j, i);
  }
  return sum;
}

double gain_j(const SourceParams& src, const DetectorResponse& det,
              const ChannelParams& ch, int j) {
  check_outcome(det, j);
  double sum = 0.0;
  for (int i = 0; i <= det.truncation(); ++i) {
    sum += thermal_pn(src.mu, i) * det.response(j, i) * yield_i(ch, i);
  }
  return sum;
}

double qber_j(const SourceParams& src, const DetectorResponse& det,
              const ChannelParams& ch, int j) {
  check_outcome(det, j);
  double q = 0.0, eq = 0.0;
  for (int i = 0; i <= det.truncation(); ++i) {
    double y = yield_i(ch, i);
    if (y <= 0.0) continue;
    double term = thermal_pn(src.mu, i) * det.response(j, i) * y;
    q += term;
    eq += term * error_i(ch, i);
  }
  if (q <= 0.0) throw std::domain_error("qber_j: zero gain, QBER undefined");
  return eq / q;
}

ObservedStatistics observe(const SourceParams& src, const DetectorResponse& det,
                           const ChannelParams& ch) {
  ObservedStatistics obs;
  obs.mu = src.mu;
  obs.resolution = det.resolution();
  int n = det.resolution() + 1;
  obs.gain.assign(n, 0.0);
  obs.qber.assign(n, 0.0);
  obs.trigger_prob.assign(n, 0.0);
  std::vector<double> eq(n, 0.0);
  for (int i = 0; i <= det.truncation(); ++i) {
    double p = thermal_pn(src.mu, i);
    double y = yield_i(ch, i);
    double e = y > 0.0 ? error_i(ch, i) : 0.0;
    for (int j = 0; j < n; ++j) {
      double r = det.response(j, i);
      obs.trigger_prob[j] += p * r;
      obs.gain[j] += p * r * y;
      eq[j] += p * r * y * e;
    }
  }
  for (int j = 0; j < n; ++j) {
    obs.qber[j] = obs.gain[j] > 0.0 ? eq[j] / obs.gain[j] : 0.0;
  }
  return obs;
}

ObservedStatistics closed_form_threshold(const SourceParams& src, double eta_a,
                                         const ChannelParams& ch) {
  double mu = src.mu;
  double eta = ch.eta;
  double A = 1.0 + eta_a * mu;
  double B = 1.0 + (eta_a + eta - eta_a * eta) * mu;
  double C = 1.0 + eta * mu;
  // Q_{mu,0} = 1/A - (1-Y0B)/B = (eta mu (1-eta_a) + Y0B A) / (A B)
  double q0 = (eta * mu * (1.0 - eta_a) + ch.y0b * A) / (A * B);
  // Q_{mu,1} = 1 - 1/A - (1-Y0B)/C + (1-Y0B)/B
  //          = eta_a mu (eta (1 + 2mu + mu^2(eta_a+eta-eta_a eta)) + Y0B(1-eta)A)
  //            / (A B C)
  double q1 = eta_a * mu *
              (eta * (1.0 + 2.0 * mu + mu * mu * (eta_a + eta - eta_a * eta)) +
               ch.y0b * (1.0 - eta) * A) /
              (A * B * C);
  double eq0 = ch.e_d * q0 + (ch.e_0 - ch.e_d) * ch.y0b / A;
  double eq1 = ch.e_d * q1 + (ch.e_0 - ch.e_d) * ch.y0b * eta_a * mu / A;

  ObservedStatistics obs;
  obs.mu = mu;
  obs.resolution = 1;
  obs.gain = {q0, q1};
  obs.qber = {q0 > 0.0 ? eq0 / q0 : 0.0, q1 > 0.0 ? eq1 / q1 : 0.0};
  obs.trigger_prob = {1.0 / A, eta_a * mu / A};
  return obs;
}

TrueDecomposition true_decomposition(const SourceParams& src, double eta_a,
                                     const ChannelParams& ch) {
  double mu = src.mu;
  double p1 = mu / ((1.0 + mu) * (1.0 + mu));
  TrueDecomposition t;
  t.y1 = yield_i(ch, 1);
  t.e1 = error_i(ch, 1);
  t.single_gain[0] = p1 * (1.0 - eta_a) * t.y1;
  t.single_gain[1] = p1 * eta_a * t.y1;
  t.vacuum_gain[0] = thermal_pn(mu, 0) * ch.y0b;
  t.vacuum_gain[1] = 0.0;
  return t;
}

ObservedStatistics pnr_observables(const SourceParams& src, const ChannelParams& ch,
                                   int k_max) {
  if (k_max < 1) throw std::domain_error("pnr_observables: k_max < 1");
  if (k_max > kPhotonTruncation) {
    throw std::domain_error("pnr_observables: k_max above the photon truncation");
  }
  ObservedStatistics obs;
  obs.mu = src.mu;
  obs.resolution = k_max;
  obs.gain.assign(k_max + 1, 0.0);
  obs.qber.assign(k_max + 1, 0.0);
  obs.trigger_prob.assign(k_max + 1, 0.0);
  for (int i = 0; i < k_max; ++i) {
    double y = yield_i(ch, i);
    obs.trigger_prob[i] = thermal_pn(src.mu, i);
    obs.gain[i] = thermal_pn(src.mu, i) * y;
    obs.qber[i] = y > 0.0 ? error_i(ch, i) : 0.0;
  }
  // saturated top group: i >= k_max all report k_max
  double q = 0.0, eq = 0.0, pa = thermal_tail(src.mu, k_max);
  for (int i = k_max; i <= kPhotonTruncation; ++i) {
    double y = yield_i(ch, i);
    if (y <= 0.0) continue;
    double term = thermal_pn(src.mu, i) * y;
    q += term;
    eq += term * error_i(ch, i);
  }
  obs.trigger_prob[k_max] = pa;
  obs.gain[k_max] = q;
  obs.qber[k_max] = q > 0.0 ? eq / q : 0.0;
  return obs;
}

}  // namespace qkd
