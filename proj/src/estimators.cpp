#include "qkd/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "qkd/photonics.hpp"
#include "qkd/simplex.hpp"

namespace qkd {

namespace {

// Floors a lower bound at zero; a floored group is vacuous (e1 -> 1).
void clamp_group(SinglePhotonBounds& b, int j) {
  if (b.q1_lower[j] <= 0.0) {
    b.q1_lower[j] = 0.0;
    b.e1_upper[j] = 1.0;
    b.vacuous[j] = true;
  }
}

}  // namespace

SinglePhotonBounds estimate_nondecoy(const ObservedStatistics& obs, double mu,
                                     double eta_a) {
  if (obs.resolution != 1) {
    throw std::invalid_argument("estimate_nondecoy: needs threshold-detector groups");
  }
  double den = (1.0 + eta_a * mu) * (1.0 + mu) * (1.0 + mu);
  SinglePhotonBounds b;
  b.method = "nondecoy";
  b.mu = mu;
  b.eta_a = eta_a;
  b.q1_lower[0] = obs.gain[0] - (1.0 - eta_a) * (1.0 - eta_a) * mu * mu / den;
  b.q1_lower[1] = obs.gain[1] - eta_a * (2.0 - eta_a + mu) * mu * mu / den;
  for (int j = 0; j < 2; ++j) {
    clamp_group(b, j);
    if (!b.vacuous[j]) {
      b.e1_upper[j] = std::min(obs.error_gain(j) / b.q1_lower[j], 1.0);
    }
  }
  // single-photon yield implied by the triggered-group bound
  double p1 = mu / ((1.0 + mu) * (1.0 + mu));
  b.y1_lower =
      eta_a > 0.0 && p1 > 0.0 ? std::min(b.q1_lower[1] / (p1 * eta_a), 1.0) : 0.0;
  return b;
}

SinglePhotonBounds estimate_infinite(const TrueDecomposition& truth, double mu,
                                     double eta_a) {
  SinglePhotonBounds b;
  b.method = "infinite";
  b.mu = mu;
  b.eta_a = eta_a;
  b.y1_lower = truth.y1;
  for (int j = 0; j < 2; ++j) {
    b.q0_lower[j] = truth.vacuum_gain[j];
    b.q1_lower[j] = truth.single_gain[j];
    b.e1_upper[j] = truth.e1;
  }
  return b;
}

SinglePhotonBounds estimate_weak_decoy(const ObservedStatistics& obs_mu,
                                       const ObservedStatistics& obs_nu, double mu,
                                       double nu, double eta_a) {
  if (!(nu > 0.0 && nu < mu)) {
    throw std::invalid_argument("estimate_weak_decoy: requires 0 < nu < mu");
  }
  if (!(eta_a > 0.0)) {
    throw std::domain_error("estimate_weak_decoy: eta_a must be positive");
  }
  if (obs_mu.resolution < 1 || obs_nu.resolution < 1) {
    throw std::invalid_argument("estimate_weak_decoy: triggered group missing");
  }
  double onepmu3 = std::pow(1.0 + mu, 3);
  double onepnu3 = std::pow(1.0 + nu, 3);
  double y1 = ((mu / nu) * onepnu3 * obs_nu.gain[1] -
               (nu / mu) * onepmu3 * obs_mu.gain[1]) /
              (eta_a * (mu - nu));
  SinglePhotonBounds b;
  b.method = "weak";
  b.mu = mu;
  b.eta_a = eta_a;
  if (y1 <= 0.0) {
    b.vacuous[0] = b.vacuous[1] = true;
    return b;
  }
  y1 = std::min(y1, 1.0);
  b.y1_lower = y1;
  double e1 = std::min(
      (1.0 + mu) * (1.0 + mu) / mu * obs_mu.error_gain(1) / (eta_a * y1),
      (1.0 + nu) * (1.0 + nu) / nu * obs_nu.error_gain(1) / (eta_a * y1));
  e1 = std::min(e1, 1.0);
  double p1 = mu / ((1.0 + mu) * (1.0 + mu));
  b.q1_lower[0] = p1 * (1.0 - eta_a) * y1;
  b.q1_lower[1] = p1 * eta_a * y1;
  b.e1_upper[0] = b.e1_upper[1] = e1;
  clamp_group(b, 0);
  clamp_group(b, 1);
  return b;
}

double ayki_q00_max(const ObservedStatistics& obs) {
  // 0 <= Q_{0,0} e_0 <= E_{mu,0} Q_{mu,0} with e_0 = 1/2
  return 2.0 * obs.error_gain(0);
}

SinglePhotonBounds estimate_ayki(const ObservedStatistics& obs, double mu,
                                 double eta_a, double q00) {
  if (obs.resolution != 1) {
    throw std::invalid_argument("estimate_ayki: needs threshold-detector groups");
  }
  if (!(eta_a > 0.0 && eta_a < 1.0)) {
    throw std::domain_error("estimate_ayki: eta_a must lie strictly inside (0,1)");
  }
  if (!(mu > 0.0)) throw std::domain_error("estimate_ayki: mu must be positive");
  double q00_hi = ayki_q00_max(obs);
  if (q00 < 0.0 || q00 > q00_hi * (1.0 + 1e-12) + 1e-300) {
    throw std::domain_error("estimate_ayki: q00 outside [0, 2 E0 Q0]");
  }
  double onepmu2 = (1.0 + mu) * (1.0 + mu);
  double y1 = onepmu2 / mu *
              ((2.0 - eta_a) / (1.0 - eta_a) * (obs.gain[0] - q00) -
               (1.0 - eta_a) / eta_a * obs.gain[1]);
  SinglePhotonBounds b;
  b.method = "ayki";
  b.mu = mu;
  b.eta_a = eta_a;
  b.q00 = q00;
  b.q00_max = q00_hi;
  b.q0_lower[0] = q00;
  if (y1 <= 0.0) {
    b.vacuous[0] = b.vacuous[1] = true;
    return b;
  }
  y1 = std::min(y1, 1.0);
  b.y1_lower = y1;
  double p1 = mu / onepmu2;
  b.q1_lower[0] = p1 * (1.0 - eta_a) * y1;
  b.q1_lower[1] = p1 * eta_a * y1;
  double e1 = std::min(obs.error_gain(1) / b.q1_lower[1], 1.0);
  b.e1_upper[0] = b.e1_upper[1] = e1;
  return b;
}

SinglePhotonBounds estimate_passive_general(const ObservedStatistics& obs,
                                            const DetectorResponse& det,
                                            int truncation,
                                            const ObservationSlack* slack) {
  const int N = det.resolution();
  if (obs.resolution != N) {
    throw std::invalid_argument("estimate_passive_general: detector/statistics mismatch");
  }
  if (truncation < N + 2) {
    throw std::domain_error("estimate_passive_general: truncation must be >= N+2");
  }
  if (slack && (slack->gain_lower.size() != static_cast<std::size_t>(N + 1) ||
                slack->gain_upper.size() != static_cast<std::size_t>(N + 1) ||
                slack->error_gain_lower.size() != static_cast<std::size_t>(N + 1) ||
                slack->error_gain_upper.size() != static_cast<std::size_t>(N + 1))) {
    throw std::invalid_argument("estimate_passive_general: slack size mismatch");
  }
  const int T = truncation;
  const double mu = obs.mu;

  // variables: Y_0..Y_T, w_0..w_T (w_i = e_i Y_i), tail terms tq_j, tw_j
  const int nY = T + 1;
  const int n_groups = N + 1;
  const int nv = 2 * nY + 2 * n_groups;
  const int iY = 0, iW = nY, iTQ = 2 * nY, iTW = 2 * nY + n_groups;

  std::vector<double> pn(nY);
  for (int i = 0; i <= T; ++i) pn[i] = thermal_pn(mu, i);

  // exact caps on the truncated tail of each group equation
  std::vector<double> tail(n_groups, 0.0);
  for (int j = 0; j <= N; ++j) {
    double s = 0.0;
    for (int i = T + 1; i <= det.truncation(); ++i) {
      s += thermal_pn(mu, i) * det.response(j, i);
    }
    tail[j] = s + thermal_tail(mu, det.truncation() + 1);
  }

  std::vector<lp::Constraint> rows;
  auto add_measurement = [&](int offset, int j, double central, double lo, double hi,
                             const std::string& what) {
    lp::Constraint c;
    c.a.assign(nv, 0.0);
    for (int i = 0; i <= T; ++i) c.a[offset + i] = pn[i] * det.response(j, i);
    c.a[(offset == iY ? iTQ : iTW) + j] = 1.0;
    if (lo == hi) {
      c.rel = '=';
      c.b = central;
      c.name = what + " equation, group " + std::to_string(j);
      rows.push_back(c);
    } else {
      lp::Constraint up = c;
      up.rel = '<';
      up.b = hi;
      up.name = what + " upper interval, group " + std::to_string(j);
      rows.push_back(up);
      lp::Constraint down = c;
      for (double& v : down.a) v = -v;
      down.rel = '<';
      down.b = -lo;
      down.name = what + " lower interval, group " + std::to_string(j);
      rows.push_back(down);
    }
  };

  for (int j = 0; j <= N; ++j) {
    double q = obs.gain[j];
    double lo = slack ? slack->gain_lower[j] : q;
    double hi = slack ? slack->gain_upper[j] : q;
    add_measurement(iY, j, q, lo, hi, "gain");
    double eq = obs.error_gain(j);
    double elo = slack ? slack->error_gain_lower[j] : eq;
    double ehi = slack ? slack->error_gain_upper[j] : eq;
    add_measurement(iW, j, eq, elo, ehi, "error");
  }

  // e_0 = 1/2 exactly: w_0 = Y_0 / 2
  {
    lp::Constraint c;
    c.a.assign(nv, 0.0);
    c.a[iW] = 1.0;
    c.a[iY] = -0.5;
    c.rel = '=';
    c.b = 0.0;
    c.name = "vacuum error rate e_0 = 1/2";
    rows.push_back(c);
  }
  // 0 <= w_i <= Y_i / 2
  for (int i = 1; i <= T; ++i) {
    lp::Constraint c;
    c.a.assign(nv, 0.0);
    c.a[iW + i] = 1.0;
    c.a[iY + i] = -0.5;
    c.rel = '<';
    c.b = 0.0;
    c.name = "error cap e_" + std::to_string(i) + " <= 1/2";
    rows.push_back(c);
  }
  // Y_i <= 1, tail caps
  for (int i = 0; i <= T; ++i) {
    lp::Constraint c;
    c.a.assign(nv, 0.0);
    c.a[iY + i] = 1.0;
    c.rel = '<';
    c.b = 1.0;
    c.name = "yield cap Y_" + std::to_string(i) + " <= 1";
    rows.push_back(c);
  }
  for (int j = 0; j <= N; ++j) {
    lp::Constraint cq;
    cq.a.assign(nv, 0.0);
    cq.a[iTQ + j] = 1.0;
    cq.rel = '<';
    cq.b = tail[j];
    cq.name = "gain tail cap, group " + std::to_string(j);
    rows.push_back(cq);
    lp::Constraint cw;
    cw.a.assign(nv, 0.0);
    cw.a[iTW + j] = 1.0;
    cw.rel = '<';
    cw.b = 0.5 * tail[j];
    cw.name = "error tail cap, group " + std::to_string(j);
    rows.push_back(cw);
  }

  auto run = [&](int var, double sign) {
    std::vector<double> c(nv, 0.0);
    c[var] = sign;
    lp::Result r = lp::minimize(c, rows);
    if (r.status == lp::Status::infeasible) {
      throw infeasible_error("estimate_passive_general: observations inconsistent, " +
                             r.violated_constraint);
    }
    if (r.status != lp::Status::optimal) {
      throw std::runtime_error("estimate_passive_general: solver failed");
    }
    return sign * r.objective;
  };

  double y1_min = std::clamp(run(iY + 1, 1.0), 0.0, 1.0);
  double w1_max = std::clamp(run(iW + 1, -1.0), 0.0, 0.5);

  SinglePhotonBounds b;
  b.method = "passive-general";
  b.mu = mu;
  b.eta_a = N >= 1 ? det.response(1, 1) : 0.0;
  b.y1_lower = y1_min;
  double p1 = thermal_pn(mu, 1);
  b.q1_lower[0] = p1 * det.response(0, 1) * y1_min;
  if (N >= 1) b.q1_lower[1] = p1 * det.response(1, 1) * y1_min;
  if (y1_min <= 0.0) {
    b.vacuous[0] = b.vacuous[1] = true;
    return b;
  }
  double e1 = std::min(w1_max / y1_min, 1.0);
  b.e1_upper[0] = b.e1_upper[1] = e1;
  clamp_group(b, 0);
  clamp_group(b, 1);
  return b;
}

}  // namespace qkd
