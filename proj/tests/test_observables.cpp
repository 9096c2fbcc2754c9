#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qkd/observables.hpp"
#include "qkd/photonics.hpp"

using namespace qkd;

namespace {

const ChannelParams kTable1{0.129, 6.024e-6, 0.015, 0.5};
constexpr double kEtaA = 0.145;

ChannelParams at_loss(double loss_db) {
  return ChannelParams::from_loss(0.145, loss_db, 6.024e-6, 0.015);
}

// row-normalized random response table, for detector-agnostic identities
DetectorResponse random_detector(std::mt19937_64& rng, int resolution) {
  DetectorResponse det(resolution, kPhotonTruncation);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i <= det.truncation(); ++i) {
    double total = 0.0;
    std::vector<double> w(resolution + 1);
    for (double& x : w) {
      x = u(rng) + 1e-3;
      total += x;
    }
    for (int j = 0; j <= resolution; ++j) det.set_response(j, i, w[j] / total);
  }
  return det;
}

}  // namespace

TEST_CASE("trigger probabilities") {
  DetectorResponse det = threshold_response(kEtaA, 0.0);
  CHECK(trigger_prob(SourceParams{0.0}, det, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trigger_prob(SourceParams{0.0}, det, 1) == doctest::Approx(0.0));

  DetectorResponse pnr = pnr_response(6);
  for (int j = 0; j < 6; ++j) {
    CHECK(trigger_prob(SourceParams{0.52}, pnr, j) ==
          doctest::Approx(thermal_pn(0.52, j)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(trigger_prob(SourceParams{0.5}, det, 2), std::domain_error);
}

TEST_CASE("trigger probability matches a Monte-Carlo draw") {
  // thermal sampling: n is geometric with success probability 1/(1+mu)
  double mu = 0.52;
  DetectorResponse det = threshold_response(kEtaA, 0.0);
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int kSamples = 1'000'000;
  int triggered = 0;
  for (int s = 0; s < kSamples; ++s) {
    int n = 0;
    double p_stop = 1.0 / (1.0 + mu);
    while (u(rng) > p_stop) ++n;
    double p_no_click = std::pow(1.0 - kEtaA, n);
    if (u(rng) > p_no_click) ++triggered;
  }
  double mc = static_cast<double>(triggered) / kSamples;
  double exact = trigger_prob(SourceParams{mu}, det, 1);
  double se = std::sqrt(exact * (1.0 - exact) / kSamples);
  CHECK(std::fabs(mc - exact) < 3.0 * se);
}

TEST_CASE("gain endpoints") {
  DetectorResponse det = threshold_response(kEtaA, 0.0);
  CHECK(gain_j(SourceParams{0.0}, det, kTable1, 0) ==
        doctest::Approx(kTable1.y0b).epsilon(1e-12));

  ChannelParams lossless{1.0, 0.0, 0.015, 0.5};
  DetectorResponse pnr = pnr_response(6);
  CHECK(gain_j(SourceParams{0.52}, pnr, lossless, 1) ==
        doctest::Approx(thermal_pn(0.52, 1)).epsilon(1e-13));
}

TEST_CASE("qber limits") {
  DetectorResponse det = threshold_response(kEtaA, 0.0);
  ChannelParams clean{0.129, 0.0, 0.015, 0.5};
  CHECK(qber_j(SourceParams{0.3}, det, clean, 0) == doctest::Approx(0.015).epsilon(1e-12));
  CHECK(qber_j(SourceParams{0.3}, det, clean, 1) == doctest::Approx(0.015).epsilon(1e-12));

  ChannelParams dark{0.0, 6.024e-6, 0.015, 0.5};
  CHECK(qber_j(SourceParams{0.3}, det, dark, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qber_j(SourceParams{0.3}, det, dark, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("closed forms match the golden reference") {
  // 30-digit evaluation at eta=0.129, eta_a=0.145, mu=0.194
  ObservedStatistics obs = closed_form_threshold(SourceParams{0.194}, kEtaA, kTable1);
  CHECK(obs.gain[0] == doctest::Approx(1.983542459241995e-2).epsilon(1e-12));
  CHECK(obs.gain[1] == doctest::Approx(4.585442780700396e-3).epsilon(1e-12));
  CHECK(obs.error_gain(0) == doctest::Approx(3.003730717837927e-4).epsilon(1e-12));
  CHECK(obs.error_gain(1) == doctest::Approx(6.886157881301243e-5).epsilon(1e-12));
  CHECK(obs.trigger_prob[0] == doctest::Approx(0.97263964673728).epsilon(1e-12));
  CHECK(obs.trigger_prob[1] == doctest::Approx(0.02736035326272).epsilon(1e-12));
}

TEST_CASE("closed forms agree with the truncated series on a grid") {
  for (double mu : {0.05, 0.194, 0.4, 0.7, 1.0}) {
    for (double loss : {0.0, 5.0, 12.0, 20.0, 25.0, 40.0}) {
      ChannelParams ch = at_loss(loss);
      DetectorResponse det = threshold_response(kEtaA, 0.0);
      ObservedStatistics closed = closed_form_threshold(SourceParams{mu}, kEtaA, ch);
      for (int j = 0; j < 2; ++j) {
        CHECK(std::fabs(closed.gain[j] - gain_j(SourceParams{mu}, det, ch, j)) < 1e-10);
        CHECK(std::fabs(closed.error_gain(j) -
                        closed.gain[j] * qber_j(SourceParams{mu}, det, ch, j)) < 1e-10);
      }
      CHECK(std::fabs(closed.trigger_prob[0] + closed.trigger_prob[1] - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("vacuum source closed form") {
  ObservedStatistics obs = closed_form_threshold(SourceParams{0.0}, kEtaA, kTable1);
  CHECK(obs.gain[0] == doctest::Approx(kTable1.y0b).epsilon(1e-10));
  CHECK(obs.gain[1] == 0.0);
}

TEST_CASE("group-sum gain identity holds for any detector") {
  // sum_j Q_{mu,j} = 1 - (1-Y0B)/(1+eta mu): the trigger detector cannot
  // change the total coincidence rate
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    int resolution = 1 + static_cast<int>(rng() % 4);
    DetectorResponse det = random_detector(rng, resolution);
    double mu = 0.05 + 0.2 * static_cast<double>(trial);
    ObservedStatistics obs = observe(SourceParams{mu}, det, kTable1);
    double total = 0.0, err_total = 0.0;
    for (int j = 0; j <= resolution; ++j) {
      total += obs.gain[j];
      err_total += obs.error_gain(j);
    }
    double expect = 1.0 - (1.0 - kTable1.y0b) / (1.0 + kTable1.eta * mu);
    CHECK(std::fabs(total - expect) < 1e-10);

    double expect_err = 0.0;
    for (int i = 0; i <= kPhotonTruncation; ++i) {
      expect_err += thermal_pn(mu, i) * yield_i(kTable1, i) * error_i(kTable1, i);
    }
    CHECK(std::fabs(err_total - expect_err) < 1e-10);
  }
}

TEST_CASE("observed qber stays within the Eve-free band") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    DetectorResponse det = random_detector(rng, 2);
    ObservedStatistics obs = observe(SourceParams{0.3}, det, kTable1);
    for (int j = 0; j <= 2; ++j) {
      CHECK(obs.qber[j] >= kTable1.e_d - 1e-12);
      CHECK(obs.qber[j] <= 0.5 + 1e-12);
      CHECK(obs.gain[j] <= obs.trigger_prob[j] + 1e-12);
    }
  }
}

TEST_CASE("true decomposition identities") {
  double mu = 0.194;
  TrueDecomposition t = true_decomposition(SourceParams{mu}, kEtaA, kTable1);
  CHECK(t.single_gain[0] + t.single_gain[1] ==
        doctest::Approx(thermal_pn(mu, 1) * t.y1).epsilon(1e-14));
  CHECK(t.vacuum_gain[1] == 0.0);
  CHECK(t.vacuum_gain[0] == doctest::Approx(thermal_pn(mu, 0) * kTable1.y0b).epsilon(1e-14));

  TrueDecomposition perfect = true_decomposition(SourceParams{mu}, 1.0, kTable1);
  CHECK(perfect.single_gain[0] == 0.0);

  // Q_{1,j} are the i=1 terms of the series
  DetectorResponse det = threshold_response(kEtaA, 0.0);
  for (int j = 0; j < 2; ++j) {
    double term = thermal_pn(mu, 1) * det.response(j, 1) * yield_i(kTable1, 1);
    CHECK(std::fabs(t.single_gain[j] - term) < 1e-14);
  }
}

TEST_CASE("pnr observables") {
  double mu = 0.52;
  ObservedStatistics obs = pnr_observables(SourceParams{mu}, kTable1, 6);
  CHECK(obs.gain[0] == doctest::Approx(thermal_pn(mu, 0) * kTable1.y0b).epsilon(1e-12));
  CHECK(obs.qber[0] == doctest::Approx(0.5).epsilon(1e-12));

  ChannelParams clean{0.129, 0.0, 0.015, 0.5};
  ObservedStatistics c = pnr_observables(SourceParams{mu}, clean, 6);
  CHECK(c.gain[1] == doctest::Approx(thermal_pn(mu, 1) * 0.129).epsilon(1e-12));
  CHECK(c.qber[1] == doctest::Approx(0.015).epsilon(1e-12));

  // consistency with the generic series path
  DetectorResponse det = pnr_response(6);
  ObservedStatistics generic = observe(SourceParams{mu}, det, kTable1);
  for (int j = 0; j <= 6; ++j) {
    CHECK(std::fabs(obs.gain[j] - generic.gain[j]) < 1e-12);
    CHECK(std::fabs(obs.error_gain(j) - generic.error_gain(j)) < 1e-12);
  }
}

TEST_CASE("series tail bound is negligible at the shared truncation") {
  CHECK(series_tail_bound(1.0) < 1e-12);
  CHECK(series_tail_bound(2.0) < 1e-12);
}
