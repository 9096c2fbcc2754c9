#include "qkd/system_model.hpp"

#include <cmath>
#include <stdexcept>

#include "qkd/photonics.hpp"

namespace qkd {

ChannelParams ChannelParams::from_loss(double eta_bob, double loss_db, double y0b,
                                       double e_d) {
  if (eta_bob < 0.0 || eta_bob > 1.0) throw std::domain_error("eta_bob outside [0,1]");
  if (y0b < 0.0 || y0b > 1.0) throw std::domain_error("y0b outside [0,1]");
  if (e_d < 0.0 || e_d > 1.0) throw std::domain_error("e_d outside [0,1]");
  ChannelParams ch;
  ch.eta = eta_bob * std::pow(10.0, -loss_db / 10.0);
  ch.y0b = y0b;
  ch.e_d = e_d;
  return ch;
}

double yield_i(const ChannelParams& ch, int i) {
  if (i < 0) throw std::domain_error("yield_i: i < 0");
  if (i == 0) return ch.y0b;
  if (ch.eta >= 1.0) return 1.0;
  // 1 - (1-y0b)(1-eta)^i, rearranged so the signal part does not cancel
  double hit = -std::expm1(i * std::log1p(-ch.eta));  // 1 - (1-eta)^i
  return ch.y0b + (1.0 - ch.y0b) * hit;
}

double error_i(const ChannelParams& ch, int i) {
  double y = yield_i(ch, i);
  if (y <= 0.0) {
    throw std::domain_error("error_i: zero yield, conditional error undefined");
  }
  return ch.e_d + (ch.e_0 - ch.e_d) * ch.y0b / y;
}

DetectorResponse::DetectorResponse(int resolution, int truncation)
    : resolution_(resolution), truncation_(truncation) {
  if (resolution < 0) throw std::domain_error("DetectorResponse: resolution < 0");
  if (truncation < 1) throw std::domain_error("DetectorResponse: truncation < 1");
  table_.assign(static_cast<std::size_t>(truncation_ + 1) * (resolution_ + 1), 0.0);
}

double DetectorResponse::response(int j, int i) const {
  if (j < 0 || j > resolution_) throw std::domain_error("DetectorResponse: outcome j out of range");
  if (i < 0 || i > truncation_) throw std::domain_error("DetectorResponse: photon number out of range");
  return table_[static_cast<std::size_t>(i) * (resolution_ + 1) + j];
}

void DetectorResponse::set_response(int j, int i, double p) {
  if (j < 0 || j > resolution_ || i < 0 || i > truncation_) {
    throw std::domain_error("DetectorResponse: index out of range");
  }
  if (p < 0.0 || p > 1.0) throw std::domain_error("DetectorResponse: probability out of range");
  table_[static_cast<std::size_t>(i) * (resolution_ + 1) + j] = p;
}

double DetectorResponse::row_normalization_defect() const {
  double worst = 0.0;
  for (int i = 0; i <= truncation_; ++i) {
    double s = 0.0;
    for (int j = 0; j <= resolution_; ++j) {
      s += table_[static_cast<std::size_t>(i) * (resolution_ + 1) + j];
    }
    worst = std::max(worst, std::fabs(1.0 - s));
  }
  return worst;
}

DetectorResponse threshold_response(double eta_a, double y0a, bool exact, int truncation) {
  if (eta_a < 0.0 || eta_a > 1.0) throw std::domain_error("threshold_response: eta_a outside [0,1]");
  if (y0a < 0.0 || y0a > 1.0) throw std::domain_error("threshold_response: y0a outside [0,1]");
  int K = truncation < 0 ? kPhotonTruncation : truncation;
  DetectorResponse det(1, K);
  double scale = exact ? 1.0 - y0a : 1.0;
  double pow_i = 1.0;  // (1-eta_a)^i
  for (int i = 0; i <= K; ++i) {
    double p0 = scale * pow_i;
    det.set_response(0, i, p0);
    det.set_response(1, i, 1.0 - p0);
    pow_i *= 1.0 - eta_a;
  }
  return det;
}

DetectorResponse pnr_response(int k_max, int truncation) {
  if (k_max < 1) throw std::domain_error("pnr_response: k_max < 1");
  int K = truncation < 0 ? kPhotonTruncation : truncation;
  if (K < k_max) throw std::domain_error("pnr_response: truncation below k_max");
  DetectorResponse det(k_max, K);
  for (int i = 0; i <= K; ++i) {
    det.set_response(i < k_max ? i : k_max, i, 1.0);  // saturation above k_max
  }
  return det;
}

}  // namespace qkd
