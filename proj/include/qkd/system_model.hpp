#ifndef QKD_SYSTEM_MODEL_HPP
#define QKD_SYSTEM_MODEL_HPP

#include <vector>

namespace qkd {

/// PDC source: expected photon-pair number per pump pulse.
struct SourceParams {
  double mu = 0.0;
};

/// Bob-side channel and detection model.
///   eta : overall detection probability (channel x coupling x detector)
///   y0b : background count rate of Bob's detection system
///   e_d : intrinsic detector error rate (misalignment)
///   e_0 : error rate of background counts, 1/2
struct ChannelParams {
  double eta = 0.0;
  double y0b = 0.0;
  double e_d = 0.0;
  double e_0 = 0.5;

  // eta = eta_bob * 10^(-loss_dB/10)
  static ChannelParams from_loss(double eta_bob, double loss_db, double y0b, double e_d);
};

/// Yield of the i-photon channel: Y_i = 1 - (1-Y0B)(1-eta)^i.
double yield_i(const ChannelParams& ch, int i);

/// Error rate of the i-photon channel: e_i = e_d + (e_0-e_d) Y0B / Y_i.
/// Throws if Y_i == 0 (the conditional is undefined).
double error_i(const ChannelParams& ch, int i);

/// Conditional probability table eta_{j|i} for Alice's trigger detector:
/// probability that an incoming i-photon state is reported as j photons,
/// j = 0..N, i = 0..K.
class DetectorResponse {
 public:
  DetectorResponse(int resolution, int truncation);

  int resolution() const { return resolution_; }
  int truncation() const { return truncation_; }

  double response(int j, int i) const;
  void set_response(int j, int i, double p);

  // max_i |1 - sum_j response(j,i)|, for the normalization invariant
  double row_normalization_defect() const;

 private:
  int resolution_;
  int truncation_;
  std::vector<double> table_;  // (K+1) rows of (N+1) entries
};

/// Threshold ("click / no click") detector. The default drops Alice-side
/// background: eta_{0|i} = (1-eta_a)^i. The exact form keeps it:
/// eta_{0|i} = (1-y0a)(1-eta_a)^i.
DetectorResponse threshold_response(double eta_a, double y0a, bool exact = false,
                                    int truncation = -1);

/// Perfect photon-number-resolving detector: eta_{j|i} = delta_{j,i} for
/// i <= k_max; states above k_max are reported as k_max.
DetectorResponse pnr_response(int k_max, int truncation = -1);

}  // namespace qkd

#endif
