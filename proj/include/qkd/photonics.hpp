#ifndef QKD_PHOTONICS_HPP
#define QKD_PHOTONICS_HPP

#include <utility>
#include <vector>

namespace qkd {

// Photon-number series truncation shared by every module. For mu <= 2 the
// discarded tail is (mu/(1+mu))^(K+1) < 1e-88.
inline constexpr int kPhotonTruncation = 500;

/// Binary entropy H2(p) = -p log2 p - (1-p) log2(1-p), extended with
/// H2(0) = H2(1) = 0. Throws std::domain_error outside [0,1].
double binary_entropy(double p);

/// Bidirectional error-correction efficiency f(e) >= 1. Either a constant
/// or a piecewise-linear table over (error rate, efficiency) points,
/// clamped at the table endpoints.
class EcModel {
 public:
  static EcModel constant(double value);
  static EcModel table(std::vector<std::pair<double, double>> points);

  double operator()(double error_rate) const;

  bool is_constant() const { return table_.empty(); }
  double constant_value() const { return constant_; }

 private:
  EcModel() = default;
  double constant_ = 1.22;
  std::vector<std::pair<double, double>> table_;
};

/// Thermal (single-mode PDC) photon-pair number distribution
/// P(n) = mu^n / (1+mu)^(n+1).
double thermal_pn(double mu, int n);

/// Closed tail sum: sum_{n >= n0} thermal_pn(mu, n) = (mu/(1+mu))^n0.
double thermal_tail(double mu, int n0);

}  // namespace qkd

#endif
