#include "qkd/photonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p outside [0,1]");
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

EcModel EcModel::constant(double value) {
  if (value < 1.0) {
    throw std::domain_error("EcModel: efficiency below the Shannon limit f=1");
  }
  EcModel m;
  m.constant_ = value;
  return m;
}

EcModel EcModel::table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) {
    throw std::invalid_argument("EcModel: empty table");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].second < 1.0) {
      throw std::domain_error("EcModel: table efficiency below 1");
    }
    if (k > 0 && points[k].first <= points[k - 1].first) {
      throw std::invalid_argument("EcModel: table error rates must be strictly increasing");
    }
  }
  EcModel m;
  m.table_ = std::move(points);
  return m;
}

double EcModel::operator()(double e) const {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::domain_error("EcModel: error rate outside [0,1]");
  }
  if (table_.empty()) return constant_;
  if (e <= table_.front().first) return table_.front().second;
  if (e >= table_.back().first) return table_.back().second;
  auto hi = std::upper_bound(table_.begin(), table_.end(), e,
                             [](double x, const auto& pt) { return x < pt.first; });
  auto lo = hi - 1;
  double t = (e - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

double thermal_pn(double mu, int n) {
  if (mu < 0.0) throw std::domain_error("thermal_pn: mu < 0");
  if (n < 0) throw std::domain_error("thermal_pn: n < 0");
  if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
  double r = mu / (1.0 + mu);
  return std::pow(r, n) / (1.0 + mu);
}

double thermal_tail(double mu, int n0) {
  if (mu < 0.0) throw std::domain_error("thermal_tail: mu < 0");
  if (n0 < 0) throw std::domain_error("thermal_tail: n0 < 0");
  if (mu == 0.0) return n0 == 0 ? 1.0 : 0.0;
  return std::pow(mu / (1.0 + mu), n0);
}

}  // namespace qkd
