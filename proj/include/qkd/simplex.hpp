#ifndef QKD_SIMPLEX_HPP
#define QKD_SIMPLEX_HPP

#include <string>
#include <vector>

namespace qkd::lp {

// One linear constraint: dot(a, x) rel b, rel in {'=', '<'}.
struct Constraint {
  std::vector<double> a;
  char rel = '=';
  double b = 0.0;
  std::string name;
};

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::string violated_constraint;  // set when infeasible
};

/// Minimize dot(c, x) subject to the constraints and x >= 0.
/// Two-phase dense tableau simplex with Bland's rule (lowest-index entering
/// column, lowest-index tie break on the ratio test), so the pivot sequence
/// and the reported vertex are deterministic for identical inputs.
Result minimize(const std::vector<double>& c, const std::vector<Constraint>& rows);

}  // namespace qkd::lp

#endif
