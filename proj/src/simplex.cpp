#include "qkd/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qkd::lp {

namespace {
constexpr double kPivotEps = 1e-11;
constexpr double kFeasEps = 1e-9;
}  // namespace

Result minimize(const std::vector<double>& c, const std::vector<Constraint>& rows) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(rows.size());

  // Count slacks, then lay out columns as [x | slacks | artificials | rhs].
  int n_slack = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.a.size()) != n) {
      throw std::invalid_argument("lp::minimize: constraint width mismatch");
    }
    if (r.rel == '<') ++n_slack;
  }
  const int n_art = m;
  const int cols = n + n_slack + n_art + 1;
  const int rhs = cols - 1;

  std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
  std::vector<int> basis(m, -1);
  std::vector<double> scale(m, 1.0);

  int slack_at = n;
  for (int i = 0; i < m; ++i) {
    double mx = std::fabs(rows[i].b);
    for (double v : rows[i].a) mx = std::max(mx, std::fabs(v));
    if (mx <= 0.0) mx = 1.0;
    scale[i] = mx;
    double sign = 1.0;
    // normalize the row and make the rhs non-negative
    double b = rows[i].b / mx;
    if (b < 0.0) {
      sign = -1.0;
      b = -b;
    }
    for (int k = 0; k < n; ++k) t[i][k] = sign * rows[i].a[k] / mx;
    t[i][rhs] = b;
    if (rows[i].rel == '<') {
      t[i][slack_at] = sign * 1.0;
      ++slack_at;
    }
    t[i][n + n_slack + i] = 1.0;
    basis[i] = n + n_slack + i;
  }

  auto pivot = [&](int pr, int pc) {
    double pv = t[pr][pc];
    for (int k = 0; k < cols; ++k) t[pr][k] /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      double f = t[i][pc];
      if (f == 0.0) continue;
      for (int k = 0; k < cols; ++k) t[i][k] -= f * t[pr][k];
    }
    basis[pr] = pc;
  };

  // Runs simplex iterations for the cost vector `cost` over columns
  // [0, limit); returns false if unbounded.
  auto solve_phase = [&](const std::vector<double>& cost, int limit) -> bool {
    for (long iter = 0; iter < 100000; ++iter) {
      // reduced costs z_j = cost_j - cost_B . B^{-1} A_j
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        double zj = cost[j];
        for (int i = 0; i < m; ++i) {
          if (basis[i] < static_cast<int>(cost.size())) zj -= cost[basis[i]] * t[i][j];
        }
        if (zj < -kPivotEps) {
          enter = j;  // Bland: first improving column
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] > kPivotEps) {
          double ratio = t[i][rhs] / t[i][enter];
          if (ratio < best - 1e-15 ||
              (std::fabs(ratio - best) <= 1e-15 && leave >= 0 && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
    throw std::runtime_error("lp::minimize: iteration limit");
  };

  // Phase 1: minimize the sum of artificials.
  std::vector<double> cost1(n + n_slack + n_art, 0.0);
  for (int j = n + n_slack; j < n + n_slack + n_art; ++j) cost1[j] = 1.0;
  if (!solve_phase(cost1, n + n_slack + n_art)) {
    throw std::runtime_error("lp::minimize: phase-1 unbounded");
  }
  double infeas = 0.0;
  int worst_row = -1;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n + n_slack && t[i][rhs] > infeas) {
      infeas = t[i][rhs];
      worst_row = i;
    }
  }
  if (infeas > kFeasEps) {
    Result res;
    res.status = Status::infeasible;
    res.violated_constraint =
        worst_row >= 0 && !rows[worst_row].name.empty()
            ? rows[worst_row].name
            : "constraint " + std::to_string(worst_row) +
                  " (residual " + std::to_string(infeas * scale[worst_row]) + ")";
    return res;
  }
  // Drive any zero-level artificial out of the basis when possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n + n_slack) continue;
    int pc = -1;
    for (int j = 0; j < n + n_slack; ++j) {
      if (std::fabs(t[i][j]) > kPivotEps) {
        pc = j;
        break;
      }
    }
    if (pc >= 0) pivot(i, pc);
    // else: redundant row, harmless to leave the artificial basic at zero
  }

  // Phase 2 over the real columns only.
  std::vector<double> cost2(n + n_slack, 0.0);
  for (int j = 0; j < n; ++j) cost2[j] = c[j];
  if (!solve_phase(cost2, n + n_slack)) {
    Result res;
    res.status = Status::unbounded;
    return res;
  }

  Result res;
  res.status = Status::optimal;
  res.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) res.x[basis[i]] = t[i][rhs];
  }
  double obj = 0.0;
  for (int j = 0; j < n; ++j) obj += c[j] * res.x[j];
  res.objective = obj;
  return res;
}

}  // namespace qkd::lp
