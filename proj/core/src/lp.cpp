#include "cihull/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/interval.hpp"

namespace cihull {
namespace {

constexpr double kEnterTol = 1e-11;
constexpr double kPivotTol = 1e-11;
constexpr std::size_t kMaxIters = 100000;

// Bounded variables are rewritten as nonnegative ones:
//   Fixed     l == u             x = l
//   Shifted   l finite           x = l + y        (cap row y + s = u - l if u finite)
//   Mirrored  l = -inf, u finite x = u - y
//   Split     both infinite      x = y1 - y2
enum class SubKind { Fixed, Shifted, Mirrored, Split };

struct Sub {
  SubKind kind = SubKind::Fixed;
  double base = 0.0;
  std::size_t col = 0;  // first standard-form column (unused for Fixed)
};

// Dense simplex tableau over equality rows with nonnegative variables.
// Artificial columns sit after the structural ones and never re-enter the
// basis once they leave it.
class Tableau {
 public:
  Tableau(std::vector<std::vector<double>> rows, std::vector<double> rhs,
          std::size_t struct_cols)
      : n_struct_(struct_cols), a_(std::move(rows)), b_(std::move(rhs)) {
    const std::size_t m = a_.size();
    for (std::size_t i = 0; i < m; ++i)
      if (b_[i] < 0.0) {
        b_[i] = -b_[i];
        for (double& v : a_[i]) v = -v;
      }
    n_total_ = n_struct_ + m;
    basis_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      a_[i].resize(n_total_, 0.0);
      a_[i][n_struct_ + i] = 1.0;
      basis_.push_back(n_struct_ + i);
    }
    r_.assign(n_total_, 0.0);
  }

  enum class Outcome { Optimal, Unbounded };

  // Minimizes cost . y by Bland's rule; cost must have n_total entries.
  Outcome optimize(const std::vector<double>& cost) {
    r_ = cost;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const double cb = cost[basis_[i]];
      if (cb != 0.0)
        for (std::size_t j = 0; j < n_total_; ++j) r_[j] -= cb * a_[i][j];
    }
    for (std::size_t iter = 0; iter < kMaxIters; ++iter) {
      std::size_t enter = n_total_;
      for (std::size_t j = 0; j < n_struct_; ++j)
        if (r_[j] < -kEnterTol) {
          enter = j;
          break;
        }
      if (enter == n_total_) return Outcome::Optimal;

      std::size_t leave = a_.size();
      double best = 0.0;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= kPivotTol) continue;
        const double ratio = b_[i] / a_[i][enter];
        if (leave == a_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a_.size()) return Outcome::Unbounded;
      pivot(leave, enter);
    }
    throw NumericalBreakdown("simplex exceeded its iteration limit");
  }

  double value(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) v += cost[basis_[i]] * b_[i];
    return v;
  }

  // Removes artificials from the basis after a feasible first phase,
  // deleting rows made redundant by the original system.
  void purge_artificials() {
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < n_struct_) {
        ++i;
        continue;
      }
      std::size_t q = n_struct_;
      for (std::size_t j = 0; j < n_struct_; ++j)
        if (std::abs(a_[i][j]) > kPivotTol) {
          q = j;
          break;
        }
      if (q == n_struct_) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, q);
        ++i;
      }
    }
  }

  std::vector<double> solution() const {
    std::vector<double> y(n_struct_, 0.0);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (basis_[i] < n_struct_) y[basis_[i]] = b_[i];
    return y;
  }

  std::size_t total_cols() const { return n_total_; }

 private:
  void pivot(std::size_t p, std::size_t q) {
    const double piv = a_[p][q];
    for (std::size_t j = 0; j < n_total_; ++j) a_[p][j] /= piv;
    b_[p] /= piv;
    a_[p][q] = 1.0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == p) continue;
      const double f = a_[i][q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_total_; ++j) a_[i][j] -= f * a_[p][j];
      a_[i][q] = 0.0;
      b_[i] -= f * b_[p];
      if (b_[i] < 0.0 && b_[i] > -1e-12) b_[i] = 0.0;
    }
    const double fr = r_[q];
    if (fr != 0.0) {
      for (std::size_t j = 0; j < n_total_; ++j) r_[j] -= fr * a_[p][j];
      r_[q] = 0.0;
    }
    basis_[p] = q;
  }

  std::size_t n_struct_;
  std::size_t n_total_ = 0;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::vector<double> r_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp, double feas_tol) {
  const std::size_t n = lp.num_vars;
  if (lp.lower.size() != n || lp.upper.size() != n)
    throw std::invalid_argument("lp bounds must match num_vars");
  if (lp.rows.size() != lp.rhs.size())
    throw std::invalid_argument("lp rows and rhs must match");
  for (const auto& row : lp.rows)
    if (row.size() != n)
      throw std::invalid_argument("lp row length must match num_vars");
  if (!lp.objective.empty() && lp.objective.size() != n)
    throw std::invalid_argument("lp objective length must match num_vars");

  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(lp.lower[j]) || std::isnan(lp.upper[j]))
      throw std::invalid_argument("lp bounds must not be NaN");
    if (lp.lower[j] > lp.upper[j] || lp.lower[j] == kInf ||
        lp.upper[j] == -kInf) {
      LpResult res;
      res.status = LpStatus::Infeasible;
      res.infeasibility =
          lp.lower[j] > lp.upper[j] ? lp.lower[j] - lp.upper[j] : kInf;
      return res;
    }
  }

  // Assign standard-form columns.
  std::vector<Sub> subs(n);
  std::size_t cols = 0;
  std::vector<std::size_t> capped;  // vars needing an upper-bound row
  for (std::size_t j = 0; j < n; ++j) {
    const double l = lp.lower[j], u = lp.upper[j];
    if (l == u) {
      subs[j] = {SubKind::Fixed, l, 0};
    } else if (l != -kInf) {
      subs[j] = {SubKind::Shifted, l, cols};
      cols += 1;
      if (u != kInf) capped.push_back(j);
    } else if (u != kInf) {
      subs[j] = {SubKind::Mirrored, u, cols};
      cols += 1;
    } else {
      subs[j] = {SubKind::Split, 0.0, cols};
      cols += 2;
    }
  }
  std::vector<std::size_t> cap_slack(capped.size());
  for (std::size_t c = 0; c < capped.size(); ++c) cap_slack[c] = cols++;

  // Rewrite the equality rows over the standard columns.
  const std::size_t num_rows = lp.rows.size() + capped.size();
  std::vector<std::vector<double>> rows(num_rows,
                                        std::vector<double>(cols, 0.0));
  std::vector<double> rhs(num_rows, 0.0);
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    double r = lp.rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double a = lp.rows[i][j];
      if (a == 0.0) continue;
      switch (subs[j].kind) {
        case SubKind::Fixed:
          r -= a * subs[j].base;
          break;
        case SubKind::Shifted:
          rows[i][subs[j].col] += a;
          r -= a * subs[j].base;
          break;
        case SubKind::Mirrored:
          rows[i][subs[j].col] -= a;
          r -= a * subs[j].base;
          break;
        case SubKind::Split:
          rows[i][subs[j].col] += a;
          rows[i][subs[j].col + 1] -= a;
          break;
      }
    }
    rhs[i] = r;
  }
  for (std::size_t c = 0; c < capped.size(); ++c) {
    const std::size_t i = lp.rows.size() + c;
    const std::size_t j = capped[c];
    rows[i][subs[j].col] = 1.0;
    rows[i][cap_slack[c]] = 1.0;
    rhs[i] = lp.upper[j] - lp.lower[j];
  }

  Tableau t(std::move(rows), std::move(rhs), cols);

  std::vector<double> phase1(t.total_cols(), 0.0);
  for (std::size_t j = cols; j < t.total_cols(); ++j) phase1[j] = 1.0;
  if (t.optimize(phase1) == Tableau::Outcome::Unbounded)
    throw NumericalBreakdown("first simplex phase reported unbounded");
  const double infeas = t.value(phase1);

  LpResult res;
  res.infeasibility = std::max(0.0, infeas);
  if (infeas > feas_tol) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  t.purge_artificials();

  if (!lp.objective.empty()) {
    std::vector<double> phase2(t.total_cols(), 0.0);
    const double sense = lp.maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double c = sense * lp.objective[j];
      if (c == 0.0) continue;
      switch (subs[j].kind) {
        case SubKind::Fixed:
          break;
        case SubKind::Shifted:
          phase2[subs[j].col] += c;
          break;
        case SubKind::Mirrored:
          phase2[subs[j].col] -= c;
          break;
        case SubKind::Split:
          phase2[subs[j].col] += c;
          phase2[subs[j].col + 1] -= c;
          break;
      }
    }
    if (t.optimize(phase2) == Tableau::Outcome::Unbounded) {
      res.status = LpStatus::Unbounded;
      return res;
    }
  }

  const std::vector<double> y = t.solution();
  res.point.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    switch (subs[j].kind) {
      case SubKind::Fixed:
        res.point[j] = subs[j].base;
        break;
      case SubKind::Shifted:
        res.point[j] = subs[j].base + y[subs[j].col];
        break;
      case SubKind::Mirrored:
        res.point[j] = subs[j].base - y[subs[j].col];
        break;
      case SubKind::Split:
        res.point[j] = y[subs[j].col] - y[subs[j].col + 1];
        break;
    }
  }
  if (!lp.objective.empty()) {
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      obj += lp.objective[j] * res.point[j];
    res.objective = obj;
  }
  res.status = LpStatus::Feasible;
  return res;
}

}  // namespace cihull
