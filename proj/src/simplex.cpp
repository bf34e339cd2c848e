#include "contingent/simplex.hpp"

#include <limits>

#include "contingent/error.hpp"

namespace contingent {

LinearSolution solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  if (b.size() != rows) throw InputError("linear system: right-hand side size mismatch");
  for (const auto& row : a) {
    if (row.size() != cols) throw InputError("linear system: ragged matrix");
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return out;
  }
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
  out.status = r == cols ? LinearSolution::Status::kUnique : LinearSolution::Status::kUnderdetermined;
  return out;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(Matrix rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : t_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_.front().size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
    ++pivots_;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Maximizes cost.x over columns < `usable`. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t usable) {
    std::vector<bool> basic(cols(), false);
    for (std::size_t b : basis_) basic[b] = true;
    while (true) {
      // Reduced costs cost_j - c_B . column_j.
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < usable && enter == kNone; ++j) {
        if (basic[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (t_[i][j] != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (reduced > 0) enter = j;
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      basic[basis_[leave]] = false;
      basic[enter] = true;
      pivot(leave, enter);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows(); ++i) z += cost[basis_[i]] * rhs_[i];
    return z;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  Matrix t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult maximize(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.sense.size() != m || lp.b.size() != m) throw InputError("linear program: row data size mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw InputError("linear program: ragged constraint matrix");
  }

  // Column layout: originals, one slack or surplus per inequality, then one
  // artificial per >= or = row (after making every right-hand side >= 0).
  std::vector<Sense> sense = lp.sense;
  std::vector<Rational> rhs = lp.b;
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      sign[i] = -1;
      rhs[i] = -rhs[i];
      if (sense[i] == Sense::kLessEqual) {
        sense[i] = Sense::kGreaterEqual;
      } else if (sense[i] == Sense::kGreaterEqual) {
        sense[i] = Sense::kLessEqual;
      }
    }
  }
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (Sense s : sense) {
    if (s != Sense::kEqual) ++slack_count;
    if (s != Sense::kLessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = n + slack_count;
  const std::size_t total = first_artificial + artificial_count;

  Matrix rows(m, std::vector<Rational>(total, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign[i] * lp.a[i][j];
    if (sense[i] == Sense::kLessEqual) {
      rows[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::kGreaterEqual) rows[i][next_slack++] = -1;
      rows[i][next_artificial] = 1;
      basis[i] = next_artificial++;
    }
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));
  LpResult out;

  if (artificial_count > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = -1;
    tab.optimize(phase1, total);
    if (tab.objective(phase1) < 0) {
      out.status = LpResult::Status::kInfeasible;
      out.pivots = tab.pivots();
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial && col == kNone; ++j) {
        if (tab.at(i, j) != 0) col = j;
      }
      if (col == kNone) {
        tab.drop_row(i);  // redundant constraint
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<Rational> cost(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  if (!tab.optimize(cost, first_artificial)) {
    out.status = LpResult::Status::kUnbounded;
    out.pivots = tab.pivots();
    return out;
  }
  out.status = LpResult::Status::kOptimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < n) out.x[tab.basis()[i]] = tab.rhs(i);
  }
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.c[j] * out.x[j];
  out.pivots = tab.pivots();
  return out;
}

}  // namespace contingent
