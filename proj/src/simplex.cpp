#include "idgames/simplex.hpp"

#include "idgames/error.hpp"

namespace idg {
namespace {

// Dense tableau: `rows` constraint rows followed by one reduced-cost row.
// Columns are [structural | artificial | rhs]. The reduced-cost row stores
// d_j = c_j - c_B B^-1 A_j and -z in the rhs slot.
class Tableau {
public:
  Tableau(const LinearProgram& lp, std::vector<int>& row_sign)
      : m_(lp.rows), n_(lp.cols), width_(lp.cols + lp.rows + 1), cells_((m_ + 1) * width_), basis_(m_) {
    row_sign.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.b[i].sign() < 0) row_sign[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& v = lp.at(i, j);
        if (!v.is_zero()) at(i, j) = row_sign[i] > 0 ? v : -v;
      }
      at(i, n_ + i) = Rational(1);
      at(i, rhs()) = row_sign[i] > 0 ? lp.b[i] : -lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }
  std::size_t obj() const { return m_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  // Reduced costs for a cost vector over structural and artificial columns.
  void load_costs(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j < rhs(); ++j) {
      Rational d = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (!cb.is_zero() && !at(i, j).is_zero()) d.sub_mul(cb, at(i, j));
      }
      at(obj(), j) = std::move(d);
    }
    Rational z;
    for (std::size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * at(i, rhs());
    at(obj(), rhs()) = -z;
  }

  Rational objective() const { return -at(obj(), rhs()); }

  // Bland: smallest structural column with positive reduced cost.
  std::ptrdiff_t entering() const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(obj(), j).sign() > 0) return static_cast<std::ptrdiff_t>(j);
    }
    return -1;
  }

  // Minimum ratio; ties go to the smallest basic column index.
  std::ptrdiff_t leaving(std::size_t e) const {
    std::ptrdiff_t best = -1;
    Rational best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& a = at(i, e);
      if (a.sign() <= 0) continue;
      Rational ratio = at(i, rhs()) / a;
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[static_cast<std::size_t>(best)])) {
        best = static_cast<std::ptrdiff_t>(i);
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = Rational(1) / at(r, e);
    nonzero_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      if (!at(r, j).is_zero()) {
        at(r, j) *= inv;
        nonzero_.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || at(i, e).is_zero()) continue;
      const Rational factor = at(i, e);
      for (std::size_t j : nonzero_) at(i, j).sub_mul(factor, at(r, j));
    }
    basis_[r] = e;
  }

  std::size_t artificial_begin() const { return n_; }

private:
  std::size_t m_, n_, width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
};

enum class PhaseResult { kOptimal, kUnbounded, kPivotLimit };

PhaseResult run_phase(Tableau& t, std::size_t& pivots, std::size_t limit) {
  for (;;) {
    const auto e = t.entering();
    if (e < 0) return PhaseResult::kOptimal;
    if (pivots >= limit) return PhaseResult::kPivotLimit;
    const auto r = t.leaving(static_cast<std::size_t>(e));
    if (r < 0) return PhaseResult::kUnbounded;
    t.pivot(static_cast<std::size_t>(r), static_cast<std::size_t>(e));
    ++pivots;
  }
}

void extract(const LinearProgram& lp, const Tableau& t, const std::vector<int>& row_sign, LpSolution& sol) {
  sol.basis = t.basis();
  sol.primal.assign(lp.cols, Rational(0));
  for (std::size_t i = 0; i < lp.rows; ++i) {
    if (t.basis()[i] < lp.cols) sol.primal[t.basis()[i]] = t.at(i, t.rhs());
  }
  // Artificial columns carry B^-1, so their reduced costs are -y.
  sol.dual.assign(lp.rows, Rational(0));
  for (std::size_t k = 0; k < lp.rows; ++k) {
    const Rational y = -t.at(t.obj(), t.artificial_begin() + k);
    sol.dual[k] = row_sign[k] > 0 ? y : -y;
  }
  sol.objective = Rational(0);
  for (std::size_t j = 0; j < lp.cols; ++j) {
    if (!sol.primal[j].is_zero()) sol.objective += lp.c[j] * sol.primal[j];
  }
}

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp, const SimplexOptions& options) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.c.size() != lp.cols) {
    throw Error(ErrorCode::kDomain, "linear program dimensions are inconsistent");
  }
  std::vector<int> row_sign;
  Tableau t(lp, row_sign);
  LpSolution sol;

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(lp.cols + lp.rows, Rational(0));
  for (std::size_t k = 0; k < lp.rows; ++k) phase1[lp.cols + k] = Rational(-1);
  t.load_costs(phase1);
  auto res = run_phase(t, sol.pivots, options.pivot_limit);
  if (res == PhaseResult::kPivotLimit) {
    sol.status = LpStatus::kPivotLimit;
    extract(lp, t, row_sign, sol);
    return sol;
  }
  if (!t.objective().is_zero()) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }

  // Drive zero-level artificials out where some structural entry allows it.
  for (std::size_t i = 0; i < lp.rows; ++i) {
    if (t.basis()[i] < lp.cols) continue;
    for (std::size_t j = 0; j < lp.cols; ++j) {
      if (!t.at(i, j).is_zero()) {
        t.pivot(i, j);
        ++sol.pivots;
        break;
      }
    }
  }

  std::vector<Rational> phase2(lp.cols + lp.rows, Rational(0));
  for (std::size_t j = 0; j < lp.cols; ++j) phase2[j] = lp.c[j];
  t.load_costs(phase2);
  res = run_phase(t, sol.pivots, options.pivot_limit);
  sol.status = res == PhaseResult::kOptimal    ? LpStatus::kOptimal
               : res == PhaseResult::kUnbounded ? LpStatus::kUnbounded
                                                : LpStatus::kPivotLimit;
  extract(lp, t, row_sign, sol);
  return sol;
}

Certificate certify(const LinearProgram& lp, const LpSolution& sol) {
  Certificate cert;
  if (sol.primal.size() != lp.cols || sol.dual.size() != lp.rows) return cert;

  cert.primal_feasible = true;
  for (const auto& v : sol.primal) {
    if (v.sign() < 0) cert.primal_feasible = false;
  }
  for (std::size_t i = 0; i < lp.rows && cert.primal_feasible; ++i) {
    Rational row;
    for (std::size_t j = 0; j < lp.cols; ++j) {
      if (!lp.at(i, j).is_zero() && !sol.primal[j].is_zero()) row += lp.at(i, j) * sol.primal[j];
    }
    if (row != lp.b[i]) cert.primal_feasible = false;
  }

  cert.dual_feasible = true;
  for (std::size_t j = 0; j < lp.cols && cert.dual_feasible; ++j) {
    Rational col;
    for (std::size_t i = 0; i < lp.rows; ++i) {
      if (!lp.at(i, j).is_zero() && !sol.dual[i].is_zero()) col += lp.at(i, j) * sol.dual[i];
    }
    if (col < lp.c[j]) cert.dual_feasible = false;
  }

  Rational primal_obj, dual_obj;
  for (std::size_t j = 0; j < lp.cols; ++j) primal_obj += lp.c[j] * sol.primal[j];
  for (std::size_t i = 0; i < lp.rows; ++i) dual_obj += lp.b[i] * sol.dual[i];
  cert.objectives_match = primal_obj == dual_obj;
  return cert;
}

}  // namespace idg
