#pragma once

#include "idgames/rational.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace idg {

// maximize c.x  subject to  A x = b,  x >= 0.  A is dense, row-major.
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;

  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> primal;       // a basic feasible solution
  std::vector<Rational> dual;         // one multiplier per equality row
  std::vector<std::size_t> basis;     // basic column per row; >= cols marks an artificial
  std::size_t pivots = 0;
};

struct SimplexOptions {
  // Stop after this many pivots and report kPivotLimit. Used to exercise the
  // certificate check on a solver that gives up early.
  std::size_t pivot_limit = std::numeric_limits<std::size_t>::max();
};

// Two-phase tableau simplex in exact arithmetic with Bland's rule in both
// phases. Phase 1 starts from an all-artificial basis; artificials left at
// zero on redundant rows stay basic and never re-enter.
LpSolution solve_simplex(const LinearProgram& lp, const SimplexOptions& options = {});

struct Certificate {
  bool primal_feasible = false;  // A x = b, x >= 0
  bool dual_feasible = false;    // A^T y >= c
  bool objectives_match = false; // c.x == b.y
  bool ok() const { return primal_feasible && dual_feasible && objectives_match; }
};

// Checks a solution against the original program, independent of the
// tableau that produced it.
Certificate certify(const LinearProgram& lp, const LpSolution& sol);

}  // namespace idg
