#include "idgames/nosignaling.hpp"

#include "idgames/classical.hpp"
#include "idgames/error.hpp"
#include "idgames/evaluate.hpp"
#include "idgames/exact_linalg.hpp"

#include <cmath>

namespace idg {
namespace {

// Joint input with player k's digit replaced by v.
Index with_input(const Scenario& s, Index x, std::size_t k, std::uint32_t v) {
  Index stride = 1;
  for (std::size_t j = 0; j < k; ++j) stride *= s.inputs(j);
  return x - s.input_of(x, k) * stride + v * stride;
}

Index with_output(const Scenario& s, Index y, std::size_t k, std::uint32_t v) {
  Index stride = 1;
  for (std::size_t j = 0; j < k; ++j) stride *= s.outputs();
  return y - s.output_of(y, k) * stride + v * stride;
}

// Visits every no-signaling row as (x, x0, k, y): sum over y_k of p(.|x)
// against the same sum at x0 = x with x_k = 0, for the outputs y of the
// other players (y's own k digit is zero).
template <class Visit>
void for_each_marginal_row(const Scenario& s, Visit&& visit) {
  for (std::size_t k = 0; k < s.players(); ++k) {
    for (Index x = 0; x < s.joint_inputs(); ++x) {
      if (s.input_of(x, k) == 0) continue;
      const Index x0 = with_input(s, x, k, 0);
      for (Index y = 0; y < s.joint_outputs(); ++y) {
        if (s.output_of(y, k) != 0) continue;
        visit(x, x0, k, y);
      }
    }
  }
}

}  // namespace

NSConstraintSystem build_constraints(const Scenario& s) {
  NSConstraintSystem sys{s, s.joint_inputs() * s.joint_outputs(), s.joint_inputs(), {}};
  const Index no = s.joint_outputs();
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    NSConstraintSystem::Row row;
    for (Index y = 0; y < no; ++y) row.terms.emplace_back(x * no + y, 1);
    row.rhs = 1;
    sys.rows.push_back(std::move(row));
  }
  for_each_marginal_row(s, [&](Index x, Index x0, std::size_t k, Index y) {
    NSConstraintSystem::Row row;
    for (std::uint32_t yk = 0; yk < s.outputs(); ++yk) {
      const Index yy = with_output(s, y, k, yk);
      row.terms.emplace_back(x * no + yy, 1);
      row.terms.emplace_back(x0 * no + yy, -1);
    }
    sys.rows.push_back(std::move(row));
  });
  return sys;
}

LinearProgram to_linear_program(const NSConstraintSystem& sys, const std::vector<Rational>& objective) {
  LinearProgram lp;
  lp.rows = sys.rows.size();
  lp.cols = sys.variables;
  lp.a.assign(lp.rows * lp.cols, Rational(0));
  lp.b.reserve(lp.rows);
  for (std::size_t i = 0; i < lp.rows; ++i) {
    for (const auto& [v, coef] : sys.rows[i].terms) lp.a[i * lp.cols + v] += Rational(coef);
    lp.b.emplace_back(sys.rows[i].rhs);
  }
  lp.c = objective;
  return lp;
}

NSResult optimal_ns(const GameFunction& f, const SimplexOptions& options) {
  const Scenario& s = f.scenario();
  const auto sys = build_constraints(s);
  if (sys.variables > 20000) throw Error(ErrorCode::kTooLarge, "no-signaling LP too large for " + s.to_string());
  std::vector<Rational> objective(sys.variables, Rational(0));
  for (Index x = 0; x < s.joint_inputs(); ++x) objective[x * s.joint_outputs() + f(x)] = Rational(1);
  const auto lp = to_linear_program(sys, objective);

  NSResult result{Rational(0), ExactBox(s), solve_simplex(lp, options), {}};
  if (result.lp.status == LpStatus::kInfeasible || result.lp.status == LpStatus::kUnbounded) {
    throw Error(ErrorCode::kInfeasible, "no-signaling LP reported infeasible or unbounded");
  }
  result.certificate = certify(lp, result.lp);
  if (result.lp.status == LpStatus::kOptimal && !result.certificate.ok()) {
    throw Error(ErrorCode::kInfeasible, "no-signaling LP optimum failed its duality certificate");
  }
  result.witness = ExactBox(s, result.lp.primal);
  result.value = result.lp.objective / Rational(static_cast<std::int64_t>(s.joint_inputs()));
  return result;
}

bool is_no_signaling(const ExactBox& b) {
  const Scenario& s = b.scenario();
  bool ok = true;
  for_each_marginal_row(s, [&](Index x, Index x0, std::size_t k, Index y) {
    if (!ok) return;
    Rational lhs, rhs;
    for (std::uint32_t yk = 0; yk < s.outputs(); ++yk) {
      const Index yy = with_output(s, y, k, yk);
      lhs += b.at(x, yy);
      rhs += b.at(x0, yy);
    }
    ok = lhs == rhs;
  });
  return ok;
}

bool is_no_signaling_approx(const FloatBox& b, double tol) {
  const Scenario& s = b.scenario();
  bool ok = true;
  for_each_marginal_row(s, [&](Index x, Index x0, std::size_t k, Index y) {
    double diff = 0;
    for (std::uint32_t yk = 0; yk < s.outputs(); ++yk) {
      const Index yy = with_output(s, y, k, yk);
      diff += b.at(x, yy) - b.at(x0, yy);
    }
    if (std::abs(diff) > tol) ok = false;
  });
  return ok;
}

bool is_extremal(const ExactBox& b) {
  if (!is_normalized(b) || !is_no_signaling(b)) throw Error(ErrorCode::kInfeasible, "box is not a no-signaling box");
  const auto sys = build_constraints(b.scenario());
  // With the zero entries pinned by their nonnegativity rows, full rank of
  // the active set is full column rank of the equality rows on the support.
  std::vector<std::size_t> support;
  std::vector<std::ptrdiff_t> column(sys.variables, -1);
  for (std::size_t v = 0; v < sys.variables; ++v) {
    if (!b.entries()[v].is_zero()) {
      column[v] = static_cast<std::ptrdiff_t>(support.size());
      support.push_back(v);
    }
  }
  RationalMatrix m;
  for (const auto& row : sys.rows) {
    std::vector<Rational> r(support.size(), Rational(0));
    bool any = false;
    for (const auto& [v, coef] : row.terms) {
      if (column[v] >= 0) {
        r[static_cast<std::size_t>(column[v])] += Rational(coef);
        any = true;
      }
    }
    if (any) m.push_back(std::move(r));
  }
  return rank(std::move(m)) == support.size();
}

std::optional<Decomposition> decompose(const ExactBox& b) {
  const Scenario& s = b.scenario();
  if (s.players() != 3) throw Error(ErrorCode::kDomain, "decomposability is defined for three players");
  for (std::size_t r = 0; r < 3; ++r) {
    const std::size_t i = r == 0 ? 1 : 0;
    const std::size_t j = r == 2 ? 1 : 2;
    const Scenario pair({s.inputs(i), s.inputs(j)}, s.outputs());
    std::vector<std::uint32_t> map(s.inputs(r), 0);
    std::uint64_t maps = 1;
    for (std::uint32_t x = 0; x < s.inputs(r); ++x) maps *= s.outputs();

    for (std::uint64_t code = 0; code < maps; ++code) {
      std::uint64_t rem = code;
      for (std::uint32_t x = s.inputs(r); x-- > 0;) {
        map[x] = static_cast<std::uint32_t>(rem % s.outputs());
        rem /= s.outputs();
      }
      bool ok = true;
      ExactBox factor(pair);
      std::vector<bool> seen(pair.joint_inputs(), false);
      for (Index x = 0; x < s.joint_inputs() && ok; ++x) {
        const auto xr = s.input_of(x, r);
        const std::uint32_t px[] = {s.input_of(x, i), s.input_of(x, j)};
        const Index xp = pair.encode_input(px);
        for (Index y = 0; y < s.joint_outputs() && ok; ++y) {
          const Rational& p = b.at(x, y);
          if (s.output_of(y, r) != map[xr]) {
            ok = p.is_zero();
            continue;
          }
          const std::uint32_t py[] = {s.output_of(y, i), s.output_of(y, j)};
          const Index yp = pair.encode_output(py);
          if (!seen[xp]) {
            factor.at(xp, yp) = p;
          } else {
            ok = factor.at(xp, yp) == p;
          }
        }
        seen[xp] = true;
      }
      if (ok) return Decomposition{r, map, {i, j}, std::move(factor)};
    }
  }
  return std::nullopt;
}

bool is_decomposable(const ExactBox& b) { return decompose(b).has_value(); }

FacetReport facet_report(const GameFunction& f) {
  const Scenario& s = f.scenario();
  const auto count = deterministic_strategy_count(s);
  if (!count || *count > (std::uint64_t(1) << 16)) {
    throw Error(ErrorCode::kTooLarge, "deterministic box enumeration too large for " + s.to_string());
  }
  FacetReport report;
  report.classical_value = optimal_classical(f).value;
  RationalMatrix all, tight;
  for (std::uint64_t i = 0; i < *count; ++i) {
    const auto d = deterministic_strategy(s, i);
    auto point = deterministic_box(s, d).entries();
    if (evaluate_deterministic(f, d) == report.classical_value) tight.push_back(point);
    all.push_back(std::move(point));
  }
  report.polytope_dimension = affine_dimension(all);
  report.tight_dimension = affine_dimension(tight);
  report.facet = report.tight_dimension == report.polytope_dimension - 1;
  return report;
}

bool facet_check(const GameFunction& f) { return facet_report(f).facet; }

}  // namespace idg
