#pragma once

#include "idgames/box.hpp"
#include "idgames/game.hpp"
#include "idgames/simplex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace idg {

// Equality system of the no-signaling polytope. Variable (x, y) has index
// x * joint_outputs + y. Rows are sparse with integer coefficients.
struct NSConstraintSystem {
  struct Row {
    std::vector<std::pair<std::size_t, int>> terms;
    int rhs = 0;
  };

  Scenario scenario;
  std::size_t variables = 0;
  std::size_t normalization_rows = 0;  // the first rows, one per joint input
  std::vector<Row> rows;
};

// Normalization rows plus, for every player k, every context of the others
// (their inputs and outputs) and every x_k > 0: the sum over y_k at x_k
// equals the sum over y_k at x_k = 0. Redundant rows are kept.
NSConstraintSystem build_constraints(const Scenario& s);

LinearProgram to_linear_program(const NSConstraintSystem& sys, const std::vector<Rational>& objective);

struct NSResult {
  Rational value;
  ExactBox witness;            // basic feasible solution of the LP
  LpSolution lp;
  Certificate certificate;     // exact strong-duality check of `lp`
};

// Exact optimum of the winning probability over no-signaling boxes (uniform
// inputs). Throws if an optimal LP fails its duality certificate.
NSResult optimal_ns(const GameFunction& f, const SimplexOptions& options = {});

bool is_no_signaling(const ExactBox& b);
// Tolerance-based check for floating boxes.
bool is_no_signaling_approx(const FloatBox& b, double tol = 1e-9);

// Vertex test: rank of the equality rows plus the tight nonnegativity rows
// equals the number of variables.
bool is_extremal(const ExactBox& b);

struct Decomposition {
  std::size_t deterministic_player = 0;
  std::vector<std::uint32_t> local_map;   // the deterministic player's outputs
  std::pair<std::size_t, std::size_t> pair;
  ExactBox bipartite;                     // box of the remaining pair
};

// Three-player boxes only: a split into (pair box) x (deterministic player).
std::optional<Decomposition> decompose(const ExactBox& b);
bool is_decomposable(const ExactBox& b);

struct FacetReport {
  Rational classical_value;
  int polytope_dimension = 0;   // affine dimension of all deterministic boxes
  int tight_dimension = 0;      // affine dimension of the optimal ones
  bool facet = false;           // tight_dimension == polytope_dimension - 1
};

FacetReport facet_report(const GameFunction& f);
bool facet_check(const GameFunction& f);

}  // namespace idg
