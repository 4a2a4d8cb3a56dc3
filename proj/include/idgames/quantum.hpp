#pragma once

#include "idgames/box.hpp"
#include "idgames/game.hpp"
#include "idgames/symmetry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace idg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Pure shared state on the tensor product of the players' spaces (player 1
// is the leftmost factor) and, per player and input, one effect per output.
struct QuantumStrategy {
  std::vector<int> dims;
  CVector state;
  std::vector<std::vector<std::vector<CMatrix>>> effects;  // [player][input][output]

  int total_dim() const;
};

// Throws kInvalidStrategy unless the state is a unit vector and every
// measurement is a list of PSD effects summing to the identity.
void validate(const QuantumStrategy& qs, const Scenario& s, double tol = 1e-10);

// p(y|x) = <psi| E_{x1,y1} (x) ... (x) E_{xn,yn} |psi>.
FloatBox born_box(const Scenario& s, const QuantumStrategy& qs);
double quantum_value(const GameFunction& f, const QuantumStrategy& qs);

// Binary measurement {(I+A)/2, (I-A)/2} for a +-1 observable A.
std::vector<CMatrix> observable_effects(const CMatrix& a);

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

CVector phi_plus(int dim = 2);
CVector product_state(const std::vector<int>& dims);

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Eigenvalues ascending; columns of `vectors` are the eigenvectors.
struct HermitianEigen {
  Eigen::VectorXd values;
  CMatrix vectors;
  int sweeps = 0;
};
HermitianEigen jacobi_eigen(const CMatrix& h, double tol = 1e-12);

// Projector onto the span of eigenvectors with eigenvalue > 0.
CMatrix positive_projector(const CMatrix& h);

// Random unit state and random projective binary measurements.
QuantumStrategy random_strategy(const Scenario& s, const std::vector<int>& dims, std::mt19937_64& rng);

QuantumStrategy addition_strategy();
QuantumStrategy tripartite_strategy();
QuantumStrategy highest_sdp_strategy();

struct SeesawOptions {
  std::vector<int> dims;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_iterations = 10000;
  unsigned threads = 1;
};

struct SeesawResult {
  double value = 0;
  QuantumStrategy strategy;
  std::size_t restart = 0;     // index of the winning restart
  std::size_t iterations = 0;  // of the winning restart
  bool converged = true;       // every restart met tol before the cap
  bool monotone = true;        // no restart ever decreased by more than 1e-12
  std::vector<double> restart_values;
};

// Alternating best response for binary-output games: each measurement is the
// sign split of its conditional payoff operator, the state is the top
// eigenvector of the game operator.
SeesawResult seesaw(const GameFunction& f, const SeesawOptions& options);
// Same, with the state held fixed. options.dims must match the state.
SeesawResult seesaw_fixed_state(const GameFunction& f, const CVector& state, const SeesawOptions& options);

// The strategy that plays apply(g, f) exactly as qs plays f.
QuantumStrategy transform_strategy(const RelabellingElement& g, const Scenario& s, const QuantumStrategy& qs);

// Two-player binary correlator expression:
//   scale * (constant + sum coef * term), term one of <A_i B_m>, <A_i>, <B_m>.
struct BellExpression {
  enum class Kind { kCorrelator, kAlice, kBob };
  struct Term {
    Kind kind;
    std::uint32_t a;
    std::uint32_t b;
    double coef;
  };
  std::vector<Term> terms;
  double constant = 0;
  double scale = 1;
};

// Correlator forms of the addition game (four CHSH blocks) and of the facet
// game; on any no-signaling box they equal the winning probability.
BellExpression addition_functional();
BellExpression facet_functional();
double bell_functional_value(const BellExpression& expr, const FloatBox& b);
double bell_functional_value(const BellExpression& expr, const Scenario& s, const QuantumStrategy& qs);

}  // namespace idg
