#include "idgames/quantum.hpp"

#include "idgames/error.hpp"
#include "idgames/parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace idg {
namespace {

// Strides of the tensor index with player 1 most significant.
std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> st(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) st[k - 1] = st[k] * static_cast<std::size_t>(dims[k]);
  return st;
}

std::size_t product(const std::vector<int>& dims) {
  std::size_t d = 1;
  for (int v : dims) d *= static_cast<std::size_t>(v);
  return d;
}

// (I (x) .. (x) m (x) .. (x) I) v with m acting on factor k.
CVector apply_local(const CVector& v, const std::vector<int>& dims, const std::vector<std::size_t>& st,
                    std::size_t k, const CMatrix& m) {
  const std::size_t dk = static_cast<std::size_t>(dims[k]);
  const std::size_t stride = st[k];
  CVector out = CVector::Zero(v.size());
  const std::size_t total = static_cast<std::size_t>(v.size());
  for (std::size_t base = 0; base < total; ++base) {
    if ((base / stride) % dk != 0) continue;
    for (std::size_t r = 0; r < dk; ++r) {
      Complex acc = 0;
      for (std::size_t c = 0; c < dk; ++c) {
        const Complex e = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (e != Complex(0)) acc += e * v(static_cast<Eigen::Index>(base + c * stride));
      }
      out(static_cast<Eigen::Index>(base + r * stride)) = acc;
    }
  }
  return out;
}

// Partial trace over every factor but k of |phi><psi|.
CMatrix reduced(const CVector& phi, const CVector& psi, const std::vector<int>& dims,
                const std::vector<std::size_t>& st, std::size_t k) {
  const std::size_t dk = static_cast<std::size_t>(dims[k]);
  const std::size_t stride = st[k];
  CMatrix r = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const std::size_t total = static_cast<std::size_t>(phi.size());
  for (std::size_t base = 0; base < total; ++base) {
    if ((base / stride) % dk != 0) continue;
    for (std::size_t i = 0; i < dk; ++i) {
      const Complex a = phi(static_cast<Eigen::Index>(base + i * stride));
      if (a == Complex(0)) continue;
      for (std::size_t j = 0; j < dk; ++j) {
        r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            a * std::conj(psi(static_cast<Eigen::Index>(base + j * stride)));
      }
    }
  }
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

bool is_psd(const CMatrix& m, double tol) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  return jacobi_eigen(m).values.minCoeff() >= -tol;
}

CMatrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = d == 1 ? Complex(normal(rng), 0) : Complex(normal(rng), normal(rng));
  }
  return (m + m.adjoint()) / 2.0;
}

CVector random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(d));
  for (auto& c : v) c = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

std::vector<CMatrix> deterministic_effects(int dim, std::uint32_t output, std::uint32_t outputs) {
  std::vector<CMatrix> e(outputs, CMatrix::Zero(dim, dim));
  e[output] = CMatrix::Identity(dim, dim);
  return e;
}

// One seesaw run from a random start.
struct Run {
  double value = 0;
  QuantumStrategy strategy;
  std::size_t iterations = 0;
  bool converged = false;
  bool monotone = true;
};

class Seesaw {
public:
  Seesaw(const GameFunction& f, const SeesawOptions& o) : f_(f), s_(f.scenario()), o_(o), st_(strides_of(o.dims)) {
    if (s_.outputs() != 2) throw Error(ErrorCode::kNonBinary, "seesaw needs binary outputs");
    if (o.dims.size() != s_.players()) throw Error(ErrorCode::kRange, "one dimension per player is required");
    for (int d : o.dims) {
      if (d < 1) throw Error(ErrorCode::kRange, "dimensions must be positive");
    }
    if (o.restarts < 1) throw Error(ErrorCode::kRange, "at least one restart is required");
  }

  Run run(std::size_t restart, const CVector* fixed_state) const {
    std::seed_seq seq{static_cast<std::uint32_t>(o_.seed), static_cast<std::uint32_t>(o_.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    Run r;
    auto& qs = r.strategy;
    qs = random_strategy(s_, o_.dims, rng);
    if (fixed_state) qs.state = *fixed_state;

    double prev = quantum_value(f_, qs);
    for (r.iterations = 1; r.iterations <= o_.max_iterations; ++r.iterations) {
      if (!fixed_state) update_state(qs);
      for (std::size_t k = 0; k < s_.players(); ++k) update_player(qs, k);
      const double v = quantum_value(f_, qs);
      if (v < prev - 1e-12) r.monotone = false;
      const double gain = v - prev;
      prev = std::max(prev, v);
      if (gain < o_.tol) {
        r.converged = true;
        break;
      }
    }
    r.iterations = std::min(r.iterations, o_.max_iterations);
    r.value = quantum_value(f_, qs);
    return r;
  }

private:
  CMatrix winning_operator(const QuantumStrategy& qs, Index x) const {
    CMatrix op = qs.effects[0][s_.input_of(x, 0)][f_.output(x, 0)];
    for (std::size_t k = 1; k < s_.players(); ++k) op = kron(op, qs.effects[k][s_.input_of(x, k)][f_.output(x, k)]);
    return op;
  }

  void update_state(QuantumStrategy& qs) const {
    const auto d = static_cast<Eigen::Index>(product(qs.dims));
    CMatrix w = CMatrix::Zero(d, d);
    for (Index x = 0; x < s_.joint_inputs(); ++x) w += winning_operator(qs, x);
    const auto eig = jacobi_eigen(w);
    qs.state = eig.vectors.col(d - 1);
    qs.state /= qs.state.norm();
  }

  void update_player(QuantumStrategy& qs, std::size_t k) const {
    const int dk = qs.dims[k];
    std::vector<CMatrix> diff(s_.inputs(k), CMatrix::Zero(dk, dk));
    for (Index x = 0; x < s_.joint_inputs(); ++x) {
      CVector phi = qs.state;
      for (std::size_t j = 0; j < s_.players(); ++j) {
        if (j != k) phi = apply_local(phi, qs.dims, st_, j, qs.effects[j][s_.input_of(x, j)][f_.output(x, j)]);
      }
      const CMatrix g = reduced(phi, qs.state, qs.dims, st_, k);
      if (f_.output(x, k) == 0) {
        diff[s_.input_of(x, k)] += g;
      } else {
        diff[s_.input_of(x, k)] -= g;
      }
    }
    for (std::uint32_t a = 0; a < s_.inputs(k); ++a) {
      const CMatrix h = (diff[a] + diff[a].adjoint()) / 2.0;
      const CMatrix e0 = positive_projector(h);
      qs.effects[k][a] = {e0, CMatrix::Identity(dk, dk) - e0};
    }
  }

  const GameFunction& f_;
  const Scenario& s_;
  const SeesawOptions& o_;
  std::vector<std::size_t> st_;
};

SeesawResult run_seesaw(const GameFunction& f, const SeesawOptions& options, const CVector* fixed) {
  const Seesaw engine(f, options);
  std::vector<Run> runs(options.restarts);
  parallel_for(options.restarts, options.threads, [&](std::size_t i) { runs[i] = engine.run(i, fixed); });
  SeesawResult result;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    result.restart_values.push_back(runs[i].value);
    result.converged = result.converged && runs[i].converged;
    result.monotone = result.monotone && runs[i].monotone;
    if (i == 0 || runs[i].value > result.value) {
      result.value = runs[i].value;
      result.restart = i;
      result.iterations = runs[i].iterations;
    }
  }
  result.strategy = std::move(runs[result.restart].strategy);
  return result;
}

}  // namespace

int QuantumStrategy::total_dim() const { return static_cast<int>(product(dims)); }

void validate(const QuantumStrategy& qs, const Scenario& s, double tol) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidStrategy, what); };
  if (qs.dims.size() != s.players() || qs.effects.size() != s.players()) fail("strategy does not match the player count");
  for (int d : qs.dims) {
    if (d < 1) fail("dimensions must be positive");
  }
  if (qs.state.size() != qs.total_dim()) fail("state size does not match the dimensions");
  if (std::abs(qs.state.norm() - 1.0) > tol) fail("state is not normalized");
  for (std::size_t k = 0; k < s.players(); ++k) {
    if (qs.effects[k].size() != s.inputs(k)) fail("wrong number of measurements for a player");
    const CMatrix id = CMatrix::Identity(qs.dims[k], qs.dims[k]);
    for (const auto& meas : qs.effects[k]) {
      if (meas.size() != s.outputs()) fail("wrong number of effects in a measurement");
      CMatrix sum = CMatrix::Zero(qs.dims[k], qs.dims[k]);
      for (const auto& e : meas) {
        if (e.rows() != qs.dims[k] || e.cols() != qs.dims[k]) fail("effect has the wrong size");
        if (!is_psd(e, tol)) fail("effect is not positive semidefinite");
        sum += e;
      }
      if ((sum - id).cwiseAbs().maxCoeff() > tol) fail("effects do not sum to the identity");
    }
  }
}

FloatBox born_box(const Scenario& s, const QuantumStrategy& qs) {
  validate(qs, s);
  const auto st = strides_of(qs.dims);
  FloatBox box(s);
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    for (Index y = 0; y < s.joint_outputs(); ++y) {
      CVector phi = qs.state;
      for (std::size_t k = 0; k < s.players(); ++k) {
        phi = apply_local(phi, qs.dims, st, k, qs.effects[k][s.input_of(x, k)][s.output_of(y, k)]);
      }
      box.at(x, y) = std::max(0.0, qs.state.dot(phi).real());
    }
  }
  return box;
}

double quantum_value(const GameFunction& f, const QuantumStrategy& qs) {
  const Scenario& s = f.scenario();
  const auto st = strides_of(qs.dims);
  double total = 0;
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    CVector phi = qs.state;
    for (std::size_t k = 0; k < s.players(); ++k) {
      phi = apply_local(phi, qs.dims, st, k, qs.effects[k][s.input_of(x, k)][f.output(x, k)]);
    }
    total += qs.state.dot(phi).real();
  }
  return total / static_cast<double>(s.joint_inputs());
}

std::vector<CMatrix> observable_effects(const CMatrix& a) {
  const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
  return {(id + a) / 2.0, (id - a) / 2.0};
}

namespace pauli {
CMatrix identity() { return CMatrix::Identity(2, 2); }
CMatrix x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
CMatrix z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

CVector phi_plus(int dim) {
  CVector v = CVector::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) v(i * dim + i) = 1.0 / std::sqrt(static_cast<double>(dim));
  return v;
}

CVector product_state(const std::vector<int>& dims) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(product(dims)));
  v(0) = 1;
  return v;
}

HermitianEigen jacobi_eigen(const CMatrix& h, double tol) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw Error(ErrorCode::kDomain, "eigendecomposition needs a square matrix");
  CMatrix a = (h + h.adjoint()) / 2.0;
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());
  HermitianEigen out;
  for (; out.sweeps < 100; ++out.sweeps) {
    double off = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(2 * off) <= tol * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag < std::numeric_limits<double>::min()) continue;
        const Complex phase = a(p, q) / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        // J: J_pp = J_qq = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}.
        const Complex spq = s * phase;
        const Complex sqp = -s * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + sqp * akq;
          a(k, q) = spq * akp + c * akq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + sqp * vkq;
          v(k, q) = spq * vkp + c * vkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(sqp) * aqk;
          a(q, k) = std::conj(spq) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

CMatrix positive_projector(const CMatrix& h) {
  const auto eig = jacobi_eigen(h);
  CMatrix p = CMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (eig.values(i) > 0) p += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  }
  return p;
}

QuantumStrategy random_strategy(const Scenario& s, const std::vector<int>& dims, std::mt19937_64& rng) {
  if (s.outputs() != 2) throw Error(ErrorCode::kNonBinary, "random strategies have binary outputs");
  if (dims.size() != s.players()) throw Error(ErrorCode::kRange, "one dimension per player is required");
  QuantumStrategy qs;
  qs.dims = dims;
  qs.effects.resize(s.players());
  for (std::size_t k = 0; k < s.players(); ++k) {
    if (dims[k] < 1) throw Error(ErrorCode::kRange, "dimensions must be positive");
    for (std::uint32_t a = 0; a < s.inputs(k); ++a) {
      const CMatrix e0 = positive_projector(random_hermitian(dims[k], rng));
      qs.effects[k].push_back({e0, CMatrix::Identity(dims[k], dims[k]) - e0});
    }
  }
  qs.state = random_unit(product(dims), rng);
  return qs;
}

QuantumStrategy addition_strategy() {
  using namespace pauli;
  const double r = std::numbers::sqrt2;
  const CMatrix a0 = x(), a1 = z();
  const CMatrix b0 = (x() - z()) / r, b1 = (-x() - z()) / r;
  QuantumStrategy qs;
  qs.dims = {2, 2};
  qs.state = phi_plus();
  qs.effects = {{observable_effects(a0), observable_effects(a1), observable_effects(-a0), observable_effects(-a1)},
                {observable_effects(b0), observable_effects(b1), observable_effects(-b0), observable_effects(-b1)}};
  return qs;
}

namespace {
// Optimal XOR-game pair on |phi+>: outputs agree unless both inputs are 1.
std::vector<CMatrix> chsh_alice(int input) { return observable_effects(input == 0 ? pauli::z() : pauli::x()); }
std::vector<CMatrix> chsh_bob(int input) {
  const double r = std::numbers::sqrt2;
  return observable_effects(input == 0 ? CMatrix((pauli::z() + pauli::x()) / r) : CMatrix((pauli::z() - pauli::x()) / r));
}
}  // namespace

QuantumStrategy tripartite_strategy() {
  QuantumStrategy qs;
  qs.dims = {2, 2, 1};
  qs.state = phi_plus();
  qs.effects = {{chsh_alice(1), chsh_alice(0)},
                {chsh_bob(1), chsh_bob(0)},
                {deterministic_effects(1, 0, 2), deterministic_effects(1, 0, 2)}};
  return qs;
}

QuantumStrategy highest_sdp_strategy() {
  QuantumStrategy qs;
  qs.dims = {2, 2};
  qs.state = phi_plus();
  qs.effects = {{deterministic_effects(2, 0, 2), chsh_alice(1), chsh_alice(0)},
                {deterministic_effects(2, 0, 2), chsh_bob(0), chsh_bob(1)}};
  return qs;
}

SeesawResult seesaw(const GameFunction& f, const SeesawOptions& options) { return run_seesaw(f, options, nullptr); }

SeesawResult seesaw_fixed_state(const GameFunction& f, const CVector& state, const SeesawOptions& options) {
  if (static_cast<std::size_t>(state.size()) != product(options.dims)) {
    throw Error(ErrorCode::kInvalidStrategy, "fixed state does not match the dimensions");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) throw Error(ErrorCode::kInvalidStrategy, "fixed state is not normalized");
  return run_seesaw(f, options, &state);
}

QuantumStrategy transform_strategy(const RelabellingElement& g, const Scenario& s, const QuantumStrategy& qs) {
  g.validate(s);
  validate(qs, s);
  const std::size_t n = s.players();
  QuantumStrategy out;
  out.dims.resize(n);
  out.effects.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t to = g.player_perm[k];
    out.dims[to] = qs.dims[k];
    out.effects[to].resize(s.inputs(k));
    for (std::uint32_t a = 0; a < s.inputs(k); ++a) {
      auto& meas = out.effects[to][g.input_perms[k][a]];
      meas.resize(s.outputs());
      for (std::uint32_t y = 0; y < s.outputs(); ++y) meas[g.output_maps[k][a][y]] = qs.effects[k][a][y];
    }
  }
  const auto old_st = strides_of(qs.dims);
  const auto new_st = strides_of(out.dims);
  out.state = CVector::Zero(qs.state.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(qs.state.size()); ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t digit = (i / old_st[k]) % static_cast<std::size_t>(qs.dims[k]);
      j += digit * new_st[g.player_perm[k]];
    }
    out.state(static_cast<Eigen::Index>(j)) = qs.state(static_cast<Eigen::Index>(i));
  }
  return out;
}

namespace {

BellExpression::Term corr(std::uint32_t i, std::uint32_t m, double c) {
  return {BellExpression::Kind::kCorrelator, i, m, c};
}

// coef * (-<Ai Bm> + <Ai Bn> + <Aj Bm> + <Aj Bn>)
void add_chsh(BellExpression& e, double coef, std::uint32_t i, std::uint32_t j, std::uint32_t m, std::uint32_t n) {
  e.terms.push_back(corr(i, m, -coef));
  e.terms.push_back(corr(i, n, coef));
  e.terms.push_back(corr(j, m, coef));
  e.terms.push_back(corr(j, n, coef));
}

}  // namespace

BellExpression addition_functional() {
  BellExpression e;
  add_chsh(e, -1, 0, 1, 0, 1);
  add_chsh(e, 1, 2, 3, 0, 1);
  add_chsh(e, 1, 0, 1, 2, 3);
  add_chsh(e, -1, 2, 3, 2, 3);
  e.constant = 16;
  e.scale = 1.0 / 64;
  return e;
}

BellExpression facet_functional() {
  BellExpression e;
  add_chsh(e, -1, 1, 0, 1, 0);
  add_chsh(e, 1, 1, 0, 3, 2);
  add_chsh(e, 1, 2, 3, 1, 0);
  add_chsh(e, 1, 2, 3, 3, 2);
  e.terms.push_back(corr(3, 0, -2));
  e.terms.push_back(corr(3, 2, -2));
  e.terms.push_back({BellExpression::Kind::kAlice, 2, 0, 2});
  e.terms.push_back({BellExpression::Kind::kAlice, 3, 0, 2});
  e.constant = 16;
  e.scale = 1.0 / 64;
  return e;
}

double bell_functional_value(const BellExpression& expr, const FloatBox& b) {
  const Scenario& s = b.scenario();
  if (s.players() != 2 || s.outputs() != 2) throw Error(ErrorCode::kDomain, "correlator expressions need two binary players");
  auto check = [&](std::uint32_t v, std::size_t k) {
    if (v >= s.inputs(k)) throw Error(ErrorCode::kRange, "correlator index out of range");
  };
  auto p = [&](std::uint32_t i, std::uint32_t m, std::uint32_t y1, std::uint32_t y2) {
    const std::uint32_t x[] = {i, m};
    const std::uint32_t y[] = {y1, y2};
    return b.at(s.encode_input(x), s.encode_output(y));
  };
  double total = expr.constant;
  for (const auto& t : expr.terms) {
    switch (t.kind) {
      case BellExpression::Kind::kCorrelator:
        check(t.a, 0);
        check(t.b, 1);
        total += t.coef * (p(t.a, t.b, 0, 0) + p(t.a, t.b, 1, 1) - p(t.a, t.b, 0, 1) - p(t.a, t.b, 1, 0));
        break;
      case BellExpression::Kind::kAlice:
        check(t.a, 0);
        total += t.coef * (p(t.a, 0, 0, 0) + p(t.a, 0, 0, 1) - p(t.a, 0, 1, 0) - p(t.a, 0, 1, 1));
        break;
      case BellExpression::Kind::kBob:
        check(t.b, 1);
        total += t.coef * (p(0, t.b, 0, 0) + p(0, t.b, 1, 0) - p(0, t.b, 0, 1) - p(0, t.b, 1, 1));
        break;
    }
  }
  return expr.scale * total;
}

double bell_functional_value(const BellExpression& expr, const Scenario& s, const QuantumStrategy& qs) {
  return bell_functional_value(expr, born_box(s, qs));
}

}  // namespace idg
