#include "idgames/classical.hpp"
#include "idgames/evaluate.hpp"
#include "idgames/named_games.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/quantum.hpp"
#include "idgames/strategy_io.hpp"
#include "idgames/symmetry.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace idg;

namespace {

CMatrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

SeesawOptions opts(std::vector<int> dims, std::size_t restarts, std::uint64_t seed = 0) {
  SeesawOptions o;
  o.dims = std::move(dims);
  o.restarts = restarts;
  o.seed = seed;
  return o;
}

const double kAdd = (2 + std::sqrt(2.0)) / 8;

}  // namespace

TEST_CASE("Jacobi agrees with Eigen's Hermitian solver") {
  std::mt19937_64 rng(1);
  for (int d : {1, 2, 3, 5, 8, 16}) {
    const auto h = random_hermitian(d, rng);
    const auto mine = jacobi_eigen(h);
    const Eigen::SelfAdjointEigenSolver<CMatrix> ref(h);
    CHECK((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
    const CMatrix recon = mine.vectors * mine.values.cast<Complex>().asDiagonal() * mine.vectors.adjoint();
    CHECK((recon - h).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((mine.vectors.adjoint() * mine.vectors - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("positive projector") {
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  const auto p = positive_projector(h);
  CHECK(std::abs(p(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(p(1, 1)) < 1e-12);
}

TEST_CASE("Born boxes are normalized and no-signaling") {
  std::mt19937_64 rng(2);
  for (const auto& s : {Scenario::uniform(2, 3, 2), Scenario::uniform(3, 2, 2)}) {
    for (int t = 0; t < 5; ++t) {
      const auto qs = random_strategy(s, std::vector<int>(s.players(), 2), rng);
      validate(qs, s);
      const auto b = born_box(s, qs);
      CHECK(is_normalized(b, 1e-12));
      CHECK(is_no_signaling_approx(b, 1e-9));
    }
  }
}

TEST_CASE("product state with deterministic projectors is a deterministic box") {
  const auto s = Scenario::uniform(2, 2, 2);
  QuantumStrategy qs;
  qs.dims = {1, 1};
  qs.state = product_state({1, 1});
  const CMatrix one = CMatrix::Identity(1, 1), zero = CMatrix::Zero(1, 1);
  qs.effects = {{{one, zero}, {zero, one}}, {{zero, one}, {zero, one}}};
  const DeterministicStrategy d(s, {{0, 1}, {1, 1}});
  const auto b = born_box(s, qs);
  const auto expect = to_float(deterministic_box(s, d));
  for (std::size_t i = 0; i < b.entries().size(); ++i) CHECK(b.entries()[i] == doctest::Approx(expect.entries()[i]));
}

TEST_CASE("explicit strategies") {
  const auto add = addition_strategy();
  CHECK(quantum_value(games::addition(), add) == doctest::Approx(kAdd).epsilon(1e-12));
  CHECK(bell_functional_value(addition_functional(), games::addition().scenario(), add) ==
        doctest::Approx(kAdd).epsilon(1e-12));
  CHECK(is_no_signaling_approx(born_box(games::addition().scenario(), add), 1e-12));

  const double tri = quantum_value(games::tripartite(), tripartite_strategy());
  CHECK(tri == doctest::Approx(std::pow(std::cos(M_PI / 8), 2) / 2).epsilon(1e-12));
  CHECK(tri > 0.375);
  CHECK(tri <= 0.42683);

  const double sdp = quantum_value(games::highest_sdp_3(), highest_sdp_strategy());
  CHECK(sdp == doctest::Approx((1 + 1.5 + (std::sqrt(2.0) + 2) / 2) / 9).epsilon(1e-12));
}

TEST_CASE("correlator forms equal the game value on random boxes") {
  std::mt19937_64 rng(4);
  const auto add = games::addition();
  const auto facet = games::facet();
  for (int t = 0; t < 20; ++t) {
    const auto qs = random_strategy(add.scenario(), {2, 2}, rng);
    const auto b = born_box(add.scenario(), qs);
    CHECK(std::abs(bell_functional_value(addition_functional(), b) - winning_probability(add, b)) < 1e-12);
    CHECK(std::abs(bell_functional_value(facet_functional(), b) - winning_probability(facet, b)) < 1e-12);
  }
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto d = deterministic_strategy(add.scenario(), i * 13);
    const auto b = to_float(deterministic_box(add.scenario(), d));
    const double v = bell_functional_value(addition_functional(), b);
    CHECK(std::abs(v - evaluate_deterministic(add, d).to_double()) < 1e-12);
    CHECK(v <= 0.375 + 1e-12);
  }
}

TEST_CASE("seesaw reaches the addition value") {
  const auto r = seesaw(games::addition(), opts({2, 2}, 20));
  CHECK(r.value >= kAdd - 1e-6);
  CHECK(r.monotone);
  CHECK(std::abs(quantum_value(games::addition(), r.strategy) - r.value) < 1e-9);
  validate(r.strategy, games::addition().scenario());
}

TEST_CASE("seesaw in trivial dimension is classical") {
  for (const auto& name : {"highest-sdp-3", "facet", "tripartite"}) {
    const auto f = games::by_name(name);
    const auto cl = optimal_classical(f).value.to_double();
    const auto dims = std::vector<int>(f.scenario().players(), 1);
    CHECK(seesaw(f, opts(dims, 30)).value == doctest::Approx(cl).epsilon(1e-9));
    const auto two = std::vector<int>(f.scenario().players(), 2);
    CHECK(seesaw_fixed_state(f, product_state(two), opts(two, 30)).value == doctest::Approx(cl).epsilon(1e-9));
  }
}

TEST_CASE("seesaw is reproducible and thread-independent") {
  auto o = opts({2, 2}, 8, 77);
  const auto a = seesaw(games::facet(), o);
  o.threads = 4;
  const auto b = seesaw(games::facet(), o);
  CHECK(a.value == b.value);
  CHECK(a.restart_values == b.restart_values);
  CHECK(a.restart == b.restart);
}

TEST_CASE("strategy JSON round trip") {
  std::mt19937_64 rng(6);
  const auto s = Scenario::uniform(3, 2, 2);
  const auto qs = random_strategy(s, {2, 2, 2}, rng);
  const auto back = strategy_from_json(strategy_to_json(qs));
  CHECK(back.dims == qs.dims);
  CHECK((back.state - qs.state).cwiseAbs().maxCoeff() == 0.0);
  CHECK(quantum_value(games::tripartite(), back) == quantum_value(games::tripartite(), qs));
  CHECK_THROWS_AS(strategy_from_json(nlohmann::json::parse(R"({"dims":[2]})")), Error);
}

TEST_CASE("invalid strategies are rejected") {
  auto qs = addition_strategy();
  qs.state *= 2.0;
  CHECK_THROWS_AS(validate(qs, games::addition().scenario()), Error);
  qs = addition_strategy();
  qs.effects[0][0][0] *= 0.5;
  CHECK_THROWS_AS(validate(qs, games::addition().scenario()), Error);
}

TEST_CASE("relabelled strategy plays the relabelled game identically") {
  std::mt19937_64 rng(8);
  for (const auto& s : {Scenario::uniform(2, 3, 2), Scenario::uniform(3, 2, 2)}) {
    for (int t = 0; t < 10; ++t) {
      const auto f = GameFunction::from_code(s, rng() % *GameFunction::function_count(s));
      const auto g = random_element(s, rng);
      const auto qs = random_strategy(s, std::vector<int>(s.players(), 2), rng);
      CHECK(std::abs(quantum_value(apply(g, f), transform_strategy(g, s, qs)) - quantum_value(f, qs)) < 1e-12);
    }
  }
}
