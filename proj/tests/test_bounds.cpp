#include "idgames/box.hpp"
#include "idgames/classical.hpp"
#include "idgames/evaluate.hpp"
#include "idgames/generic.hpp"
#include "idgames/named_games.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/simplex.hpp"
#include "idgames/symmetry.hpp"
#include "idgames/verify.hpp"

#include <doctest.h>

#include <random>

using namespace idg;

namespace {

// PR box on players 1,2 (y1 xor y2 = x1 and x2); player 3 answers 0 if present.
ExactBox pr_box(const Scenario& s) {
  ExactBox b(s);
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    for (Index y = 0; y < s.joint_outputs(); ++y) {
      const auto in = s.decode_input(x);
      const auto out = s.decode_output(y);
      if (s.players() == 3 && out[2] != 0) continue;
      if ((out[0] ^ out[1]) == (in[0] & in[1])) b.at(x, y) = Rational(1, 2);
    }
  }
  return b;
}

}  // namespace

TEST_CASE("classical optima") {
  CHECK(optimal_classical(games::highest_sdp_3()).value == Rational(4, 9));
  CHECK(optimal_classical(games::addition()).value == Rational(3, 8));
  CHECK(optimal_classical(games::tripartite()).value == Rational(3, 8));
  CHECK(optimal_classical(games::class25()).value == Rational(1, 4));
  CHECK(optimal_classical(games::symmetric_5()).value == Rational(10, 25));
  CHECK(optimal_classical(GameFunction::constant(Scenario::uniform(2, 3, 2), 3)).value == 1);
}

TEST_CASE("classical witness attains the optimum") {
  for (const auto& g : games::all()) {
    const auto f = g.make();
    const auto r = optimal_classical(f);
    CHECK(evaluate_deterministic(f, r.witness) == r.value);
  }
}

TEST_CASE("classical optimum matches brute force over all strategy tuples") {
  const auto s = Scenario::uniform(2, 3, 2);
  std::mt19937_64 rng(5);
  const auto n = *deterministic_strategy_count(s);
  for (int t = 0; t < 10; ++t) {
    const auto f = GameFunction::from_code(s, rng() % *GameFunction::function_count(s));
    Rational best = 0;
    for (std::uint64_t i = 0; i < n; ++i) best = std::max(best, evaluate_deterministic(f, deterministic_strategy(s, i)));
    CHECK(optimal_classical(f).value == best);
  }
}

TEST_CASE("constraint system sizes") {
  CHECK(build_constraints(Scenario::uniform(2, 2, 2)).variables == 16);
  CHECK(build_constraints(Scenario::uniform(2, 3, 2)).variables == 36);
  CHECK(build_constraints(Scenario::uniform(3, 2, 2)).variables == 64);
  CHECK(is_no_signaling(pr_box(Scenario::uniform(2, 2, 2))));
}

TEST_CASE("no-signaling optima are certified") {
  struct Case {
    GameFunction f;
    Rational v;
  };
  for (const auto& [f, v] : {Case{games::highest_sdp_3(), Rational(1, 2)}, Case{games::addition(), Rational(1, 2)},
                             Case{games::class25(), Rational(1, 3)},
                             Case{GameFunction::constant(Scenario::uniform(2, 3, 2), 1), Rational(1)}}) {
    const auto r = optimal_ns(f);
    CHECK(r.value == v);
    CHECK(r.certificate.ok());
    CHECK(is_no_signaling(r.witness));
    CHECK(winning_probability(f, r.witness) == v);
  }
}

TEST_CASE("ordering cl <= ns and relabelling invariance") {
  const auto s = Scenario::uniform(2, 3, 2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto f = GameFunction::from_code(s, rng() % *GameFunction::function_count(s));
    const auto g = random_element(s, rng);
    const auto cl = optimal_classical(f).value;
    const auto ns = optimal_ns(f).value;
    CHECK(cl <= ns);
    CHECK(optimal_classical(apply(g, f)).value == cl);
    CHECK(optimal_ns(apply(g, f)).value == ns);
  }
}

TEST_CASE("no-signaling membership") {
  const auto s = Scenario::uniform(2, 2, 2);
  CHECK(is_no_signaling(parity_box(games::highest_sdp_3())));
  CHECK(is_no_signaling(deterministic_box(s, DeterministicStrategy(s, {{0, 1}, {1, 1}}))));
  ExactBox copy(s);  // player 1 outputs player 2's input
  for (Index x = 0; x < 4; ++x) {
    const auto in = s.decode_input(x);
    const std::uint32_t out[2] = {in[1], 0};
    copy.at(x, s.encode_output(out)) = 1;
  }
  CHECK_FALSE(is_no_signaling(copy));
}

TEST_CASE("extremality") {
  const auto s = Scenario::uniform(2, 2, 2);
  CHECK(is_extremal(deterministic_box(s, DeterministicStrategy(s, {{0, 1}, {1, 0}}))));
  CHECK(is_extremal(pr_box(s)));
  CHECK_FALSE(is_extremal(uniform_box(s)));
  CHECK(is_extremal(games::class25_box()));
}

TEST_CASE("decomposability") {
  const auto s = Scenario::uniform(3, 2, 2);
  const auto d = decompose(pr_box(s));
  REQUIRE(d.has_value());
  CHECK(d->deterministic_player == 2);
  CHECK(is_decomposable(deterministic_box(s, DeterministicStrategy(s, {{0, 1}, {1, 1}, {0, 0}}))));
  CHECK_FALSE(is_decomposable(games::class25_box()));
  CHECK(winning_probability(games::class25(), games::class25_box()) == Rational(1, 3));
}

TEST_CASE("facet test") {
  CHECK(facet_check(games::facet()));
  CHECK_FALSE(facet_check(games::highest_sdp_3()));
  CHECK_FALSE(facet_check(GameFunction::constant(Scenario::uniform(2, 3, 2), 0)));
}

TEST_CASE("simplex on small programs") {
  // max x + y  s.t. x + y + s = 1
  LinearProgram lp;
  lp.rows = 1;
  lp.cols = 3;
  lp.a = {1, 1, 1};
  lp.b = {1};
  lp.c = {1, 1, 0};
  const auto sol = solve_simplex(lp);
  CHECK(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == 1);
  CHECK(certify(lp, sol).ok());

  LinearProgram bad = lp;  // no nonnegative solution
  bad.b = {-1};
  CHECK(solve_simplex(bad).status == LpStatus::kInfeasible);

  LinearProgram open;  // max x  s.t. x - y = 0
  open.rows = 1;
  open.cols = 2;
  open.a = {1, -1};
  open.b = {0};
  open.c = {1, 0};
  CHECK(solve_simplex(open).status == LpStatus::kUnbounded);
}

TEST_CASE("early pivot stop is caught by the certificate") {
  SimplexOptions sabotage;
  sabotage.pivot_limit = 2;
  const auto f = games::highest_sdp_3();
  const auto& s = f.scenario();
  const auto sys = build_constraints(s);
  std::vector<Rational> obj(sys.variables, Rational(0));
  for (Index x = 0; x < s.joint_inputs(); ++x) obj[x * s.joint_outputs() + f(x)] = Rational(1, 9);
  const auto lp = to_linear_program(sys, obj);
  const auto sol = solve_simplex(lp, sabotage);
  CHECK(sol.status == LpStatus::kPivotLimit);
  CHECK_FALSE(certify(lp, sol).ok());
  CHECK_FALSE(optimal_ns(f, sabotage).certificate.ok());
}

TEST_CASE("rational arithmetic spills to big values and back") {
  Rational big(std::int64_t{1} << 62);
  big *= Rational(std::int64_t{1} << 62);
  CHECK_FALSE(big.is_small());
  big /= Rational(std::int64_t{1} << 62);
  CHECK(big.is_small());
  CHECK(big == Rational(std::int64_t{1} << 62));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational(7, 24).to_decimal(6) == "0.291667");
  CHECK(Rational(1, 3) > Rational(3, 10));
}

TEST_CASE("verification fails when the LP solver is sabotaged") {
  VerifyOptions o;
  o.criteria = {10};
  o.simplex.pivot_limit = 3;
  bool failed = false;
  for (const auto& s : summarize(verify_paper(o))) failed = failed || !s.passed();
  CHECK(failed);
}
