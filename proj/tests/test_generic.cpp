#include "idgames/evaluate.hpp"
#include "idgames/generic.hpp"
#include "idgames/named_games.hpp"
#include "idgames/nosignaling.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace idg;

TEST_CASE("parity box wins with 2^(1-n) on every input") {
  std::mt19937_64 rng(12);
  for (const auto& s : {Scenario::uniform(2, 3, 2), Scenario::uniform(3, 2, 2), Scenario::uniform(4, 2, 2)}) {
    std::vector<Index> table(s.joint_inputs());
    for (auto& y : table) y = rng() % s.joint_outputs();
    const GameFunction f(s, table);
    const auto b = parity_box(f);
    const Rational floor(1, std::int64_t{1} << (s.players() - 1));
    for (Index x = 0; x < s.joint_inputs(); ++x) CHECK(b.at(x, f(x)) == floor);
    CHECK(winning_probability(f, b) == floor);
    CHECK(is_no_signaling(b));
    // single-player marginals are uniform
    for (Index x = 0; x < s.joint_inputs(); ++x) {
      Rational zero = 0;
      for (Index y = 0; y < s.joint_outputs(); ++y)
        if (s.output_of(y, 0) == 0) zero += b.at(x, y);
      CHECK(zero == Rational(1, 2));
    }
  }
  CHECK_THROWS_AS(parity_box(GameFunction::constant(Scenario::uniform(2, 2, 3), 0)), Error);
}

TEST_CASE("hstar") {
  for (int n = 1; n <= 4; ++n) CHECK(std::abs(hstar(std::ldexp(1.0, -n), n) - n) < 1e-12);
  CHECK(hstar(1, 3) == doctest::Approx(0));
  CHECK(hstar(0.5, 1) == doctest::Approx(1));
  CHECK(hstar(0.375, 2) < 2);
  CHECK_THROWS_AS(hstar(1.5, 2), Error);
  // concave in omega
  for (double w = 0.05; w < 0.9; w += 0.05) CHECK(hstar(w, 2) >= (hstar(w - 0.05, 2) + hstar(w + 0.05, 2)) / 2 - 1e-12);
}

TEST_CASE("encoding bound") {
  const auto b = encoding_bound(2, 64, 0.375);
  CHECK(b.log_total == doctest::Approx(2.0 * 64 * 64));
  CHECK(b.log_fraction_bound == doctest::Approx(128 + (hstar(0.375, 2) - 2) * 4096));
  CHECK(b.log_fraction_bound < -96);
  CHECK(b.log_fraction_bound > -98);
  CHECK(encoding_bound(2, 10, 0.25).log_fraction_bound == doctest::Approx(20));
  CHECK(encoding_bound(2, 4, 0.375).log_fraction_bound > 0);
  const auto curve = counting_curve(2, 0.375, 40, 80);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].log_fraction_bound < 0);
    if (i > 0) CHECK(curve[i].log_fraction_bound < curve[i - 1].log_fraction_bound);
  }
  CHECK(counting_curve_csv(curve).rfind("n,m,omega,", 0) == 0);
}

TEST_CASE("sampled classical values") {
  const auto ex = empirical_gap_sample(2, 3, 0, 0, Rational(1, 16));
  CHECK(ex.exhaustive);
  CHECK(ex.samples == 262144);
  CHECK(ex.ns_floor == Rational(1, 2));

  const auto a = empirical_gap_sample(2, 5, 2000, 42, Rational(1, 16), 1);
  const auto b = empirical_gap_sample(2, 5, 2000, 42, Rational(1, 16), 4);
  CHECK(a.classical == b.classical);
  CHECK(a.mean_classical == b.mean_classical);

  const auto c = empirical_gap_sample(2, 6, 2000, 42, Rational(1, 16), 4);
  CHECK(c.mean_classical < a.mean_classical);
  CHECK(a.mean_classical < ex.mean_classical);
}
