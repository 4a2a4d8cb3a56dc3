#include "idgames/box.hpp"
#include "idgames/error.hpp"
#include "idgames/evaluate.hpp"
#include "idgames/game_io.hpp"
#include "idgames/generic.hpp"
#include "idgames/named_games.hpp"

#include <doctest.h>

#include <array>
#include <random>

using namespace idg;

TEST_CASE("joint input encoding, player 1 least significant") {
  const auto s23 = Scenario::uniform(2, 3, 2);
  std::array<std::uint32_t, 2> zero{0, 0}, x21{2, 1};
  CHECK(s23.encode_input(zero) == 0);
  CHECK(s23.encode_input(x21) == 5);
  std::array<std::uint32_t, 3> ones{1, 1, 1};
  CHECK(Scenario::uniform(3, 2, 2).encode_input(ones) == 7);
  CHECK(s23.decode_input(5) == std::vector<std::uint32_t>{2, 1});
  std::array<std::uint32_t, 2> bad{3, 0};
  CHECK_THROWS_AS(s23.encode_input(bad), Error);
}

TEST_CASE("scenario parsing") {
  CHECK(Scenario::parse("3,2,2") == Scenario::uniform(3, 2, 2));
  CHECK_THROWS_AS(Scenario::parse("2,x,2"), Error);
}

TEST_CASE("winning probability examples") {
  const auto f = games::highest_sdp_3();
  const auto& s = f.scenario();
  const auto zeros = DeterministicStrategy::constant(s, 0);
  CHECK(winning_probability(f, deterministic_box(s, zeros)) == Rational(4, 9));
  CHECK(evaluate_deterministic(f, zeros) == Rational(4, 9));
  CHECK(evaluate_deterministic(games::addition(), DeterministicStrategy::constant(games::addition().scenario(), 0)) ==
        Rational(1, 4));

  const auto s2 = Scenario::uniform(2, 3, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    const auto g = GameFunction::from_code(s2, rng() % *GameFunction::function_count(s2));
    CHECK(winning_probability(g, uniform_box(s2)) == Rational(1, 4));
    CHECK(winning_probability(g, parity_box(g)) == Rational(1, 2));
  }
  const auto c = GameFunction::constant(s2, 2);
  CHECK(evaluate_deterministic(c, DeterministicStrategy(s2, {{0, 0, 0}, {1, 1, 1}})) == 1);
}

TEST_CASE("non-uniform input distribution") {
  const auto f = games::highest_sdp_3();
  std::vector<Rational> w(9, Rational(0));
  w[0] = 1;  // x = (0,0) maps to (0,0)
  const auto zeros = deterministic_box(f.scenario(), DeterministicStrategy::constant(f.scenario(), 0));
  CHECK(winning_probability(f, zeros, InputDistribution(w)) == 1);
  std::vector<Rational> bad(9, Rational(1, 10));
  CHECK_THROWS_AS(InputDistribution{bad}, Error);
}

TEST_CASE("unnormalized box is rejected") {
  const auto f = games::highest_sdp_3();
  ExactBox b(f.scenario());
  CHECK_THROWS_AS(winning_probability(f, b), Error);
}

TEST_CASE("table parsing and round trip") {
  const auto add = games::addition();
  std::array<std::uint32_t, 2> x11{1, 1};
  const auto y = add.scenario().decode_output(add(add.scenario().encode_input(x11)));
  CHECK(y[1] == 1);
  CHECK(y[0] == 0);

  for (const auto& g : games::all()) {
    const auto f = g.make();
    CHECK(game_from_json(game_to_json(f)) == f);
    if (f.scenario().players() == 2) CHECK(parse_table(serialize_table(f)) == f);
  }

  try {
    parse_table("0 | 0,0 0,0 0,0\n1 | 0,0 2,0 1,1\n2 | 0,1 0,1 1,1\n");
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRange);
  }
  CHECK_THROWS_AS(parse_table("0 | 0,0 0,0\n1 | 0,0\n"), Error);
}

TEST_CASE("function codes") {
  const auto s = Scenario::uniform(2, 2, 2);
  CHECK(*GameFunction::function_count(s) == 256);
  for (Index c : {Index{0}, Index{17}, Index{255}}) CHECK(GameFunction::from_code(s, c).code() == c);
  CHECK_THROWS_AS(GameFunction::from_code(s, 256), Error);
}
