#include "idgames/named_games.hpp"
#include "idgames/symmetry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace idg;

TEST_CASE("group orders") {
  CHECK(group_order(Scenario::uniform(2, 3, 2)) == 4608);
  CHECK(group_order(Scenario::uniform(3, 2, 2)) == 3072);
  CHECK(group_order(Scenario::uniform(1, 1, 2)) == 2);
}

TEST_CASE("identity, player swap and output flip") {
  const auto f = games::symmetric_3();
  const auto& s = f.scenario();
  CHECK(apply(RelabellingElement::identity(s), f) == f);

  auto swap = RelabellingElement::identity(s);
  swap.player_perm = {1, 0};
  CHECK(apply(swap, f) == f);

  const auto zero = GameFunction::constant(s, 0);
  auto flip = RelabellingElement::identity(s);
  for (auto& m : flip.output_maps[0]) m = {1, 0};
  CHECK(apply(flip, zero) == GameFunction::constant(s, 1));
}

TEST_CASE("composition and inverse act consistently") {
  const auto s = Scenario::uniform(2, 3, 2);
  std::mt19937_64 rng(11);
  const auto f = games::partial_entanglement();
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(s, rng);
    const auto b = random_element(s, rng);
    CHECK(apply(compose(b, a), f) == apply(b, apply(a, f)));
    CHECK(apply(inverse(a), apply(a, f)) == f);
  }
}

TEST_CASE("orbits") {
  const auto s = Scenario::uniform(2, 3, 2);
  const auto consts = orbit(GameFunction::constant(s, 0));
  // output maps may depend on the local input, so a constant reaches every
  // function whose outputs are local: 8 * 8
  CHECK(consts.size() == 64);
  CHECK(4608 % consts.size() == 0);
  const auto o = orbit(games::highest_sdp_3());
  CHECK(4608 % o.size() == 0);
  const OrbitEngine engine(s);
  CHECK(engine.orbit_codes(games::highest_sdp_3()).size() == o.size());
}

TEST_CASE("canonical form is a class invariant") {
  const auto s = Scenario::uniform(2, 3, 2);
  std::mt19937_64 rng(3);
  for (const auto& f : {games::highest_sdp_3(), games::dimension_witness(), games::symmetric_3()}) {
    const auto c = canonical_form(f);
    for (int t = 0; t < 10; ++t) CHECK(canonical_form(apply(random_element(s, rng), f)) == c);
  }
}

TEST_CASE("class enumeration partitions the function space") {
  for (const auto& s : {Scenario::uniform(2, 2, 2), Scenario::uniform(2, 3, 2)}) {
    const auto classes = enumerate_classes(s);
    const auto total = std::accumulate(classes.begin(), classes.end(), std::uint64_t{0},
                                       [](std::uint64_t acc, const EquivalenceClass& k) { return acc + k.orbit_size; });
    CHECK(total == *GameFunction::function_count(s));
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const auto& a, const auto& b) { return a.representative < b.representative; }));
  }
}
