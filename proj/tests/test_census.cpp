#include "idgames/census.hpp"
#include "idgames/classical.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace idg;

namespace {

const CensusReport& census(const Scenario& s) {
  static std::map<std::string, CensusReport> cache;
  auto it = cache.find(s.to_string());
  if (it == cache.end()) {
    CensusOptions o;
    o.threads = 4;
    it = cache.emplace(s.to_string(), run_census(s, o)).first;
  }
  return it->second;
}

std::size_t total(const Histogram& h) {
  std::size_t n = 0;
  for (const auto& [k, v] : h) n += v;
  return n;
}

}  // namespace

TEST_CASE("2,2,2 has no gap") {
  const auto& r = census(Scenario::uniform(2, 2, 2));
  CHECK(r.total_functions == 256);
  CHECK(r.nontrivial_class_count == 0);
  CHECK(r.certificates_ok);
}

TEST_CASE("3,2,2 histograms") {
  const auto& r = census(Scenario::uniform(3, 2, 2));
  CHECK(r.class_count == 5876);
  CHECK(r.nontrivial_class_count == 68);
  CHECK(r.certificates_ok);
  CHECK(r.histogram_cl == Histogram{{Rational(1, 4), 45}, {Rational(3, 8), 23}});
  CHECK(r.histogram_ns == Histogram{{Rational(11, 40), 1}, {Rational(9, 32), 1}, {Rational(7, 24), 11},
                                    {Rational(3, 10), 1},  {Rational(5, 16), 30}, {Rational(1, 3), 1},
                                    {Rational(7, 16), 21}, {Rational(1, 2), 2}});
  CHECK(r.histogram_abs_gap == Histogram{{Rational(1, 40), 1}, {Rational(1, 32), 1}, {Rational(1, 24), 11},
                                         {Rational(1, 20), 1}, {Rational(1, 16), 51}, {Rational(1, 12), 1},
                                         {Rational(1, 8), 2}});
  CHECK(total(r.histogram_rel_gap) == 68);
  // 1/6 and 1/3 each appear once: the exact keys absorb near-equal decimals.
  CHECK(r.histogram_rel_gap.count(Rational(1, 6)) == 1);
  CHECK(r.histogram_rel_gap.count(Rational(1, 3)) == 1);
  REQUIRE(r.decomposable_count.has_value());
  CHECK(*r.decomposable_count == 53);
  for (const auto& c : r.classes) {
    if (c.nosignaling > c.classical) CHECK(c.decomposable.has_value());
  }
}

TEST_CASE("census is independent of the thread count") {
  const auto s = Scenario::uniform(2, 3, 2);
  CensusOptions one;
  one.threads = 1;
  const auto a = census_to_json(run_census(s, one), true);
  CHECK(a == census_to_json(census(s), true));
}

TEST_CASE("2,3,2 bounds hold on non-representative members") {
  const auto s = Scenario::uniform(2, 3, 2);
  const auto& r = census(s);
  std::vector<ClassBounds> gap;
  for (const auto& c : r.classes)
    if (c.nosignaling > c.classical) gap.push_back(c);
  REQUIRE(!gap.empty());
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const auto& c = gap[rng() % gap.size()];
    const auto rep = GameFunction::from_code(s, c.representative);
    GameFunction member = rep;
    while (member == rep) member = apply(random_element(s, rng), rep);
    CHECK(optimal_classical(member).value == c.classical);
    CHECK(optimal_ns(member).value == c.nosignaling);
    CHECK(c.classical == Rational(4, 9));
    CHECK(c.nosignaling == Rational(1, 2));
  }
}

TEST_CASE("report formats") {
  const auto& r = census(Scenario::uniform(3, 2, 2));
  const auto doc = census_to_json(r);
  CHECK(doc["class_count"] == 5876);
  CHECK(fraction_json(Rational(7, 24))["decimal"] == "0.291666667");
  CHECK(fraction_json(Rational(7, 24))["num"] == "7");
  const auto csv = census_to_csv(r);
  CHECK(csv.rfind("table,value,decimal,count\n", 0) == 0);
  CHECK(csv.find("ns,7/24,0.291666667,11") != std::string::npos);
}

TEST_CASE("oversized scenario is refused") {
  CHECK_THROWS_AS(run_census(Scenario::uniform(2, 4, 2)), Error);
}
