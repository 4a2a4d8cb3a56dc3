#pragma once

#include "idgames/game.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace idg {

// One move of the equivalence group: player k is renamed player_perm[k], its
// input x becomes input_perms[k][x], and on input x its output y becomes
// output_maps[k][x][y]. Output maps are bijections, so plain output
// relabelling is the special case where the map ignores x.
struct RelabellingElement {
  std::vector<std::uint32_t> player_perm;
  std::vector<std::vector<std::uint32_t>> input_perms;
  std::vector<std::vector<std::vector<std::uint32_t>>> output_maps;

  static RelabellingElement identity(const Scenario& s);
  // Throws unless every component is a bijection of the right size and the
  // player permutation only exchanges players with equal input counts.
  void validate(const Scenario& s) const;

  friend bool operator==(const RelabellingElement&, const RelabellingElement&) = default;
};

// (second o first): apply(compose(b, a), f) == apply(b, apply(a, f)).
RelabellingElement compose(const RelabellingElement& second, const RelabellingElement& first);
RelabellingElement inverse(const RelabellingElement& g);
RelabellingElement random_element(const Scenario& s, std::mt19937_64& rng);

GameFunction apply(const RelabellingElement& g, const GameFunction& f);

// prod_k (m_i^(k)! * (m_o!)^(m_i^(k))) * n!  for symmetric scenarios; throws
// on overflow or when players have different input counts.
std::uint64_t group_order(const Scenario& s);

// Explicit list of group elements, indexed 0..order-1.
RelabellingElement group_element(const Scenario& s, std::uint64_t index);

// Precomputed action of every group element on integer-encoded functions.
// Applying element e to code c costs one table lookup per joint input.
class OrbitEngine {
public:
  explicit OrbitEngine(const Scenario& s);

  const Scenario& scenario() const { return scenario_; }
  std::uint64_t order() const { return order_; }
  Index apply(std::uint64_t element, const Index* table) const;
  // All distinct codes in the orbit of f, sorted ascending.
  std::vector<Index> orbit_codes(const GameFunction& f) const;

private:
  Scenario scenario_;
  std::uint64_t order_;
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<Index> contribution_;  // [element][x][y]
};

std::vector<GameFunction> orbit(const GameFunction& f);
GameFunction canonical_form(const GameFunction& f);

struct EquivalenceClass {
  Index representative;  // smallest code in the orbit
  std::uint64_t orbit_size;
};

// Orbit walk over a visited bitmap of the whole function space; classes are
// returned sorted by representative.
std::vector<EquivalenceClass> enumerate_classes(const Scenario& s);

}  // namespace idg
