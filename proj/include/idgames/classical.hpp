#pragma once

#include "idgames/game.hpp"

#include <cstdint>
#include <optional>

namespace idg {

struct ClassicalResult {
  Rational value;
  DeterministicStrategy witness;
};

// Number of deterministic strategy tuples, prod_k m_o^(m_i^(k)), when it fits
// 64 bits.
std::optional<std::uint64_t> deterministic_strategy_count(const Scenario& s);

// Strategy tuples in lexicographic order of (a_1(0), a_1(1), ..., a_n(m-1)).
DeterministicStrategy deterministic_strategy(const Scenario& s, std::uint64_t index);

// Exact optimum over all deterministic strategy tuples. Ties resolve to the
// lexicographically smallest tuple. Players 1..n-1 are enumerated; the last
// player's best response is separable per input and taken directly.
ClassicalResult optimal_classical(const GameFunction& f);

}  // namespace idg
