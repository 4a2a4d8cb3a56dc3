#pragma once

#include "idgames/box.hpp"
#include "idgames/game.hpp"

namespace idg {

// Sum over x of q(x) p(f(x)|x). Throws on scenario mismatch or an
// unnormalized box.
Rational winning_probability(const GameFunction& f, const ExactBox& b, const InputDistribution& q);
Rational winning_probability(const GameFunction& f, const ExactBox& b);
double winning_probability(const GameFunction& f, const FloatBox& b);

// Fraction of joint inputs on which the strategy's output equals f.
Rational evaluate_deterministic(const GameFunction& f, const DeterministicStrategy& d);

}  // namespace idg
