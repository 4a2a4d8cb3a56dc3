#pragma once

#include "idgames/rational.hpp"
#include "idgames/scenario.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace idg {

// A total function from joint inputs to joint outputs. The table stores the
// joint output index for every joint input.
class GameFunction {
public:
  GameFunction(Scenario scenario, std::vector<Index> table);
  static GameFunction constant(const Scenario& s, Index joint_output);
  // Builds the table from a per-input rule returning the output tuple.
  static GameFunction from_rule(
      const Scenario& s,
      const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>& rule);

  // Mixed-radix integer encoding: sum over x of table[x] * (m_o^n)^x.
  // Available when the function space fits 64 bits.
  static std::optional<Index> function_count(const Scenario& s);
  static GameFunction from_code(const Scenario& s, Index code);
  Index code() const;

  const Scenario& scenario() const { return scenario_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index x) const { return table_[x]; }
  std::uint32_t output(Index x, std::size_t player) const {
    return scenario_.output_of(table_[x], player);
  }

  friend bool operator==(const GameFunction&, const GameFunction&) = default;

private:
  Scenario scenario_;
  std::vector<Index> table_;
};

// Per player, a map from local input to local output.
class DeterministicStrategy {
public:
  DeterministicStrategy(const Scenario& s, std::vector<std::vector<std::uint32_t>> maps);
  static DeterministicStrategy constant(const Scenario& s, std::uint32_t output = 0);

  const std::vector<std::vector<std::uint32_t>>& maps() const { return maps_; }
  std::uint32_t operator()(std::size_t player, std::uint32_t input) const {
    return maps_[player][input];
  }
  Index joint_output(const Scenario& s, Index x) const;

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;

private:
  std::vector<std::vector<std::uint32_t>> maps_;
};

class InputDistribution {
public:
  explicit InputDistribution(std::vector<Rational> weights);
  static InputDistribution uniform(const Scenario& s);

  const std::vector<Rational>& weights() const { return weights_; }

private:
  std::vector<Rational> weights_;
};

}  // namespace idg
