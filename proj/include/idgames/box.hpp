#pragma once

#include "idgames/error.hpp"
#include "idgames/game.hpp"
#include "idgames/rational.hpp"
#include "idgames/scenario.hpp"

#include <cmath>
#include <vector>

namespace idg {

// Conditional distribution p(y|x) over joint outputs given joint inputs,
// stored row-major with one row per joint input.
template <class T>
class BasicBox {
public:
  using value_type = T;

  explicit BasicBox(Scenario s) : scenario_(std::move(s)) {
    entries_.assign(scenario_.joint_inputs() * scenario_.joint_outputs(), T(0));
  }
  BasicBox(Scenario s, std::vector<T> entries) : scenario_(std::move(s)), entries_(std::move(entries)) {
    if (entries_.size() != scenario_.joint_inputs() * scenario_.joint_outputs()) {
      throw Error(ErrorCode::kRange, "box entry count does not match scenario");
    }
  }

  const Scenario& scenario() const { return scenario_; }
  const std::vector<T>& entries() const { return entries_; }
  std::vector<T>& entries() { return entries_; }

  T& at(Index x, Index y) { return entries_[x * scenario_.joint_outputs() + y]; }
  const T& at(Index x, Index y) const { return entries_[x * scenario_.joint_outputs() + y]; }

  friend bool operator==(const BasicBox&, const BasicBox&) = default;

private:
  Scenario scenario_;
  std::vector<T> entries_;
};

using ExactBox = BasicBox<Rational>;
using FloatBox = BasicBox<double>;

ExactBox deterministic_box(const Scenario& s, const DeterministicStrategy& d);
ExactBox uniform_box(const Scenario& s);
FloatBox to_float(const ExactBox& b);

// Exact check: entries nonnegative and every row sums to 1.
bool is_normalized(const ExactBox& b);
bool is_normalized(const FloatBox& b, double tol = 1e-9);

}  // namespace idg
