#include "idgames/game.hpp"

#include "idgames/box.hpp"
#include "idgames/error.hpp"
#include "idgames/evaluate.hpp"

#include <limits>

namespace idg {

GameFunction::GameFunction(Scenario scenario, std::vector<Index> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
  if (table_.size() != scenario_.joint_inputs()) {
    throw Error(ErrorCode::kRange, "function table length does not match joint input count");
  }
  for (Index y : table_) {
    if (y >= scenario_.joint_outputs()) throw Error(ErrorCode::kRange, "function value out of range");
  }
}

GameFunction GameFunction::constant(const Scenario& s, Index joint_output) {
  return GameFunction(s, std::vector<Index>(s.joint_inputs(), joint_output));
}

GameFunction GameFunction::from_rule(
    const Scenario& s,
    const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>& rule) {
  std::vector<Index> table(s.joint_inputs());
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    table[x] = s.encode_output(rule(s.decode_input(x)));
  }
  return GameFunction(s, std::move(table));
}

std::optional<Index> GameFunction::function_count(const Scenario& s) {
  Index count = 1;
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    if (count > std::numeric_limits<Index>::max() / s.joint_outputs()) return std::nullopt;
    count *= s.joint_outputs();
  }
  // Codes must stay strictly below 2^64 so the count itself is representable.
  return count;
}

GameFunction GameFunction::from_code(const Scenario& s, Index code) {
  const auto count = function_count(s);
  if (!count) throw Error(ErrorCode::kTooLarge, "function space exceeds 64-bit codes");
  if (code >= *count) throw Error(ErrorCode::kRange, "function code out of range");
  std::vector<Index> table(s.joint_inputs());
  for (auto& entry : table) {
    entry = code % s.joint_outputs();
    code /= s.joint_outputs();
  }
  return GameFunction(s, std::move(table));
}

Index GameFunction::code() const {
  if (!function_count(scenario_)) throw Error(ErrorCode::kTooLarge, "function space exceeds 64-bit codes");
  Index code = 0;
  for (auto it = table_.rbegin(); it != table_.rend(); ++it) {
    code = code * scenario_.joint_outputs() + *it;
  }
  return code;
}

DeterministicStrategy::DeterministicStrategy(const Scenario& s,
                                             std::vector<std::vector<std::uint32_t>> maps)
    : maps_(std::move(maps)) {
  if (maps_.size() != s.players()) throw Error(ErrorCode::kScenarioMismatch, "strategy player count");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    if (maps_[k].size() != s.inputs(k)) {
      throw Error(ErrorCode::kScenarioMismatch, "strategy input count for player " + std::to_string(k + 1));
    }
    for (auto y : maps_[k]) {
      if (y >= s.outputs()) throw Error(ErrorCode::kRange, "strategy output out of range");
    }
  }
}

DeterministicStrategy DeterministicStrategy::constant(const Scenario& s, std::uint32_t output) {
  std::vector<std::vector<std::uint32_t>> maps;
  for (std::size_t k = 0; k < s.players(); ++k) maps.emplace_back(s.inputs(k), output);
  return DeterministicStrategy(s, std::move(maps));
}

Index DeterministicStrategy::joint_output(const Scenario& s, Index x) const {
  Index y = 0;
  Index stride = 1;
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    y += maps_[k][s.input_of(x, k)] * stride;
    stride *= s.outputs();
  }
  return y;
}

InputDistribution::InputDistribution(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational total;
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw Error(ErrorCode::kNotNormalized, "negative input weight");
    total += w;
  }
  if (total != Rational(1)) throw Error(ErrorCode::kNotNormalized, "input weights do not sum to 1");
}

InputDistribution InputDistribution::uniform(const Scenario& s) {
  const auto n = static_cast<std::int64_t>(s.joint_inputs());
  return InputDistribution(std::vector<Rational>(s.joint_inputs(), Rational(1, n)));
}

ExactBox deterministic_box(const Scenario& s, const DeterministicStrategy& d) {
  ExactBox b(s);
  for (Index x = 0; x < s.joint_inputs(); ++x) b.at(x, d.joint_output(s, x)) = Rational(1);
  return b;
}

ExactBox uniform_box(const Scenario& s) {
  const auto n = static_cast<std::int64_t>(s.joint_outputs());
  return ExactBox(s, std::vector<Rational>(s.joint_inputs() * s.joint_outputs(), Rational(1, n)));
}

FloatBox to_float(const ExactBox& b) {
  std::vector<double> e;
  e.reserve(b.entries().size());
  for (const auto& v : b.entries()) e.push_back(v.to_double());
  return FloatBox(b.scenario(), std::move(e));
}

bool is_normalized(const ExactBox& b) {
  const auto& s = b.scenario();
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    Rational row;
    for (Index y = 0; y < s.joint_outputs(); ++y) {
      if (b.at(x, y).sign() < 0) return false;
      row += b.at(x, y);
    }
    if (row != Rational(1)) return false;
  }
  return true;
}

bool is_normalized(const FloatBox& b, double tol) {
  const auto& s = b.scenario();
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    double row = 0;
    for (Index y = 0; y < s.joint_outputs(); ++y) {
      if (b.at(x, y) < -tol) return false;
      row += b.at(x, y);
    }
    if (std::abs(row - 1.0) > tol) return false;
  }
  return true;
}

Rational winning_probability(const GameFunction& f, const ExactBox& b, const InputDistribution& q) {
  require_same_scenario(f.scenario(), b.scenario(), "winning_probability");
  if (q.weights().size() != f.scenario().joint_inputs()) {
    throw Error(ErrorCode::kScenarioMismatch, "input distribution size does not match scenario");
  }
  if (!is_normalized(b)) throw Error(ErrorCode::kNotNormalized, "box is not normalized");
  Rational w;
  for (Index x = 0; x < f.scenario().joint_inputs(); ++x) {
    const auto& p = b.at(x, f(x));
    if (!p.is_zero()) w += q.weights()[x] * p;
  }
  return w;
}

Rational winning_probability(const GameFunction& f, const ExactBox& b) {
  return winning_probability(f, b, InputDistribution::uniform(f.scenario()));
}

double winning_probability(const GameFunction& f, const FloatBox& b) {
  require_same_scenario(f.scenario(), b.scenario(), "winning_probability");
  double w = 0;
  for (Index x = 0; x < f.scenario().joint_inputs(); ++x) w += b.at(x, f(x));
  return w / static_cast<double>(f.scenario().joint_inputs());
}

Rational evaluate_deterministic(const GameFunction& f, const DeterministicStrategy& d) {
  const auto& s = f.scenario();
  if (d.maps().size() != s.players()) throw Error(ErrorCode::kScenarioMismatch, "strategy player count");
  for (std::size_t k = 0; k < s.players(); ++k) {
    if (d.maps()[k].size() != s.inputs(k)) throw Error(ErrorCode::kScenarioMismatch, "strategy shape");
  }
  std::int64_t hits = 0;
  for (Index x = 0; x < s.joint_inputs(); ++x) hits += d.joint_output(s, x) == f(x);
  return Rational(hits, static_cast<std::int64_t>(s.joint_inputs()));
}

}  // namespace idg
