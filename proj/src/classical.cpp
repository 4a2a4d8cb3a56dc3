#include "idgames/classical.hpp"

#include "idgames/error.hpp"

#include <limits>

namespace idg {
namespace {

constexpr std::uint64_t kMaxStrategies = std::uint64_t(1) << 26;

}  // namespace

std::optional<std::uint64_t> deterministic_strategy_count(const Scenario& s) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < s.players(); ++k) {
    for (std::uint32_t x = 0; x < s.inputs(k); ++x) {
      if (count > std::numeric_limits<std::uint64_t>::max() / s.outputs()) return std::nullopt;
      count *= s.outputs();
    }
  }
  return count;
}

DeterministicStrategy deterministic_strategy(const Scenario& s, std::uint64_t index) {
  const auto count = deterministic_strategy_count(s);
  if (!count || index >= *count) throw Error(ErrorCode::kRange, "strategy index out of range");
  std::vector<std::vector<std::uint32_t>> maps(s.players());
  for (std::size_t k = s.players(); k-- > 0;) {
    maps[k].resize(s.inputs(k));
    for (std::uint32_t x = s.inputs(k); x-- > 0;) {
      maps[k][x] = static_cast<std::uint32_t>(index % s.outputs());
      index /= s.outputs();
    }
  }
  return DeterministicStrategy(s, std::move(maps));
}

ClassicalResult optimal_classical(const GameFunction& f) {
  const Scenario& s = f.scenario();
  const std::size_t n = s.players();
  const auto total = deterministic_strategy_count(s);
  if (!total || *total > kMaxStrategies) {
    throw Error(ErrorCode::kTooLarge, "deterministic strategy space of " + s.to_string() + " too large");
  }
  const std::size_t last = n - 1;
  const std::uint32_t mo = s.outputs();
  const std::uint32_t m_last = s.inputs(last);

  std::uint64_t prefixes = 1;
  for (std::size_t k = 0; k < last; ++k) {
    for (std::uint32_t x = 0; x < s.inputs(k); ++x) prefixes *= mo;
  }

  // Joint output with the last player's digit removed, plus that digit.
  const Index last_stride = s.joint_outputs() / mo;
  std::vector<Index> rest(s.joint_inputs());
  std::vector<std::uint32_t> want_last(s.joint_inputs());
  std::vector<std::uint32_t> x_last(s.joint_inputs());
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    rest[x] = f(x) % last_stride;
    want_last[x] = static_cast<std::uint32_t>(f(x) / last_stride);
    x_last[x] = s.input_of(x, last);
  }

  std::vector<std::vector<std::uint32_t>> maps(n);
  for (std::size_t k = 0; k < n; ++k) maps[k].assign(s.inputs(k), 0);
  std::vector<std::uint32_t> counts(std::size_t(m_last) * mo);
  std::vector<Index> prefix_out(s.joint_inputs());

  std::int64_t best = -1;
  std::vector<std::vector<std::uint32_t>> best_maps;

  for (std::uint64_t p = 0; p < prefixes; ++p) {
    // Decode prefix p: last digit is the final input of player n-1.
    std::uint64_t rem = p;
    for (std::size_t k = last; k-- > 0;) {
      for (std::uint32_t x = s.inputs(k); x-- > 0;) {
        maps[k][x] = static_cast<std::uint32_t>(rem % mo);
        rem /= mo;
      }
    }
    std::fill(counts.begin(), counts.end(), 0U);
    for (Index x = 0; x < s.joint_inputs(); ++x) {
      Index y = 0, stride = 1;
      for (std::size_t k = 0; k < last; ++k, stride *= mo) y += maps[k][s.input_of(x, k)] * stride;
      if (y == rest[x]) ++counts[x_last[x] * mo + want_last[x]];
    }
    std::int64_t value = 0;
    for (std::uint32_t xl = 0; xl < m_last; ++xl) {
      std::uint32_t arg = 0;
      for (std::uint32_t y = 1; y < mo; ++y) {
        if (counts[xl * mo + y] > counts[xl * mo + arg]) arg = y;
      }
      maps[last][xl] = arg;
      value += counts[xl * mo + arg];
    }
    if (value > best) {
      best = value;
      best_maps = maps;
    }
  }
  return {Rational(best, static_cast<std::int64_t>(s.joint_inputs())), DeterministicStrategy(s, best_maps)};
}

}  // namespace idg
