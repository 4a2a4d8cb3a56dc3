#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace idg {

using Index = std::uint64_t;

// Number of players, per-player input alphabet sizes and the common output
// alphabet size. Joint inputs and joint outputs are mixed-radix integers with
// player 1 as the least significant digit.
class Scenario {
public:
  Scenario(std::vector<std::uint32_t> inputs, std::uint32_t outputs);
  // n players with m_i inputs each.
  static Scenario uniform(std::size_t players, std::uint32_t inputs, std::uint32_t outputs);
  // "n,m_i,m_o", as accepted by the CLI.
  static Scenario parse(const std::string& text);

  std::size_t players() const { return inputs_.size(); }
  std::uint32_t inputs(std::size_t player) const { return inputs_[player]; }
  const std::vector<std::uint32_t>& input_sizes() const { return inputs_; }
  std::uint32_t outputs() const { return outputs_; }
  bool symmetric() const;

  Index joint_inputs() const { return joint_inputs_; }
  Index joint_outputs() const { return joint_outputs_; }

  Index encode_input(std::span<const std::uint32_t> x) const;
  std::vector<std::uint32_t> decode_input(Index x) const;
  std::uint32_t input_of(Index x, std::size_t player) const;

  Index encode_output(std::span<const std::uint32_t> y) const;
  std::vector<std::uint32_t> decode_output(Index y) const;
  std::uint32_t output_of(Index y, std::size_t player) const;

  std::string to_string() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

private:
  std::vector<std::uint32_t> inputs_;
  std::uint32_t outputs_;
  Index joint_inputs_ = 1;
  Index joint_outputs_ = 1;
  std::vector<Index> input_stride_;
  std::vector<Index> output_stride_;
};

void require_same_scenario(const Scenario& a, const Scenario& b, const char* what);

}  // namespace idg
