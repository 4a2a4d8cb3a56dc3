#include "idgames/scenario.hpp"

#include "idgames/error.hpp"

#include <limits>
#include <sstream>

namespace idg {
namespace {

Index checked_mul(Index a, Index b) {
  if (b != 0 && a > std::numeric_limits<Index>::max() / b) {
    throw Error(ErrorCode::kTooLarge, "scenario does not fit a 64-bit index");
  }
  return a * b;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRange: return "E_RANGE";
    case ErrorCode::kScenarioMismatch: return "E_SCENARIO";
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kNotNormalized: return "E_NORMALIZATION";
    case ErrorCode::kTooLarge: return "E_TOO_LARGE";
    case ErrorCode::kDomain: return "E_DOMAIN";
    case ErrorCode::kNonBinary: return "E_NON_BINARY";
    case ErrorCode::kInvalidStrategy: return "E_STRATEGY";
    case ErrorCode::kInfeasible: return "E_INFEASIBLE";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

Scenario::Scenario(std::vector<std::uint32_t> inputs, std::uint32_t outputs)
    : inputs_(std::move(inputs)), outputs_(outputs) {
  if (inputs_.empty()) throw Error(ErrorCode::kDomain, "scenario needs at least one player");
  if (outputs_ < 1) throw Error(ErrorCode::kDomain, "scenario needs at least one output");
  for (auto m : inputs_) {
    if (m < 1) throw Error(ErrorCode::kDomain, "every player needs at least one input");
    input_stride_.push_back(joint_inputs_);
    joint_inputs_ = checked_mul(joint_inputs_, m);
    output_stride_.push_back(joint_outputs_);
    joint_outputs_ = checked_mul(joint_outputs_, outputs_);
  }
}

Scenario Scenario::uniform(std::size_t players, std::uint32_t inputs, std::uint32_t outputs) {
  return Scenario(std::vector<std::uint32_t>(players, inputs), outputs);
}

Scenario Scenario::parse(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "malformed scenario '" + text + "', expected n,m_i,m_o");
    }
  }
  if (parts.size() != 3 || parts[0] == 0 || parts[0] > 16 || parts[1] > 1024 || parts[2] > 1024) {
    throw Error(ErrorCode::kParse, "malformed scenario '" + text + "', expected n,m_i,m_o");
  }
  return uniform(parts[0], static_cast<std::uint32_t>(parts[1]), static_cast<std::uint32_t>(parts[2]));
}

bool Scenario::symmetric() const {
  for (auto m : inputs_) {
    if (m != inputs_.front()) return false;
  }
  return true;
}

Index Scenario::encode_input(std::span<const std::uint32_t> x) const {
  if (x.size() != players()) throw Error(ErrorCode::kRange, "input tuple has wrong length");
  Index idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] >= inputs_[k]) throw Error(ErrorCode::kRange, "input symbol out of range");
    idx += x[k] * input_stride_[k];
  }
  return idx;
}

std::vector<std::uint32_t> Scenario::decode_input(Index x) const {
  if (x >= joint_inputs_) throw Error(ErrorCode::kRange, "joint input index out of range");
  std::vector<std::uint32_t> out(players());
  for (std::size_t k = 0; k < players(); ++k) {
    out[k] = static_cast<std::uint32_t>(x % inputs_[k]);
    x /= inputs_[k];
  }
  return out;
}

std::uint32_t Scenario::input_of(Index x, std::size_t player) const {
  return static_cast<std::uint32_t>((x / input_stride_[player]) % inputs_[player]);
}

Index Scenario::encode_output(std::span<const std::uint32_t> y) const {
  if (y.size() != players()) throw Error(ErrorCode::kRange, "output tuple has wrong length");
  Index idx = 0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] >= outputs_) throw Error(ErrorCode::kRange, "output symbol out of range");
    idx += y[k] * output_stride_[k];
  }
  return idx;
}

std::vector<std::uint32_t> Scenario::decode_output(Index y) const {
  if (y >= joint_outputs_) throw Error(ErrorCode::kRange, "joint output index out of range");
  std::vector<std::uint32_t> out(players());
  for (std::size_t k = 0; k < players(); ++k) {
    out[k] = static_cast<std::uint32_t>(y % outputs_);
    y /= outputs_;
  }
  return out;
}

std::uint32_t Scenario::output_of(Index y, std::size_t player) const {
  return static_cast<std::uint32_t>((y / output_stride_[player]) % outputs_);
}

std::string Scenario::to_string() const {
  std::string s = std::to_string(players()) + ",";
  if (symmetric()) {
    s += std::to_string(inputs_.front());
  } else {
    s += "[";
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      if (k) s += " ";
      s += std::to_string(inputs_[k]);
    }
    s += "]";
  }
  return s + "," + std::to_string(outputs_);
}

void require_same_scenario(const Scenario& a, const Scenario& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::kScenarioMismatch,
                std::string(what) + ": scenario " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace idg
