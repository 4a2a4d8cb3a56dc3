#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idg {

enum class ErrorCode {
  kRange,
  kScenarioMismatch,
  kParse,
  kNotNormalized,
  kTooLarge,
  kDomain,
  kNonBinary,
  kInvalidStrategy,
  kInfeasible,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported as an Error carrying a stable code; the
// CLI prints the code as a machine-parsable prefix.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace idg
