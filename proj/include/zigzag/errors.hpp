#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zigzag {

// Raised when an operation's input contract is violated or a computation
// cannot proceed as requested. `code()` is a stable machine-readable slug
// ("range-exceeded", "not-prime", "divergent-integral", "insufficient-range",
// "divergent-parameters", "non-integral-result",
// "internal-integrality-violation", "invalid-argument") that the CLI maps to
// its exit-code contract.
class ContractError : public std::runtime_error {
 public:
  ContractError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace zigzag
