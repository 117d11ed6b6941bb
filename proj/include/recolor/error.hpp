#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recolor {

enum class ErrorCode {
  InvalidGraph,
  InvalidColoring,
  InvalidSize,
  NotEnoughColors,
  NotPEO,
  NotWidth2,
  OmegaTooLarge,
  InvalidDecomposition,
  InvalidOrdering,
  LiftFailure,
  InvalidInput,
  ImproperStart,
  ImproperStep,
  NoOpStep,
  InvalidIndex,
  NoValidColor,
  AuditViolation,
  TooLarge,
  Io,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. `index()` carries the offending step
// or vertex when the error refers to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace recolor
