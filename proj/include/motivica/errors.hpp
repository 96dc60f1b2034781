#pragma once

#include <stdexcept>
#include <string>

namespace motivica {

// Every failure the library can signal deliberately carries a stable name.
// Input errors (bad files, bad flags, malformed expressions) map to CLI
// exit code 1; computation errors (a well-posed request whose answer does
// not exist in the required form) map to exit code 2.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message, int exit_code)
      : std::runtime_error(message), name_(std::move(name)), exit_code_(exit_code) {}
  const std::string& name() const { return name_; }
  int exit_code() const { return exit_code_; }

private:
  std::string name_;
  int exit_code_;
};

#define MOTIVICA_INPUT_ERROR(NAME)                          \
  class NAME : public Error {                               \
  public:                                                   \
    explicit NAME(const std::string& message)               \
        : Error(#NAME, message, 1) {}                       \
  }

#define MOTIVICA_COMPUTE_ERROR(NAME)                        \
  class NAME : public Error {                               \
  public:                                                   \
    explicit NAME(const std::string& message)               \
        : Error(#NAME, message, 2) {}                       \
  }

// Input-side failures.
MOTIVICA_INPUT_ERROR(ParseError);
MOTIVICA_INPUT_ERROR(SchemaError);
MOTIVICA_INPUT_ERROR(ValidationError);
MOTIVICA_INPUT_ERROR(UnknownFixture);

// Computation-side failures.
MOTIVICA_COMPUTE_ERROR(NonDivisible);
MOTIVICA_COMPUTE_ERROR(NonTateClass);
MOTIVICA_COMPUTE_ERROR(MissingStratum);
MOTIVICA_COMPUTE_ERROR(MissingCover);
MOTIVICA_COMPUTE_ERROR(MissingCounts);
MOTIVICA_COMPUTE_ERROR(NotRegularAtInfinity);
MOTIVICA_COMPUTE_ERROR(PoleAtOne);
MOTIVICA_COMPUTE_ERROR(NotMassless);
MOTIVICA_COMPUTE_ERROR(ReconstructionFailed);
MOTIVICA_COMPUTE_ERROR(NonIntegralExpansion);

#undef MOTIVICA_INPUT_ERROR
#undef MOTIVICA_COMPUTE_ERROR

}  // namespace motivica
