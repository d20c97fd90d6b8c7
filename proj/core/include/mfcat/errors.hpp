#ifndef MFCAT_ERRORS_HPP
#define MFCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfcat {

// Exit codes used by the command-line tool. Each exception type below maps
// onto exactly one of them.
enum class ExitCode : int {
  kOk = 0,
  kParse = 2,
  kPrecondition = 3,
  kVerification = 4,
  kStabilization = 5,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode code() const noexcept = 0;
};

class ParseError : public Error {
 public:
  using Error::Error;
  ExitCode code() const noexcept override { return ExitCode::kParse; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  ExitCode code() const noexcept override { return ExitCode::kPrecondition; }
};

// Mixed-context arithmetic (elements built over different rings).
class ContextMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class VerificationError : public Error {
 public:
  using Error::Error;
  ExitCode code() const noexcept override { return ExitCode::kVerification; }
};

// A truncation-driven computation did not settle before its cap.
class StabilizationError : public Error {
 public:
  using Error::Error;
  ExitCode code() const noexcept override { return ExitCode::kStabilization; }
};

}  // namespace mfcat

#endif  // MFCAT_ERRORS_HPP
