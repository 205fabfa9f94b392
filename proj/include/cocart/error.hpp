#pragma once

#include <stdexcept>
#include <string>

namespace cocart {

// Error taxonomy shared by the library, the C API and the CLI. Negative
// mathematical verdicts are *not* errors; these are raised only for bad
// inputs, exhausted search budgets, or contract violations.
enum class ErrorKind {
  Parse,             // malformed bundle text
  Resolve,           // dangling object/morphism name
  Law,               // table violates category/magmal laws
  MissingStructure,  // command needs a bundle block that is absent
  SizeLimit,         // enumeration candidate space exceeds the configured bound
  NotInvertible,     // a required inverse does not exist
  InvariantViolated, // inputs break a stated precondition or internal contract
  Io,
  Usage,
};

class ToolkitError : public std::runtime_error {
public:
  ToolkitError(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

struct ParseError : ToolkitError {
  explicit ParseError(std::string m) : ToolkitError(ErrorKind::Parse, std::move(m)) {}
};
struct ResolveError : ToolkitError {
  explicit ResolveError(std::string m) : ToolkitError(ErrorKind::Resolve, std::move(m)) {}
};
struct LawError : ToolkitError {
  explicit LawError(std::string m) : ToolkitError(ErrorKind::Law, std::move(m)) {}
};
struct MissingStructureError : ToolkitError {
  explicit MissingStructureError(std::string m)
      : ToolkitError(ErrorKind::MissingStructure, std::move(m)) {}
};
struct SizeLimitError : ToolkitError {
  explicit SizeLimitError(std::string m) : ToolkitError(ErrorKind::SizeLimit, std::move(m)) {}
};
struct NotInvertibleError : ToolkitError {
  explicit NotInvertibleError(std::string m)
      : ToolkitError(ErrorKind::NotInvertible, std::move(m)) {}
};
struct InvariantViolatedError : ToolkitError {
  explicit InvariantViolatedError(std::string m)
      : ToolkitError(ErrorKind::InvariantViolated, std::move(m)) {}
};
struct IoError : ToolkitError {
  explicit IoError(std::string m) : ToolkitError(ErrorKind::Io, std::move(m)) {}
};
struct UsageError : ToolkitError {
  explicit UsageError(std::string m) : ToolkitError(ErrorKind::Usage, std::move(m)) {}
};

} // namespace cocart
