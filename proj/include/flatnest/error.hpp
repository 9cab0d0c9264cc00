#ifndef FLATNEST_ERROR_HPP
#define FLATNEST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flatnest {

/// Broad failure classes. The CLI maps them onto its exit codes.
enum class ErrorKind {
  invalid_argument,  // malformed call (wrong lengths, unknown labels, ...)
  parse,             // malformed text / JSON input
  validation,        // a mathematical precondition does not hold
  cap_exceeded,      // an explicit size cap was hit
  mismatch,          // two computations that must agree did not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace flatnest

#endif  // FLATNEST_ERROR_HPP
