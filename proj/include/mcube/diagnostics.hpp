#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcube {

struct SrcSpan {
  uint32_t line = 0, col = 0;
  bool valid() const { return line > 0; }
};

enum class Severity : uint8_t { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  uint32_t line = 0, col = 0;
  std::string message;
  std::vector<std::string> notes;
};

// Thrown by the parser, resolver, and typechecker; the driver catches it and
// renders exactly one primary diagnostic.
struct DiagError : std::runtime_error {
  Diagnostic diag;
  explicit DiagError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}
};

[[noreturn]] inline void fail_at(uint32_t line, uint32_t col, std::string msg,
                                 std::vector<std::string> notes = {}) {
  throw DiagError(Diagnostic{Severity::Error, line, col, std::move(msg), std::move(notes)});
}

// Signals a kernel bug (ill-scoped index, impossible value shape); never a
// user-facing condition.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mcube
