#pragma once

#include <stdexcept>
#include <string>

namespace qg {

// Machine-readable failure categories surfaced by library operations.
enum class Errc {
  NotLatin,
  OutOfRange,
  NotIdempotent,
  NotSemisymmetric,
  OrderTooSmall,
  EmptyQuasigroup,
  InvalidTripleSystem,
  SearchBudgetExceeded,
  ClosureCapExceeded,
  TableCapExceeded,
  NotInStabilizer,
  UnboundVariable,
  NotInvertible,
  ModuleCheckFailed,
  ParseError,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qg
