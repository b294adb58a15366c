#pragma once
#include <stdexcept>
#include <string>

namespace cohtaylor {

// Error taxonomy; exit_code maps each class to the CLI contract:
//   2 = parse/type errors, 3 = summability/validity, 4 = internal invariant or oracle mismatch.
enum class Errc {
  Parse,
  Type,
  NotSummable,
  Validity,
  OracleMismatch,
  NonIntegralCoefficient,
  Internal,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "Parse";
    case Errc::Type: return "Type";
    case Errc::NotSummable: return "NotSummable";
    case Errc::Validity: return "Validity";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

inline int exit_code(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::Type:
      return 2;
    case Errc::NotSummable:
    case Errc::Validity:
      return 3;
    case Errc::OracleMismatch:
    case Errc::NonIntegralCoefficient:
    case Errc::Internal:
      return 4;
  }
  return 4;
}

}  // namespace cohtaylor
