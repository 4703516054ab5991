#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

enum class Errc {
  Syntax,
  VariableOutOfRange,
  ArityMismatch,
  NotInKernel,
  UncertifiedInput,
  NotInTorus,
  NotInvertible,
  JacobianNotConstant,
  DeterminantNotOne,
  SingularMatrix,
  VariableDependenceViolation,
  NotAnAutomorphism,
  TermLimit,
};

inline const char *errc_name(Errc c) {
  switch (c) {
  case Errc::Syntax: return "SyntaxError";
  case Errc::VariableOutOfRange: return "VariableOutOfRange";
  case Errc::ArityMismatch: return "ArityMismatch";
  case Errc::NotInKernel: return "NotInKernel";
  case Errc::UncertifiedInput: return "UncertifiedInput";
  case Errc::NotInTorus: return "NotInTorus";
  case Errc::NotInvertible: return "NotInvertible";
  case Errc::JacobianNotConstant: return "JacobianNotConstant";
  case Errc::DeterminantNotOne: return "DeterminantNotOne";
  case Errc::SingularMatrix: return "SingularMatrix";
  case Errc::VariableDependenceViolation: return "VariableDependenceViolation";
  case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
  case Errc::TermLimit: return "TermLimitExceeded";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string &msg, std::size_t offset = no_offset)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  // byte offset into the offending input, or no_offset
  std::size_t offset() const { return offset_; }

private:
  Errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string &msg,
                              std::size_t offset = Error::no_offset) {
  throw Error(code, msg, offset);
}

} // namespace cremona
