#include "rolelogic/error.hpp"

namespace rl {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundName: return "unbound name";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::StackUnderflow: return "stack underflow";
    case ErrorKind::NotInFragment: return "not in fragment";
    case ErrorKind::TooManyFreeVars: return "too many free variables";
    case ErrorKind::AlternationViolated: return "alternation violated";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::OutOfUniverse: return "element outside universe";
    case ErrorKind::DuplicateDecl: return "duplicate declaration";
    case ErrorKind::DuplicateProc: return "duplicate procedure";
    case ErrorKind::UnknownClaimTarget: return "unknown claim target";
    case ErrorKind::UnresolvedCall: return "unresolved call";
    case ErrorKind::SeqInSpecBody: return "sequential composition in spec body";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::UnknownTag: return "unknown vocabulary tag";
    case ErrorKind::NonRL2Operator: return "operator outside the two-slot fragment";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

std::string Error::format(ErrorKind kind, const std::string& message,
                          const SourceSpan& span, const std::string& path) {
  std::string s;
  if (span.known()) s += span.str() + ": ";
  s += to_string(kind);
  if (!message.empty()) s += ": " + message;
  if (!path.empty()) s += " (at " + path + ")";
  return s;
}

}  // namespace rl
