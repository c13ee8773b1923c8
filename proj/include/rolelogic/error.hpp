#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "rolelogic/span.hpp"

namespace rl {

enum class ErrorKind {
  UnboundName,
  TypeMismatch,
  StackUnderflow,
  NotInFragment,
  TooManyFreeVars,
  AlternationViolated,
  ArityMismatch,
  Syntax,
  OutOfUniverse,
  DuplicateDecl,
  DuplicateProc,
  UnknownClaimTarget,
  UnresolvedCall,
  SeqInSpecBody,
  BudgetExceeded,
  UnknownTag,
  NonRL2Operator,
  Io,
  Internal,
};

const char* to_string(ErrorKind k);

// Single exception type for the whole toolkit. `path` identifies the
// offending subterm as a /-separated child-index path from the root.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourceSpan span = {},
        std::string path = {})
      : std::runtime_error(format(kind, message, span, path)),
        kind_(kind),
        span_(std::move(span)),
        path_(std::move(path)) {}

  ErrorKind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  const std::string& path() const { return path_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            const SourceSpan& span, const std::string& path);

  ErrorKind kind_;
  SourceSpan span_;
  std::string path_;
};

}  // namespace rl
