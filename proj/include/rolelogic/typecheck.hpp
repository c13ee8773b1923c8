#pragma once

#include "rolelogic/formula.hpp"
#include "rolelogic/type.hpp"

namespace rl {

// Infers the unique simple type of a term. Named variables are looked up in
// ctx; de Bruijn indices always have type obj. The existential takes an
// argument of type rel 1 and the closure operator maps rel 2 to rel 2.
// Sugar constructors are accepted with their standard derived typings.
// Throws UnboundName / TypeMismatch with the path to the offending subterm.
Type typecheck(const FPtr& f, const TypeContext& ctx);

}  // namespace rl
