#pragma once

#include "rolelogic/formula.hpp"
#include "rolelogic/type.hpp"

namespace rl {

// Replaces every bare occurrence of a relation symbol r with ctx(r) = rel k
// (k >= 1) by r #k ... #1, and likewise the bare equality constant by
// id #2 #1. Occurrences already in function position, and symbols wrapped in
// an applied lambda chain (the explicit-argument idiom (lam^j r) i_j ... i_1),
// are left alone. Idempotent.
FPtr expand_default_args(const FPtr& f, const TypeContext& ctx);

enum class DesugarMode {
  // Counting stays a primitive constructor.
  KeepCounting,
  // Counting is rewritten to nested existentials over distinct witnesses.
  // That form only agrees with the primitive for bodies that do not read
  // slot 2, which is the shape the rewrite was designed for.
  ExpandCounting,
};

// Rewrites all sugar constructors into the core language. The result
// contains only core constructors; see DesugarMode for the counting choice.
FPtr desugar(const FPtr& f, DesugarMode mode = DesugarMode::KeepCounting);

}  // namespace rl
