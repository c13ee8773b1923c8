#pragma once

#include "rolelogic/formula.hpp"

namespace rl {

// Shifts free de Bruijn indices >= cutoff by d. Counting is an index binder
// (its body sees one extra stack entry); the slot-rearranging operators are
// eliminated before any shifting is required (see normalize).
FPtr shift_indices(const FPtr& f, int d, int cutoff);

// Rewrites the slot-rearranging operators into pure index remappings:
// a slot-copy becomes body[#1,#2 := #2; #k := #(k-2)] and a slot-swap
// becomes body[#1 := #2, #2 := #1; #k := #(k-2)]. Semantics-preserving
// beta steps; the result contains neither operator.
FPtr eliminate_slot_ops(const FPtr& f);

// Reduces a well-typed core term to beta-normal form. Definitions bound via
// named lambdas are substituted away (capture-avoiding); afterwards every
// remaining lambda occurs only as the immediate argument of the existential
// or of the closure operator.
FPtr normalize(const FPtr& f);

// Checks the structural claim above; used as a post-assertion and in tests.
bool lambdas_only_under_binders(const FPtr& f);

}  // namespace rl
