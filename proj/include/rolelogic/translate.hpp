#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rolelogic/fo.hpp"
#include "rolelogic/rl2.hpp"

namespace rl {

// Rewrites every counting quantifier so that the bound variable is free in
// the body or the body is the constant true. Semantics-preserving.
FOPtr ensure_counting_condition(const FOPtr& f);

// Renames bound variables into {x, y} so that the result is alpha-equivalent
// to the input and has the same node count. Free variables are untouched.
// Requires the counting condition and at most two free variables per
// subformula.
FOPtr d2_to_c2(const FOPtr& f);

struct AlternateOptions {
  // Abort with BudgetExceeded when the rewritten formula grows beyond this
  // many nodes; callers may fall back to the equisatisfiable variant.
  int node_budget = 100'000;
};

// Removes same-variable nested counting quantifiers by splitting bodies into
// canonical cubes and hoisting quantifier-free parts. Along every
// root-to-leaf path the bound variables then alternate. May grow the
// formula exponentially; see AlternateOptions.
FOPtr alternate(const FOPtr& f, const AlternateOptions& opts = {});

struct IntroducedPred {
  std::string name;       // fresh unary predicate P1, P2, ...
  FOPtr definition;       // forall v. P(v) <-> <extracted subformula>
};

// Linear-size equisatisfiable variant: each offending nested quantifier is
// replaced by a fresh unary predicate whose definition is conjoined at the
// top. The returned formula already contains the definitions.
std::pair<FOPtr, std::vector<IntroducedPred>> alternate_satpreserving(
    const FOPtr& f);

// Environment mapping variable names to slots for the index translation.
using SlotEnv = std::map<std::string, int>;

// Translates an alternation-normalized formula into index form. At every
// counting quantifier each remaining free variable of the body must sit in
// slot 1 (counting moves it to slot 2); otherwise AlternationViolated.
I2Ptr c2_to_i2(const FOPtr& f, const SlotEnv& env);

// Convenience: derives a feasible top-level environment (preferring
// {x:1, y:2}) and translates. Returns the environment used.
std::pair<I2Ptr, SlotEnv> c2_to_i2_auto(const FOPtr& f);
I2Ptr c2_to_i2(const FOPtr& f);

// Index form back to named form; slots are read off the environment and
// counting binds the complement of the variable in slot 1.
FOPtr i2_to_c2(const I2Ptr& f, const std::map<int, std::string>& env = {
                                   {1, "x"}, {2, "y"}});

// Index form into the index-free fragment, slot for slot.
R2Ptr i2_to_rl2(const I2Ptr& f);

// Index-free fragment into bounded-variable first-order form. The two free
// slots become y1 and y2; counting introduces y3, y4, ... Every subformula
// of the result has at most two free variables.
FOPtr rl2_to_d2(const R2Ptr& f);

// Full loop: through the bounded-variable, two-name and index forms and
// back. Top-level pieces whose counting bodies read slot 2 are translated
// under the swapped environment and rewrapped with a slot swap, so the
// result evaluates identically to the input at every pair environment.
R2Ptr rl2_loop(const R2Ptr& f, const AlternateOptions& opts = {});

}  // namespace rl
