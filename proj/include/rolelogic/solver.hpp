#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rolelogic/fo.hpp"
#include "rolelogic/rl2.hpp"
#include "rolelogic/structure.hpp"

namespace rl {

// threshold constraint over literals, optionally activated by a guard
// literal (0 = unconditional): guard -> (sum of satisfied lits) OP k.
struct CardConstraint {
  enum class Kind { Geq, Leq };
  int guard = 0;
  Kind kind = Kind::Geq;
  int k = 0;
  std::vector<int> lits;
};

// Propositional rendering of a formula at one domain size. Variable 1 is
// pinned true; atom variables map predicate instances, the rest are
// definition variables for subformula instances.
struct GroundProblem {
  int domain_size = 0;
  int num_vars = 1;
  std::map<std::pair<std::string, std::vector<int>>, int> atoms;
  std::vector<std::vector<int>> clauses;
  std::vector<CardConstraint> cards;
};

struct GroundOptions {
  int64_t clause_budget = 1'000'000;
};

// Grounds a first-order formula with counting over universe {1..n}. The
// result is satisfiable iff the formula has a model of size exactly n.
// Free variables are not allowed; close the formula first.
GroundProblem ground(const FOPtr& f, int n, const GroundOptions& opts = {});

struct SolveStats {
  int64_t decisions = 0;
  int64_t propagations = 0;
  int64_t conflicts = 0;
  double seconds = 0.0;
};

enum class Verdict { Sat, UnsatAtBound, BudgetExceeded };

struct SolveResult {
  Verdict verdict = Verdict::UnsatAtBound;
  int bound = 0;
  std::optional<Structure> model;  // Sat only, certified by the caller
  std::optional<PairEnv> env;      // witness slots for two-slot queries
  SolveStats stats;
};

struct SolverOptions {
  double budget_seconds = 60.0;
  int64_t conflict_budget = 20'000'000;
};

// Complete search at the problem's bound: Sat with a decoded model or
// UnsatAtBound. Deterministic.
SolveResult solve(const GroundProblem& p, const SolverOptions& opts = {});

// Collects predicate names used by a formula.
Vocabulary fo_vocabulary(const FOPtr& f);
Vocabulary rl2_vocabulary(const R2Ptr& f);

// Iterates domain sizes 0..n_max (first-order) resp. 1..n_max (two-slot
// queries, which need both slots inhabited); first Sat wins. Sat models are
// re-checked with the evaluator before being returned.
SolveResult check_sat_bounded(const FOPtr& f, int n_max,
                              const SolverOptions& opts = {},
                              const GroundOptions& gopts = {});
SolveResult check_sat_bounded(const R2Ptr& f, int n_max,
                              const SolverOptions& opts = {},
                              const GroundOptions& gopts = {});

struct ValidityResult {
  bool valid = false;          // up to the bound
  int bound = 0;
  bool budget_exceeded = false;
  std::optional<Structure> counterexample;
  std::optional<PairEnv> env;
};

ValidityResult check_valid_bounded(const R2Ptr& f, int n_max,
                                   const SolverOptions& opts = {},
                                   const GroundOptions& gopts = {});

// DIMACS CNF text; cardinality constraints are clausified (pairwise-style
// encodings for thresholds up to two, a totalizer otherwise).
std::string export_dimacs(const GroundProblem& p);
void export_dimacs_file(const GroundProblem& p, const std::string& path);

// Parses DIMACS CNF back into a clauses-only problem.
GroundProblem import_dimacs(const std::string& text);

}  // namespace rl
