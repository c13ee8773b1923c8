#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rolelogic/formula.hpp"
#include "rolelogic/structure.hpp"

namespace rl {

// Index-free fragment: two implicit slots, no lambdas, no closure operator.
// Kept as a separate AST so the fragment invariants hold by construction.
enum class R2Kind { True, PredU, PredB, Id, And, Not, Prime, Tilde, CardGeq };

struct RL2Formula;
using R2Ptr = std::shared_ptr<const RL2Formula>;

struct RL2Formula {
  R2Kind kind;
  std::string name;  // PredU, PredB
  int num = 0;       // CardGeq
  std::vector<R2Ptr> kids;
  SourceSpan span;
};

bool equal(const R2Ptr& a, const R2Ptr& b);
int node_count(const R2Ptr& f);

namespace rl2 {
R2Ptr make(R2Kind kind, std::string name, int num, std::vector<R2Ptr> kids,
           SourceSpan span = {});
R2Ptr truth();
R2Ptr pred_u(std::string name, SourceSpan span = {});
R2Ptr pred_b(std::string name, SourceSpan span = {});
R2Ptr id();
R2Ptr land(R2Ptr a, R2Ptr b);
R2Ptr lnot(R2Ptr a);
R2Ptr prime(R2Ptr a);
R2Ptr tilde(R2Ptr a);
R2Ptr card_geq(int k, R2Ptr a);
// Derived forms.
R2Ptr lor(R2Ptr a, R2Ptr b);
R2Ptr implies(R2Ptr a, R2Ptr b);
R2Ptr iff(R2Ptr a, R2Ptr b);
R2Ptr curly(R2Ptr a);   // card>=1
R2Ptr square(R2Ptr a);  // !card>=1 !
R2Ptr falsity();
}  // namespace rl2

// Two-slot evaluation: unary atoms read slot 1, binary atoms read
// (slot 2, slot 1); the slot-copy operator sets slot 1 := slot 2, the swap
// exchanges them, and counting moves the old slot 1 into slot 2.
bool eval_rl2(const R2Ptr& f, const Structure& s, const PairEnv& e);

// Maps a full-logic term into the fragment. Sugar that stays inside the
// fragment is rewritten on the fly; names are classified by the vocabulary.
// Also accepts the canonical applied-index forms produced by embed_rl2.
// Rejection carries the offending construct and its path.
R2Ptr coerce_rl2(const FPtr& f, const Vocabulary& vocab);

// Canonical embedding into the full logic: atoms become their applied-index
// forms; evaluation with initial stack [slot1, slot2] agrees with eval_rl2.
FPtr embed_rl2(const R2Ptr& f);

// Recognizer for the constraint sublogic built from bracketed unary cubes
// and bracketed edge-local constraints:
//   F ::= {C} | {{C1' & C2 & R}} | F & F | !F
//   C ::= A | C & C | !C          R ::= f | !f | R | R
bool is_bsac(const R2Ptr& f);

// Vocabulary-version tags for predicate names, rendered name$k internally.
// Tag nullopt is the untagged (current-state) vocabulary.
using VocabTag = std::optional<int>;
std::string tagged_name(const std::string& base, VocabTag tag);
std::pair<std::string, VocabTag> split_tag(const std::string& name);

// Renames every predicate of tag i to the same predicate of tag j.
R2Ptr rename_vocab(const R2Ptr& f, VocabTag i, VocabTag j);
Structure rename_struct(const Structure& s, VocabTag i, VocabTag j);

}  // namespace rl
