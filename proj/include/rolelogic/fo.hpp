#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rolelogic/span.hpp"
#include "rolelogic/structure.hpp"

namespace rl {

// First-order logic with counting over named variables. The same AST serves
// both the bounded-free-variable discipline (every subformula has at most
// two free variables) and the strict two-name discipline (only x and y).
enum class FOKind { True, AtomU, AtomB, Eq, And, Or, Not, ExistsGeq };

struct FOFormula;
using FOPtr = std::shared_ptr<const FOFormula>;

struct FOFormula {
  FOKind kind;
  std::string pred;      // AtomU, AtomB
  std::string v1, v2;    // atom arguments / equality / bound variable (v1)
  int num = 0;           // ExistsGeq threshold
  std::vector<FOPtr> kids;
  SourceSpan span;
};

bool equal(const FOPtr& a, const FOPtr& b);
int node_count(const FOPtr& f);
std::set<std::string> free_vars(const FOPtr& f);

namespace fo {
FOPtr make(FOKind kind, std::string pred, std::string v1, std::string v2,
           int num, std::vector<FOPtr> kids, SourceSpan span = {});
FOPtr truth();
FOPtr atom_u(std::string pred, std::string v);
FOPtr atom_b(std::string pred, std::string v1, std::string v2);
FOPtr eq(std::string v1, std::string v2);
FOPtr land(FOPtr a, FOPtr b);
FOPtr lor(FOPtr a, FOPtr b);
FOPtr lnot(FOPtr a);
FOPtr exists_geq(int k, std::string v, FOPtr body);
FOPtr falsity();
FOPtr implies(FOPtr a, FOPtr b);
FOPtr iff(FOPtr a, FOPtr b);
FOPtr forall(std::string v, FOPtr body);
}  // namespace fo

using Assignment = std::map<std::string, int>;
bool eval_fo(const FOPtr& f, const Structure& s, const Assignment& a);

// Index form of the two-variable logic: atoms refer to the two slots.
enum class I2Kind { True, AtomU, AtomB, Eq, And, Or, Not, CardGeq };

struct I2Formula;
using I2Ptr = std::shared_ptr<const I2Formula>;

struct I2Formula {
  I2Kind kind;
  std::string pred;
  int i1 = 0, i2 = 0;  // slot references, always 1 or 2
  int num = 0;
  std::vector<I2Ptr> kids;
  SourceSpan span;
};

bool equal(const I2Ptr& a, const I2Ptr& b);

namespace i2 {
I2Ptr make(I2Kind kind, std::string pred, int i1, int i2, int num,
           std::vector<I2Ptr> kids, SourceSpan span = {});
I2Ptr truth();
I2Ptr atom_u(std::string pred, int i);
I2Ptr atom_b(std::string pred, int i1, int i2);
I2Ptr eq(int i1, int i2);
I2Ptr land(I2Ptr a, I2Ptr b);
I2Ptr lor(I2Ptr a, I2Ptr b);
I2Ptr lnot(I2Ptr a);
I2Ptr card_geq(int k, I2Ptr body);
}  // namespace i2

// Counting shifts the old slot 1 into slot 2, as in the index-free fragment.
bool eval_i2(const I2Ptr& f, const Structure& s, const PairEnv& e);

// Fragment membership verdicts; on failure `path` holds the first offending
// subterm in leftmost-innermost order.
struct FragmentCheck {
  bool ok = true;
  std::string path;
  std::string reason;
};

// Every subformula has at most two free variables.
FragmentCheck check_d2(const FOPtr& f);
// Only x and y occur, free or bound (implies the check above).
FragmentCheck check_c2(const FOPtr& f);
// Only slot references 1 and 2 occur.
FragmentCheck check_i2(const I2Ptr& f);

}  // namespace rl
