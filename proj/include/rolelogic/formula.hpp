#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rolelogic/span.hpp"
#include "rolelogic/type.hpp"

namespace rl {

// Full role-logic terms. The first block of kinds is the core language that
// survives desugaring; the second block is surface sugar that desugar()
// rewrites away. Nodes are immutable and shared.
enum class FKind {
  // core
  True,
  Var,       // named object or predicate (name)
  Index,     // de Bruijn index of an object variable, num >= 1
  Id,        // binary equality constant, rel 2
  And,       // kids[0] & kids[1]
  Not,       // !kids[0]
  Exists,    // existential over objects, argument of type rel 1
  Lam,       // de Bruijn abstraction over objects (kids[0] body)
  NamedLam,  // abstraction over a named variable of any type (name, type)
  App,       // kids[0] applied to kids[1]
  Prime,     // evaluate with slot 1 replaced by slot 2
  Tilde,     // evaluate with slots 1 and 2 swapped
  CardGeq,   // at least num objects satisfy kids[0]
  Star,      // reflexive transitive closure, rel 2 -> rel 2
  // sugar
  Or,
  Implies,
  Iff,
  Curly,      // {F}: some object satisfies F
  Square,     // [F]: all objects satisfy F
  CardEq,     // exactly num objects satisfy kids[0]
  CardLeq,    // at most num objects satisfy kids[0]
  SumGeq,     // sum of cardinalities of kids >= num
  SumEq,      // sum of cardinalities of kids == num
  SumLeq,     // sum of cardinalities of kids <= num
  Disjoint,   // kids pairwise disjoint
  Partition,  // kids[0] partitioned by kids[1..]
  SetMinus,   // kids[0] & !kids[1]
  ComposeOp,  // relation/set composition of kids[0] and kids[1]
  TcPlus,     // irreflexive transitive closure of kids[0], boolean form
  Rtc,        // reflexive transitive closure of kids[0], boolean form
  Acyclic,
  TreeOp,     // edges kids form a tree rooted at slot 1
  Let,        // let name : type = kids[0] in kids[1]
  ImageOp,    // image of set kids[0] under relation kids[1]
  Wlp,        // weakest precondition of kids[1] w.r.t. relation kids[0]
};

struct Formula;
using FPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;        // Var, NamedLam, Let
  int num = 0;             // Index, CardGeq/CardEq/CardLeq, Sum*
  Type type;               // NamedLam, Let
  std::vector<FPtr> kids;
  SourceSpan span;
};

const char* kind_name(FKind k);
bool is_core(FKind k);

// Structural equality; spans are ignored.
bool equal(const FPtr& a, const FPtr& b);

// Number of nodes in the term.
int node_count(const FPtr& f);

namespace fml {

FPtr make(FKind kind, std::string name, int num, Type type,
          std::vector<FPtr> kids, SourceSpan span = {});

FPtr truth();
FPtr var(std::string name, SourceSpan span = {});
FPtr index(int k, SourceSpan span = {});
FPtr id();
FPtr land(FPtr a, FPtr b);
FPtr lnot(FPtr a);
FPtr exists(FPtr a);
FPtr lam(FPtr body);
FPtr named_lam(std::string name, Type t, FPtr body);
FPtr app(FPtr fn, FPtr arg);
FPtr prime(FPtr a);
FPtr tilde(FPtr a);
FPtr card_geq(int k, FPtr a);
FPtr star(FPtr a);

FPtr lor(FPtr a, FPtr b);
FPtr implies(FPtr a, FPtr b);
FPtr iff(FPtr a, FPtr b);
FPtr curly(FPtr a);
FPtr square(FPtr a);
FPtr card_eq(int k, FPtr a);
FPtr card_leq(int k, FPtr a);
FPtr sum_geq(int k, std::vector<FPtr> kids);
FPtr sum_eq(int k, std::vector<FPtr> kids);
FPtr sum_leq(int k, std::vector<FPtr> kids);
FPtr disjoint(std::vector<FPtr> kids);
FPtr partition(FPtr whole, std::vector<FPtr> parts);
FPtr set_minus(FPtr a, FPtr b);
FPtr compose(FPtr a, FPtr b);
FPtr tc_plus(FPtr a);
FPtr rtc(FPtr a);
FPtr acyclic(FPtr a);
FPtr tree(std::vector<FPtr> kids);
FPtr let(std::string name, Type t, FPtr def, FPtr body);
FPtr image(FPtr set, FPtr relation);
FPtr wlp(FPtr relation, FPtr post);

// r #k #(k-1) ... #1 — the implicit-argument reading of a k-ary symbol.
FPtr applied_to_indices(FPtr head, int k);

}  // namespace fml

}  // namespace rl
