#include "rolelogic/formula.hpp"

#include <cassert>

namespace rl {

const char* kind_name(FKind k) {
  switch (k) {
    case FKind::True: return "true";
    case FKind::Var: return "var";
    case FKind::Index: return "index";
    case FKind::Id: return "id";
    case FKind::And: return "and";
    case FKind::Not: return "not";
    case FKind::Exists: return "exists";
    case FKind::Lam: return "lam";
    case FKind::NamedLam: return "named-lam";
    case FKind::App: return "app";
    case FKind::Prime: return "prime";
    case FKind::Tilde: return "tilde";
    case FKind::CardGeq: return "card>=";
    case FKind::Star: return "star";
    case FKind::Or: return "or";
    case FKind::Implies: return "implies";
    case FKind::Iff: return "iff";
    case FKind::Curly: return "curly";
    case FKind::Square: return "square";
    case FKind::CardEq: return "card=";
    case FKind::CardLeq: return "card<=";
    case FKind::SumGeq: return "sum>=";
    case FKind::SumEq: return "sum=";
    case FKind::SumLeq: return "sum<=";
    case FKind::Disjoint: return "disjoint";
    case FKind::Partition: return "partition";
    case FKind::SetMinus: return "setminus";
    case FKind::ComposeOp: return "comp";
    case FKind::TcPlus: return "tc";
    case FKind::Rtc: return "rtc";
    case FKind::Acyclic: return "acyclic";
    case FKind::TreeOp: return "tree";
    case FKind::Let: return "let";
    case FKind::ImageOp: return "image";
    case FKind::Wlp: return "wlp";
  }
  return "?";
}

bool is_core(FKind k) {
  switch (k) {
    case FKind::True:
    case FKind::Var:
    case FKind::Index:
    case FKind::Id:
    case FKind::And:
    case FKind::Not:
    case FKind::Exists:
    case FKind::Lam:
    case FKind::NamedLam:
    case FKind::App:
    case FKind::Prime:
    case FKind::Tilde:
    case FKind::CardGeq:
    case FKind::Star:
      return true;
    default:
      return false;
  }
}

bool equal(const FPtr& a, const FPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->num != b->num)
    return false;
  if ((a->kind == FKind::NamedLam || a->kind == FKind::Let) &&
      a->type != b->type)
    return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

int node_count(const FPtr& f) {
  int n = 1;
  for (const auto& k : f->kids) n += node_count(k);
  return n;
}

namespace fml {

FPtr make(FKind kind, std::string name, int num, Type type,
          std::vector<FPtr> kids, SourceSpan span) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->name = std::move(name);
  f->num = num;
  f->type = type;
  f->kids = std::move(kids);
  f->span = std::move(span);
  return f;
}

FPtr truth() { return make(FKind::True, "", 0, {}, {}); }
FPtr var(std::string name, SourceSpan span) {
  return make(FKind::Var, std::move(name), 0, {}, {}, std::move(span));
}
FPtr index(int k, SourceSpan span) {
  assert(k >= 1);
  return make(FKind::Index, "", k, {}, {}, std::move(span));
}
FPtr id() { return make(FKind::Id, "", 0, {}, {}); }
FPtr land(FPtr a, FPtr b) {
  return make(FKind::And, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr lnot(FPtr a) { return make(FKind::Not, "", 0, {}, {std::move(a)}); }
FPtr exists(FPtr a) { return make(FKind::Exists, "", 0, {}, {std::move(a)}); }
FPtr lam(FPtr body) { return make(FKind::Lam, "", 0, {}, {std::move(body)}); }
FPtr named_lam(std::string name, Type t, FPtr body) {
  return make(FKind::NamedLam, std::move(name), 0, t, {std::move(body)});
}
FPtr app(FPtr fn, FPtr arg) {
  return make(FKind::App, "", 0, {}, {std::move(fn), std::move(arg)});
}
FPtr prime(FPtr a) { return make(FKind::Prime, "", 0, {}, {std::move(a)}); }
FPtr tilde(FPtr a) { return make(FKind::Tilde, "", 0, {}, {std::move(a)}); }
FPtr card_geq(int k, FPtr a) {
  assert(k >= 0);
  return make(FKind::CardGeq, "", k, {}, {std::move(a)});
}
FPtr star(FPtr a) { return make(FKind::Star, "", 0, {}, {std::move(a)}); }

FPtr lor(FPtr a, FPtr b) {
  return make(FKind::Or, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr implies(FPtr a, FPtr b) {
  return make(FKind::Implies, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr iff(FPtr a, FPtr b) {
  return make(FKind::Iff, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr curly(FPtr a) { return make(FKind::Curly, "", 0, {}, {std::move(a)}); }
FPtr square(FPtr a) { return make(FKind::Square, "", 0, {}, {std::move(a)}); }
FPtr card_eq(int k, FPtr a) {
  assert(k >= 0);
  return make(FKind::CardEq, "", k, {}, {std::move(a)});
}
FPtr card_leq(int k, FPtr a) {
  assert(k >= 0);
  return make(FKind::CardLeq, "", k, {}, {std::move(a)});
}
FPtr sum_geq(int k, std::vector<FPtr> kids) {
  return make(FKind::SumGeq, "", k, {}, std::move(kids));
}
FPtr sum_eq(int k, std::vector<FPtr> kids) {
  return make(FKind::SumEq, "", k, {}, std::move(kids));
}
FPtr sum_leq(int k, std::vector<FPtr> kids) {
  return make(FKind::SumLeq, "", k, {}, std::move(kids));
}
FPtr disjoint(std::vector<FPtr> kids) {
  return make(FKind::Disjoint, "", 0, {}, std::move(kids));
}
FPtr partition(FPtr whole, std::vector<FPtr> parts) {
  std::vector<FPtr> kids;
  kids.push_back(std::move(whole));
  for (auto& p : parts) kids.push_back(std::move(p));
  return make(FKind::Partition, "", 0, {}, std::move(kids));
}
FPtr set_minus(FPtr a, FPtr b) {
  return make(FKind::SetMinus, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr compose(FPtr a, FPtr b) {
  return make(FKind::ComposeOp, "", 0, {}, {std::move(a), std::move(b)});
}
FPtr tc_plus(FPtr a) { return make(FKind::TcPlus, "", 0, {}, {std::move(a)}); }
FPtr rtc(FPtr a) { return make(FKind::Rtc, "", 0, {}, {std::move(a)}); }
FPtr acyclic(FPtr a) {
  return make(FKind::Acyclic, "", 0, {}, {std::move(a)});
}
FPtr tree(std::vector<FPtr> kids) {
  return make(FKind::TreeOp, "", 0, {}, std::move(kids));
}
FPtr let(std::string name, Type t, FPtr def, FPtr body) {
  return make(FKind::Let, std::move(name), 0, t,
              {std::move(def), std::move(body)});
}
FPtr image(FPtr set, FPtr relation) {
  return make(FKind::ImageOp, "", 0, {}, {std::move(set), std::move(relation)});
}
FPtr wlp(FPtr relation, FPtr post) {
  return make(FKind::Wlp, "", 0, {}, {std::move(relation), std::move(post)});
}

FPtr applied_to_indices(FPtr head, int k) {
  FPtr f = std::move(head);
  for (int i = k; i >= 1; --i) f = app(f, index(i));
  return f;
}

}  // namespace fml

}  // namespace rl
