#include "rolelogic/desugar.hpp"

#include <functional>
#include <vector>

#include "rolelogic/error.hpp"

namespace rl {

using namespace fml;

namespace {

bool is_lambda_chain_over_symbol(const FPtr& f) {
  const Formula* p = f.get();
  if (p->kind != FKind::Lam) return false;
  while (p->kind == FKind::Lam) p = p->kids[0].get();
  return p->kind == FKind::Var || p->kind == FKind::Id;
}

FPtr expand(const FPtr& f, const TypeContext& ctx, bool fun_pos) {
  switch (f->kind) {
    case FKind::Var: {
      if (fun_pos) return f;
      auto it = ctx.find(f->name);
      if (it == ctx.end()) return f;  // let typecheck report unknown names
      int k = 0;
      if (it->second.is_rel(&k) && k >= 1)
        return applied_to_indices(f, k);
      return f;
    }
    case FKind::Id:
      return fun_pos ? f : applied_to_indices(f, 2);
    case FKind::App:
      return app(expand(f->kids[0], ctx, true), expand(f->kids[1], ctx, false));
    case FKind::Lam:
      if (fun_pos && is_lambda_chain_over_symbol(f)) return f;
      return make(FKind::Lam, "", 0, {}, {expand(f->kids[0], ctx, false)},
                  f->span);
    case FKind::NamedLam: {
      TypeContext inner = ctx;
      inner[f->name] = f->type;
      return make(FKind::NamedLam, f->name, 0, f->type,
                  {expand(f->kids[0], inner, false)}, f->span);
    }
    case FKind::Let: {
      TypeContext inner = ctx;
      inner[f->name] = f->type;
      return make(FKind::Let, f->name, 0, f->type,
                  {expand(f->kids[0], ctx, false),
                   expand(f->kids[1], inner, false)},
                  f->span);
    }
    default: {
      if (f->kids.empty()) return f;
      std::vector<FPtr> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(expand(k, ctx, false));
      return make(f->kind, f->name, f->num, f->type, std::move(kids), f->span);
    }
  }
}

// Core-building helpers used by the rewrites below.
FPtr c_or(FPtr a, FPtr b) { return lnot(land(lnot(a), lnot(b))); }
FPtr c_implies(FPtr a, FPtr b) { return lnot(land(a, lnot(b))); }
FPtr c_iff(FPtr a, FPtr b) {
  return land(c_implies(a, b), c_implies(b, a));
}
FPtr c_curly(FPtr a) { return exists(lam(std::move(a))); }
FPtr c_square(FPtr a) { return lnot(c_curly(lnot(std::move(a)))); }
FPtr id_applied(int i, int j) {
  return app(app(id(), index(i)), index(j));
}

FPtr conjoin(std::vector<FPtr> fs) {
  if (fs.empty()) return truth();
  FPtr r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = land(r, fs[i]);
  return r;
}

FPtr disjoin(std::vector<FPtr> fs) {
  if (fs.empty()) return lnot(truth());
  FPtr r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = c_or(r, fs[i]);
  return r;
}

// All ways of writing k as an ordered sum of n non-negative integers.
void compositions(int k, int n, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 1) {
    cur.push_back(k);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= k; ++i) {
    cur.push_back(i);
    compositions(k - i, n - 1, cur, emit);
    cur.pop_back();
  }
}

struct Desugarer {
  DesugarMode mode;

  FPtr card_core(int k, FPtr body) {
    if (mode == DesugarMode::KeepCounting) return card_geq(k, std::move(body));
    // k nested witnesses, each satisfying the body, pairwise distinct.
    if (k == 0) return truth();
    std::vector<FPtr> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(app(lam(body), index(i)));
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        parts.push_back(lnot(id_applied(i, j)));
    FPtr r = conjoin(std::move(parts));
    for (int i = 0; i < k; ++i) r = c_curly(std::move(r));
    return r;
  }

  FPtr card_eq_core(int k, const FPtr& body) {
    return land(card_core(k, body), lnot(card_core(k + 1, body)));
  }

  FPtr sum_geq_core(int k, const std::vector<FPtr>& bodies, bool exact) {
    if (bodies.empty())
      throw Error(ErrorKind::ArityMismatch, "cardinality sum over no parts");
    std::vector<FPtr> alts;
    std::vector<int> cur;
    compositions(k, static_cast<int>(bodies.size()), cur,
                 [&](const std::vector<int>& parts) {
                   std::vector<FPtr> conj;
                   for (size_t i = 0; i < bodies.size(); ++i)
                     conj.push_back(exact ? card_eq_core(parts[i], bodies[i])
                                          : card_core(parts[i], bodies[i]));
                   alts.push_back(conjoin(std::move(conj)));
                 });
    return disjoin(std::move(alts));
  }

  FPtr rtc_core(const FPtr& body) {
    return app(app(star(lam(lam(body))), index(2)), index(1));
  }

  // some y. F1(x,y) & F2(y,z), with x = slot 2 and z = slot 1 outside. When
  // F1 reads one slot this is the relational image of F1 under F2.
  FPtr compose_core(const FPtr& a, const FPtr& b) {
    return c_curly(land(app(app(lam(lam(a)), index(3)), index(1)),
                        app(app(lam(lam(b)), index(1)), index(2))));
  }

  FPtr tc_core(const FPtr& a) { return compose_core(a, rtc_core(a)); }

  FPtr go(const FPtr& f) {
    std::vector<FPtr> kids;
    kids.reserve(f->kids.size());
    for (const auto& k : f->kids) kids.push_back(go(k));

    switch (f->kind) {
      case FKind::True:
      case FKind::Var:
      case FKind::Index:
      case FKind::Id:
        return f;
      case FKind::And:
      case FKind::Not:
      case FKind::Exists:
      case FKind::Lam:
      case FKind::App:
      case FKind::Prime:
      case FKind::Tilde:
      case FKind::Star:
      case FKind::NamedLam:
        return make(f->kind, f->name, f->num, f->type, std::move(kids),
                    f->span);
      case FKind::CardGeq:
        return card_core(f->num, kids[0]);
      case FKind::Or:
        return c_or(kids[0], kids[1]);
      case FKind::Implies:
        return c_implies(kids[0], kids[1]);
      case FKind::Iff:
        return c_iff(kids[0], kids[1]);
      case FKind::Curly:
        return c_curly(kids[0]);
      case FKind::Square:
        return c_square(kids[0]);
      case FKind::CardEq:
        return card_eq_core(f->num, kids[0]);
      case FKind::CardLeq:
        return lnot(card_core(f->num + 1, kids[0]));
      case FKind::SumGeq:
        return sum_geq_core(f->num, kids, false);
      case FKind::SumEq:
        return sum_geq_core(f->num, kids, true);
      case FKind::SumLeq:
        return lnot(sum_geq_core(f->num + 1, kids, false));
      case FKind::Disjoint: {
        if (kids.empty())
          throw Error(ErrorKind::ArityMismatch, "disjoint of no sets", f->span);
        std::vector<FPtr> conj;
        for (size_t i = 0; i < kids.size(); ++i)
          for (size_t j = i + 1; j < kids.size(); ++j)
            conj.push_back(lnot(land(kids[i], kids[j])));
        return c_square(conjoin(std::move(conj)));
      }
      case FKind::Partition: {
        if (kids.size() < 2)
          throw Error(ErrorKind::ArityMismatch, "partition needs parts",
                      f->span);
        std::vector<FPtr> parts(kids.begin() + 1, kids.end());
        std::vector<FPtr> conj;
        for (size_t i = 0; i < parts.size(); ++i)
          for (size_t j = i + 1; j < parts.size(); ++j)
            conj.push_back(lnot(land(parts[i], parts[j])));
        return land(c_square(conjoin(std::move(conj))),
                    c_square(c_iff(kids[0], disjoin(std::move(parts)))));
      }
      case FKind::SetMinus:
        return land(kids[0], lnot(kids[1]));
      case FKind::ComposeOp:
        return compose_core(kids[0], kids[1]);
      case FKind::TcPlus:
        return tc_core(kids[0]);
      case FKind::Rtc:
        return rtc_core(kids[0]);
      case FKind::Acyclic:
        return lnot(c_curly(land(tc_core(kids[0]), id_applied(2, 1))));
      case FKind::TreeOp: {
        if (kids.empty())
          throw Error(ErrorKind::ArityMismatch, "tree of no edges", f->span);
        FPtr un = disjoin(std::vector<FPtr>(kids));
        std::vector<FPtr> inverted;
        for (const auto& k : kids) inverted.push_back(tilde(k));
        FPtr at_most_one_in =
            lnot(sum_geq_core(2, inverted, false));
        return land(lnot(c_curly(land(tc_core(un), id_applied(2, 1)))),
                    c_square(c_implies(rtc_core(un), at_most_one_in)));
      }
      case FKind::Let:
        return app(named_lam(f->name, f->type, kids[1]), kids[0]);
      case FKind::ImageOp:
        return c_curly(land(kids[0], tilde(kids[1])));
      case FKind::Wlp:
        return c_square(c_implies(kids[0], kids[1]));
    }
    throw Error(ErrorKind::Internal, "unhandled formula kind");
  }
};

}  // namespace

FPtr expand_default_args(const FPtr& f, const TypeContext& ctx) {
  return expand(f, ctx, false);
}

FPtr desugar(const FPtr& f, DesugarMode mode) {
  Desugarer d{mode};
  return d.go(f);
}

}  // namespace rl
