#include "rolelogic/fo.hpp"

#include <functional>

#include "rolelogic/error.hpp"

namespace rl {

bool equal(const FOPtr& a, const FOPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->pred != b->pred || a->v1 != b->v1 ||
      a->v2 != b->v2 || a->num != b->num)
    return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

int node_count(const FOPtr& f) {
  int n = 1;
  for (const auto& k : f->kids) n += node_count(k);
  return n;
}

std::set<std::string> free_vars(const FOPtr& f) {
  switch (f->kind) {
    case FOKind::True:
      return {};
    case FOKind::AtomU:
      return {f->v1};
    case FOKind::AtomB:
    case FOKind::Eq:
      return {f->v1, f->v2};
    case FOKind::ExistsGeq: {
      auto fv = free_vars(f->kids[0]);
      fv.erase(f->v1);
      return fv;
    }
    default: {
      std::set<std::string> fv;
      for (const auto& k : f->kids) {
        auto s = free_vars(k);
        fv.insert(s.begin(), s.end());
      }
      return fv;
    }
  }
}

namespace fo {

FOPtr make(FOKind kind, std::string pred, std::string v1, std::string v2,
           int num, std::vector<FOPtr> kids, SourceSpan span) {
  auto f = std::make_shared<FOFormula>();
  f->kind = kind;
  f->pred = std::move(pred);
  f->v1 = std::move(v1);
  f->v2 = std::move(v2);
  f->num = num;
  f->kids = std::move(kids);
  f->span = std::move(span);
  return f;
}

FOPtr truth() { return make(FOKind::True, "", "", "", 0, {}); }
FOPtr atom_u(std::string pred, std::string v) {
  return make(FOKind::AtomU, std::move(pred), std::move(v), "", 0, {});
}
FOPtr atom_b(std::string pred, std::string v1, std::string v2) {
  return make(FOKind::AtomB, std::move(pred), std::move(v1), std::move(v2), 0,
              {});
}
FOPtr eq(std::string v1, std::string v2) {
  return make(FOKind::Eq, "", std::move(v1), std::move(v2), 0, {});
}
FOPtr land(FOPtr a, FOPtr b) {
  return make(FOKind::And, "", "", "", 0, {std::move(a), std::move(b)});
}
FOPtr lor(FOPtr a, FOPtr b) {
  return make(FOKind::Or, "", "", "", 0, {std::move(a), std::move(b)});
}
FOPtr lnot(FOPtr a) {
  return make(FOKind::Not, "", "", "", 0, {std::move(a)});
}
FOPtr exists_geq(int k, std::string v, FOPtr body) {
  return make(FOKind::ExistsGeq, "", std::move(v), "", k, {std::move(body)});
}
FOPtr falsity() { return lnot(truth()); }
FOPtr implies(FOPtr a, FOPtr b) { return lor(lnot(std::move(a)), std::move(b)); }
FOPtr iff(FOPtr a, FOPtr b) {
  return land(implies(a, b), implies(b, a));
}
FOPtr forall(std::string v, FOPtr body) {
  return lnot(exists_geq(1, std::move(v), lnot(std::move(body))));
}

}  // namespace fo

bool eval_fo(const FOPtr& f, const Structure& s, const Assignment& a) {
  auto lookup = [&](const std::string& v) {
    auto it = a.find(v);
    if (it == a.end())
      throw Error(ErrorKind::UnboundName, "variable '" + v + "' unassigned",
                  f->span);
    return it->second;
  };
  switch (f->kind) {
    case FOKind::True:
      return true;
    case FOKind::AtomU:
      return s.in_unary(f->pred, lookup(f->v1));
    case FOKind::AtomB:
      return s.in_binary(f->pred, lookup(f->v1), lookup(f->v2));
    case FOKind::Eq:
      return lookup(f->v1) == lookup(f->v2);
    case FOKind::And:
      return eval_fo(f->kids[0], s, a) && eval_fo(f->kids[1], s, a);
    case FOKind::Or:
      return eval_fo(f->kids[0], s, a) || eval_fo(f->kids[1], s, a);
    case FOKind::Not:
      return !eval_fo(f->kids[0], s, a);
    case FOKind::ExistsGeq: {
      if (f->num == 0) return true;
      int found = 0;
      Assignment inner = a;
      for (int o = 1; o <= s.size(); ++o) {
        inner[f->v1] = o;
        if (eval_fo(f->kids[0], s, inner) && ++found >= f->num) return true;
      }
      return false;
    }
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

namespace i2 {

I2Ptr make(I2Kind kind, std::string pred, int i1, int i2, int num,
           std::vector<I2Ptr> kids, SourceSpan span) {
  if (i1 < 0 || i1 > 2 || i2 < 0 || i2 > 2)
    throw Error(ErrorKind::NotInFragment,
                "slot references must be 1 or 2", span);
  auto f = std::make_shared<I2Formula>();
  f->kind = kind;
  f->pred = std::move(pred);
  f->i1 = i1;
  f->i2 = i2;
  f->num = num;
  f->kids = std::move(kids);
  f->span = std::move(span);
  return f;
}

I2Ptr truth() { return make(I2Kind::True, "", 0, 0, 0, {}); }
I2Ptr atom_u(std::string pred, int i) {
  return make(I2Kind::AtomU, std::move(pred), i, 0, 0, {});
}
I2Ptr atom_b(std::string pred, int i1, int i2) {
  return make(I2Kind::AtomB, std::move(pred), i1, i2, 0, {});
}
I2Ptr eq(int i1, int i2) { return make(I2Kind::Eq, "", i1, i2, 0, {}); }
I2Ptr land(I2Ptr a, I2Ptr b) {
  return make(I2Kind::And, "", 0, 0, 0, {std::move(a), std::move(b)});
}
I2Ptr lor(I2Ptr a, I2Ptr b) {
  return make(I2Kind::Or, "", 0, 0, 0, {std::move(a), std::move(b)});
}
I2Ptr lnot(I2Ptr a) { return make(I2Kind::Not, "", 0, 0, 0, {std::move(a)}); }
I2Ptr card_geq(int k, I2Ptr body) {
  return make(I2Kind::CardGeq, "", 0, 0, k, {std::move(body)});
}

}  // namespace i2

bool equal(const I2Ptr& a, const I2Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->pred != b->pred || a->i1 != b->i1 ||
      a->i2 != b->i2 || a->num != b->num)
    return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

bool eval_i2(const I2Ptr& f, const Structure& s, const PairEnv& e) {
  auto slot = [&](int i) { return i == 1 ? e.slot1 : e.slot2; };
  switch (f->kind) {
    case I2Kind::True:
      return true;
    case I2Kind::AtomU:
      return s.in_unary(f->pred, slot(f->i1));
    case I2Kind::AtomB:
      return s.in_binary(f->pred, slot(f->i1), slot(f->i2));
    case I2Kind::Eq:
      return slot(f->i1) == slot(f->i2);
    case I2Kind::And:
      return eval_i2(f->kids[0], s, e) && eval_i2(f->kids[1], s, e);
    case I2Kind::Or:
      return eval_i2(f->kids[0], s, e) || eval_i2(f->kids[1], s, e);
    case I2Kind::Not:
      return !eval_i2(f->kids[0], s, e);
    case I2Kind::CardGeq: {
      if (f->num == 0) return true;
      int found = 0;
      for (int o = 1; o <= s.size(); ++o)
        if (eval_i2(f->kids[0], s, PairEnv{o, e.slot1}) && ++found >= f->num)
          return true;
      return false;
    }
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

namespace {

// Post-order search for the first failing subterm.
bool scan_d2(const FOPtr& f, const std::string& path, FragmentCheck* out) {
  for (size_t i = 0; i < f->kids.size(); ++i)
    if (!scan_d2(f->kids[i], path + "/" + std::to_string(i), out))
      return false;
  auto fv = free_vars(f);
  if (fv.size() > 2) {
    out->ok = false;
    out->path = path.empty() ? "/" : path;
    out->reason = "subformula has " + std::to_string(fv.size()) +
                  " free variables";
    return false;
  }
  return true;
}

bool scan_c2(const FOPtr& f, const std::string& path, FragmentCheck* out) {
  for (size_t i = 0; i < f->kids.size(); ++i)
    if (!scan_c2(f->kids[i], path + "/" + std::to_string(i), out))
      return false;
  auto bad = [&](const std::string& v) {
    return !v.empty() && v != "x" && v != "y";
  };
  std::string offender;
  if (f->kind == FOKind::AtomU && bad(f->v1)) offender = f->v1;
  if ((f->kind == FOKind::AtomB || f->kind == FOKind::Eq) &&
      (bad(f->v1) || bad(f->v2)))
    offender = bad(f->v1) ? f->v1 : f->v2;
  if (f->kind == FOKind::ExistsGeq && bad(f->v1)) offender = f->v1;
  if (!offender.empty()) {
    out->ok = false;
    out->path = path.empty() ? "/" : path;
    out->reason = "variable '" + offender + "' is neither x nor y";
    return false;
  }
  return true;
}

}  // namespace

FragmentCheck check_d2(const FOPtr& f) {
  FragmentCheck out;
  scan_d2(f, "", &out);
  return out;
}

FragmentCheck check_c2(const FOPtr& f) {
  FragmentCheck out;
  scan_c2(f, "", &out);
  return out;
}

FragmentCheck check_i2(const I2Ptr& f) {
  // Slot references are validated at construction; re-verify structurally.
  FragmentCheck out;
  std::function<bool(const I2Ptr&, const std::string&)> go =
      [&](const I2Ptr& t, const std::string& path) {
        for (size_t i = 0; i < t->kids.size(); ++i)
          if (!go(t->kids[i], path + "/" + std::to_string(i))) return false;
        bool atom = t->kind == I2Kind::AtomU || t->kind == I2Kind::AtomB ||
                    t->kind == I2Kind::Eq;
        int lo = t->kind == I2Kind::AtomU ? t->i1 : std::min(t->i1, t->i2);
        int hi = std::max(t->i1, t->i2);
        if (atom && (lo < 1 || hi > 2)) {
          out.ok = false;
          out.path = path.empty() ? "/" : path;
          out.reason = "slot reference outside {1,2}";
          return false;
        }
        return true;
      };
  go(f, "");
  return out;
}

}  // namespace rl
