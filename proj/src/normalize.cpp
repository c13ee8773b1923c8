#include "rolelogic/normalize.hpp"

#include <functional>
#include <set>
#include <string>

#include "rolelogic/error.hpp"

namespace rl {

using namespace fml;

namespace {

int index_binders(FKind k) {
  switch (k) {
    case FKind::Lam:
    case FKind::CardGeq:
      return 1;
    case FKind::Prime:
    case FKind::Tilde:
      return 2;
    default:
      return 0;
  }
}

FPtr map_kids(const FPtr& f, const std::function<FPtr(const FPtr&, int)>& fn) {
  std::vector<FPtr> kids;
  kids.reserve(f->kids.size());
  bool changed = false;
  int extra = index_binders(f->kind);
  for (const auto& k : f->kids) {
    FPtr r = fn(k, extra);
    changed = changed || r != k;
    kids.push_back(std::move(r));
  }
  if (!changed) return f;
  return make(f->kind, f->name, f->num, f->type, std::move(kids), f->span);
}

// Applies sigma to free indices; sigma receives the index in the outermost
// frame and returns a replacement term (spliced shifted by the local depth).
FPtr subst_indices(const FPtr& f, const std::function<FPtr(int)>& sigma,
                   int depth) {
  if (f->kind == FKind::Index) {
    if (f->num <= depth) return f;
    FPtr r = sigma(f->num - depth);
    return shift_indices(r, depth, 1);
  }
  return map_kids(f, [&](const FPtr& k, int extra) {
    return subst_indices(k, sigma, depth + extra);
  });
}

void free_names(const FPtr& f, std::set<std::string>* bound,
                std::set<std::string>* out) {
  switch (f->kind) {
    case FKind::Var:
      if (!bound->count(f->name)) out->insert(f->name);
      return;
    case FKind::NamedLam:
    case FKind::Let: {
      if (f->kind == FKind::Let) free_names(f->kids[0], bound, out);
      bool added = bound->insert(f->name).second;
      free_names(f->kids[f->kind == FKind::Let ? 1 : 0], bound, out);
      if (added) bound->erase(f->name);
      return;
    }
    default:
      for (const auto& k : f->kids) free_names(k, bound, out);
  }
}

std::set<std::string> free_names(const FPtr& f) {
  std::set<std::string> bound, out;
  free_names(f, &bound, &out);
  return out;
}

FPtr rename_free(const FPtr& f, const std::string& from,
                 const std::string& to) {
  if (f->kind == FKind::Var)
    return f->name == from ? var(to, f->span) : f;
  if ((f->kind == FKind::NamedLam || f->kind == FKind::Let) &&
      f->name == from) {
    if (f->kind == FKind::Let)
      return make(FKind::Let, f->name, 0, f->type,
                  {rename_free(f->kids[0], from, to), f->kids[1]}, f->span);
    return f;
  }
  return map_kids(
      f, [&](const FPtr& k, int) { return rename_free(k, from, to); });
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// Capture-avoiding substitution of a named variable by a value whose free
// indices are shifted as it crosses index binders.
FPtr subst_name(const FPtr& f, const std::string& name, const FPtr& val,
                int depth) {
  switch (f->kind) {
    case FKind::Var:
      if (f->name != name) return f;
      return depth == 0 ? val : shift_indices(val, depth, 1);
    case FKind::NamedLam: {
      if (f->name == name) return f;  // shadowed
      auto fv = free_names(val);
      if (fv.count(f->name)) {
        fv.insert(name);
        auto body_fv = free_names(f->kids[0]);
        fv.insert(body_fv.begin(), body_fv.end());
        std::string nn = fresh_name(f->name, fv);
        FPtr body = rename_free(f->kids[0], f->name, nn);
        return subst_name(named_lam(nn, f->type, body), name, val, depth);
      }
      return make(FKind::NamedLam, f->name, 0, f->type,
                  {subst_name(f->kids[0], name, val, depth)}, f->span);
    }
    default:
      return map_kids(f, [&](const FPtr& k, int extra) {
        return subst_name(k, name, val, depth + extra);
      });
  }
}

// body is under one lambda; replace #1 by arg and close the gap.
FPtr beta_reduce(const FPtr& body, const FPtr& arg) {
  return subst_indices(
      body,
      [&](int k) -> FPtr {
        if (k == 1) return arg;
        return index(k - 1);
      },
      0);
}

struct Normalizer {
  int fuel = 2'000'000;

  void spend() {
    if (--fuel <= 0)
      throw Error(ErrorKind::BudgetExceeded, "normalization step limit");
  }

  FPtr go(const FPtr& f) {
    spend();
    if (f->kind == FKind::App) {
      FPtr fn = go(f->kids[0]);
      if (fn->kind == FKind::Lam)
        return go(beta_reduce(fn->kids[0], f->kids[1]));
      if (fn->kind == FKind::NamedLam)
        return go(subst_name(fn->kids[0], fn->name, f->kids[1], 0));
      FPtr arg = go(f->kids[1]);
      if (fn == f->kids[0] && arg == f->kids[1]) return f;
      return app(fn, arg);
    }
    return map_kids(f, [&](const FPtr& k, int) { return go(k); });
  }
};

}  // namespace

FPtr shift_indices(const FPtr& f, int d, int cutoff) {
  if (f->kind == FKind::Index) {
    if (f->num < cutoff) return f;
    if (f->num + d < 1)
      throw Error(ErrorKind::StackUnderflow, "shift below the stack", f->span);
    return index(f->num + d, f->span);
  }
  return map_kids(f, [&](const FPtr& k, int extra) {
    return shift_indices(k, d, cutoff + extra);
  });
}

FPtr eliminate_slot_ops(const FPtr& f) {
  if (f->kind == FKind::Prime || f->kind == FKind::Tilde) {
    FPtr body = eliminate_slot_ops(f->kids[0]);
    bool swap = f->kind == FKind::Tilde;
    return subst_indices(
        body,
        [&](int k) -> FPtr {
          if (k == 1) return index(2);
          if (k == 2) return index(swap ? 1 : 2);
          return index(k - 2);
        },
        0);
  }
  return map_kids(
      f, [&](const FPtr& k, int) { return eliminate_slot_ops(k); });
}

FPtr normalize(const FPtr& f) {
  Normalizer n;
  FPtr r = n.go(eliminate_slot_ops(f));
  if (!lambdas_only_under_binders(r))
    throw Error(ErrorKind::Internal, "normal form has a stray lambda");
  return r;
}

bool lambdas_only_under_binders(const FPtr& f) {
  // context: 0 = anywhere else, 1 = argument of Exists or Star,
  // 2 = immediate body of a lambda already under Star.
  std::function<bool(const FPtr&, int)> go = [&](const FPtr& t,
                                                 int ctx) -> bool {
    bool is_lam = t->kind == FKind::Lam || t->kind == FKind::NamedLam;
    if (is_lam && ctx == 0) return false;
    for (size_t i = 0; i < t->kids.size(); ++i) {
      int inner = 0;
      if (t->kind == FKind::Exists) inner = 1;
      if (t->kind == FKind::Star) inner = 2;
      if (is_lam && ctx == 2) inner = 1;  // second lambda of a closure arg
      if (!go(t->kids[i], inner)) return false;
    }
    return true;
  };
  return go(f, 0);
}

}  // namespace rl
