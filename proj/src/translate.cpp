#include "rolelogic/translate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "rolelogic/error.hpp"

namespace rl {

using fo::atom_b;
using fo::atom_u;
using fo::eq;
using fo::exists_geq;

namespace {

FOPtr map_kids(const FOPtr& f, const std::function<FOPtr(const FOPtr&)>& fn) {
  std::vector<FOPtr> kids;
  kids.reserve(f->kids.size());
  bool changed = false;
  for (const auto& k : f->kids) {
    FOPtr r = fn(k);
    changed = changed || r != k;
    kids.push_back(std::move(r));
  }
  if (!changed) return f;
  return fo::make(f->kind, f->pred, f->v1, f->v2, f->num, std::move(kids),
                  f->span);
}

}  // namespace

FOPtr ensure_counting_condition(const FOPtr& f) {
  FOPtr r = map_kids(f, ensure_counting_condition);
  if (r->kind == FOKind::ExistsGeq && r->kids[0]->kind != FOKind::True) {
    auto fv = free_vars(r->kids[0]);
    if (!fv.count(r->v1))
      return fo::land(r->kids[0], exists_geq(r->num, r->v1, fo::truth()));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Renaming bound variables into {x, y}.

namespace {

// Bound variables z such that some free occurrence of v lies in their scope.
std::set<std::string> capturing(const std::string& v, const FOPtr& f) {
  switch (f->kind) {
    case FOKind::ExistsGeq: {
      auto fv = free_vars(f);
      if (!fv.count(v)) return {};
      auto c = capturing(v, f->kids[0]);
      c.insert(f->v1);
      return c;
    }
    default: {
      std::set<std::string> c;
      for (const auto& k : f->kids) {
        auto s = capturing(v, k);
        c.insert(s.begin(), s.end());
      }
      return c;
    }
  }
}

bool subset_of(const std::set<std::string>& s, const std::string& only) {
  for (const auto& v : s)
    if (v != only) return false;
  return true;
}

// Swaps the names x and y everywhere (safe once frees avoid both).
FOPtr swap_xy(const FOPtr& f) {
  auto sw = [](const std::string& v) {
    if (v == "x") return std::string("y");
    if (v == "y") return std::string("x");
    return v;
  };
  std::vector<FOPtr> kids;
  kids.reserve(f->kids.size());
  for (const auto& k : f->kids) kids.push_back(swap_xy(k));
  return fo::make(f->kind, f->pred, sw(f->v1), sw(f->v2), f->num,
                  std::move(kids), f->span);
}

// Renames free occurrences of `from`; binders shadowing `from` stop the walk.
FOPtr rename_free_var(const FOPtr& f, const std::string& from,
                      const std::string& to) {
  if (f->kind == FOKind::ExistsGeq && f->v1 == from) return f;
  auto rn = [&](const std::string& v) { return v == from ? to : v; };
  std::vector<FOPtr> kids;
  kids.reserve(f->kids.size());
  for (const auto& k : f->kids)
    kids.push_back(rename_free_var(k, from, to));
  return fo::make(f->kind, f->pred, rn(f->v1), rn(f->v2), f->num,
                  std::move(kids), f->span);
}

FOPtr rename_all_bound(const FOPtr& f, int* counter) {
  switch (f->kind) {
    case FOKind::ExistsGeq: {
      FOPtr body = rename_all_bound(f->kids[0], counter);
      std::string fresh = "v" + std::to_string((*counter)++) + "#";
      return exists_geq(f->num, fresh, rename_free_var(body, f->v1, fresh));
    }
    default:
      return map_kids(
          f, [&](const FOPtr& k) { return rename_all_bound(k, counter); });
  }
}

// True when every free variable's capturing set fits the orientation that
// sends u-like variables under x-binders and v-like variables under y.
bool fits(const FOPtr& f, const std::string& u, const std::string& v,
          const std::string& u_side, const std::string& v_side) {
  return subset_of(capturing(u, f), u_side) &&
         subset_of(capturing(v, f), v_side);
}

FOPtr to_two_names(const FOPtr& f) {
  switch (f->kind) {
    case FOKind::True:
    case FOKind::AtomU:
    case FOKind::AtomB:
    case FOKind::Eq:
      return f;
    case FOKind::Not:
      return fo::lnot(to_two_names(f->kids[0]));
    case FOKind::And:
    case FOKind::Or: {
      FOPtr a = to_two_names(f->kids[0]);
      FOPtr b = to_two_names(f->kids[1]);
      auto fv = free_vars(f);
      std::vector<std::string> vs(fv.begin(), fv.end());
      if (vs.size() > 2)
        throw Error(ErrorKind::TooManyFreeVars,
                    "conjunction with more than two free variables", f->span);
      std::string u = vs.size() > 0 ? vs[0] : "";
      std::string v = vs.size() > 1 ? vs[1] : "";
      bool a_xy = fits(a, u, v, "x", "y");
      bool a_yx = fits(a, u, v, "y", "x");
      bool b_xy = fits(b, u, v, "x", "y");
      bool b_yx = fits(b, u, v, "y", "x");
      if ((a_xy && b_xy) || (a_yx && b_yx))
        return fo::make(f->kind, "", "", "", 0, {a, b}, f->span);
      auto swappable = [](const FOPtr& t) {
        auto fvs = free_vars(t);
        return !fvs.count("x") && !fvs.count("y");
      };
      if (((a_xy && b_yx) || (a_yx && b_xy)) && swappable(b))
        return fo::make(f->kind, "", "", "", 0, {a, swap_xy(b)}, f->span);
      throw Error(ErrorKind::Internal, "incompatible capturing profiles",
                  f->span);
    }
    case FOKind::ExistsGeq: {
      FOPtr body = to_two_names(f->kids[0]);
      const std::string& w = f->v1;
      auto fv = free_vars(f);
      if (fv.size() > 1)
        throw Error(ErrorKind::TooManyFreeVars,
                    "counting body with two outer variables", f->span);
      std::string u = fv.empty() ? "" : *fv.begin();
      // The chosen bound name must not itself occur free in the body.
      auto body_fv = free_vars(body);
      body_fv.erase(w);
      if (subset_of(capturing(u, body), "x") &&
          subset_of(capturing(w, body), "y") && !body_fv.count("x"))
        return exists_geq(f->num, "x", rename_free_var(body, w, "x"));
      if (subset_of(capturing(u, body), "y") &&
          subset_of(capturing(w, body), "x") && !body_fv.count("y"))
        return exists_geq(f->num, "y", rename_free_var(body, w, "y"));
      throw Error(ErrorKind::Internal, "no admissible bound name", f->span);
    }
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

}  // namespace

FOPtr d2_to_c2(const FOPtr& f) {
  auto pre = check_d2(f);
  if (!pre.ok)
    throw Error(ErrorKind::TooManyFreeVars, pre.reason, f->span, pre.path);
  int counter = 0;
  FOPtr renamed = rename_all_bound(f, &counter);
  return to_two_names(renamed);
}

// ---------------------------------------------------------------------------
// Alternation.

namespace {

// Quantifier subformulas in the propositional scope of a node (not looking
// through quantifiers).
void propositional_quantifiers(const FOPtr& f, std::vector<FOPtr>* out) {
  if (f->kind == FOKind::ExistsGeq) {
    out->push_back(f);
    return;
  }
  for (const auto& k : f->kids) propositional_quantifiers(k, out);
}

bool has_offender(const FOPtr& body, const std::string& v) {
  std::vector<FOPtr> qs;
  propositional_quantifiers(body, &qs);
  for (const auto& q : qs)
    if (q->v1 == v) return true;
  return false;
}

// Leaves of the propositional skeleton: atoms and quantified subformulas.
void skeleton_leaves(const FOPtr& f, std::vector<FOPtr>* out) {
  switch (f->kind) {
    case FOKind::And:
    case FOKind::Or:
    case FOKind::Not:
      for (const auto& k : f->kids) skeleton_leaves(k, out);
      return;
    default:
      for (const auto& l : *out)
        if (equal(l, f)) return;
      out->push_back(f);
  }
}

bool eval_skeleton(const FOPtr& f, const std::vector<FOPtr>& leaves,
                   const std::vector<bool>& vals) {
  switch (f->kind) {
    case FOKind::And:
      return eval_skeleton(f->kids[0], leaves, vals) &&
             eval_skeleton(f->kids[1], leaves, vals);
    case FOKind::Or:
      return eval_skeleton(f->kids[0], leaves, vals) ||
             eval_skeleton(f->kids[1], leaves, vals);
    case FOKind::Not:
      return !eval_skeleton(f->kids[0], leaves, vals);
    default:
      for (size_t i = 0; i < leaves.size(); ++i)
        if (equal(leaves[i], f)) return vals[i];
      throw Error(ErrorKind::Internal, "leaf not found");
  }
}

struct Alternator {
  AlternateOptions opts;
  int budget_used = 0;

  void charge(const FOPtr& f) {
    budget_used += node_count(f);
    if (budget_used > opts.node_budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "alternation rewrite exceeded the node budget");
  }

  // exists>=k v (cube) where the cube's v-free conjuncts (including all
  // same-variable quantifiers) are hoisted outside the quantifier.
  FOPtr quantify_cube(int k, const std::string& v,
                      const std::vector<FOPtr>& cube_lits) {
    std::vector<FOPtr> with_v, without_v;
    for (const auto& l : cube_lits) {
      if (free_vars(l).count(v))
        with_v.push_back(l);
      else
        without_v.push_back(l);
    }
    FOPtr body;
    if (with_v.empty()) {
      body = fo::truth();
    } else {
      body = with_v[0];
      for (size_t i = 1; i < with_v.size(); ++i)
        body = fo::land(body, with_v[i]);
    }
    FOPtr result = exists_geq(k, v, body);
    for (const auto& q : without_v) result = fo::land(q, result);
    return result;
  }

  FOPtr fix_quantifier(int num, const std::string& v, const FOPtr& body) {
    if (num == 0) return fo::truth();

    std::vector<FOPtr> leaves;
    skeleton_leaves(body, &leaves);
    size_t m = leaves.size();
    if (m > 20)
      throw Error(ErrorKind::BudgetExceeded,
                  "too many distinct leaves for cube expansion");
    // Canonical cubes: one per satisfying sign pattern of the skeleton.
    std::vector<std::vector<FOPtr>> cubes;
    for (size_t bits = 0; bits < (size_t{1} << m); ++bits) {
      std::vector<bool> vals(m);
      for (size_t i = 0; i < m; ++i) vals[i] = (bits >> i) & 1;
      if (!eval_skeleton(body, leaves, vals)) continue;
      std::vector<FOPtr> lits;
      for (size_t i = 0; i < m; ++i)
        lits.push_back(vals[i] ? leaves[i] : fo::lnot(leaves[i]));
      cubes.push_back(std::move(lits));
    }
    if (cubes.empty()) return fo::falsity();  // propositionally contradictory body

    // Distribute the threshold over the pairwise-contradictory cubes.
    std::vector<FOPtr> alts;
    std::vector<int> parts;
    std::function<void(int, size_t)> rec = [&](int rem, size_t i) {
      if (i + 1 == cubes.size()) {
        parts.push_back(rem);
        FOPtr conj;
        for (size_t j = 0; j < cubes.size(); ++j) {
          if (parts[j] == 0) continue;  // at-least-zero is vacuous
          FOPtr piece = quantify_cube(parts[j], v, cubes[j]);
          conj = conj ? fo::land(conj, piece) : piece;
        }
        if (!conj) conj = fo::truth();
        charge(conj);
        alts.push_back(conj);
        parts.pop_back();
        return;
      }
      for (int val = 0; val <= rem; ++val) {
        parts.push_back(val);
        rec(rem - val, i + 1);
        parts.pop_back();
      }
    };
    rec(num, 0);
    FOPtr r = alts[0];
    for (size_t i = 1; i < alts.size(); ++i) r = fo::lor(r, alts[i]);
    return r;
  }

  FOPtr go(const FOPtr& f) {
    FOPtr r = map_kids(f, [&](const FOPtr& k) { return go(k); });
    if (r->kind == FOKind::ExistsGeq && has_offender(r->kids[0], r->v1))
      return fix_quantifier(r->num, r->v1, r->kids[0]);
    return r;
  }
};

}  // namespace

FOPtr alternate(const FOPtr& f, const AlternateOptions& opts) {
  Alternator a{opts};
  return a.go(f);
}

std::pair<FOPtr, std::vector<IntroducedPred>> alternate_satpreserving(
    const FOPtr& f) {
  std::vector<IntroducedPred> defs;
  int next = 1;

  // Bottom-up: replace offending inner quantifiers by fresh unary atoms.
  std::function<FOPtr(const FOPtr&)> go = [&](const FOPtr& t) -> FOPtr {
    FOPtr r = map_kids(t, go);
    if (r->kind != FOKind::ExistsGeq) return r;
    const std::string& v = r->v1;
    FOPtr body = r->kids[0];
    while (has_offender(body, v)) {
      // Find one offending literal in the propositional scope.
      std::vector<FOPtr> qs;
      propositional_quantifiers(body, &qs);
      FOPtr offender;
      for (const auto& q : qs)
        if (q->v1 == v) {
          offender = q;
          break;
        }
      auto fv = free_vars(offender);
      std::string other = fv.empty() ? (v == "x" ? "y" : "x") : *fv.begin();
      std::string pname = "P" + std::to_string(next++);
      FOPtr replacement = atom_u(pname, other);
      std::function<FOPtr(const FOPtr&)> replace =
          [&](const FOPtr& u) -> FOPtr {
        if (equal(u, offender)) return replacement;
        if (u->kind == FOKind::ExistsGeq) return u;
        return map_kids(u, replace);
      };
      body = replace(body);
      defs.push_back(
          {pname, fo::forall(other, fo::iff(atom_u(pname, other), offender))});
    }
    return exists_geq(r->num, v, body);
  };

  FOPtr core = go(f);
  FOPtr out = core;
  for (const auto& d : defs) out = fo::land(out, d.definition);
  return {out, defs};
}

// ---------------------------------------------------------------------------
// Named form <-> index form.

I2Ptr c2_to_i2(const FOPtr& f, const SlotEnv& env) {
  auto slot_of = [&](const std::string& v, const SourceSpan& span) {
    auto it = env.find(v);
    if (it == env.end())
      throw Error(ErrorKind::AlternationViolated,
                  "variable '" + v + "' lost its slot", span);
    return it->second;
  };
  switch (f->kind) {
    case FOKind::True:
      return i2::truth();
    case FOKind::AtomU:
      return i2::atom_u(f->pred, slot_of(f->v1, f->span));
    case FOKind::AtomB:
      return i2::atom_b(f->pred, slot_of(f->v1, f->span),
                        slot_of(f->v2, f->span));
    case FOKind::Eq:
      return i2::eq(slot_of(f->v1, f->span), slot_of(f->v2, f->span));
    case FOKind::And:
      return i2::land(c2_to_i2(f->kids[0], env), c2_to_i2(f->kids[1], env));
    case FOKind::Or:
      return i2::lor(c2_to_i2(f->kids[0], env), c2_to_i2(f->kids[1], env));
    case FOKind::Not:
      return i2::lnot(c2_to_i2(f->kids[0], env));
    case FOKind::ExistsGeq: {
      // Counting moves slot 1 to slot 2 and loses the old slot 2, so every
      // other free variable of the body must currently sit in slot 1.
      for (const auto& v : free_vars(f->kids[0])) {
        if (v == f->v1) continue;
        auto it = env.find(v);
        if (it == env.end() || it->second != 1)
          throw Error(ErrorKind::AlternationViolated,
                      "variable '" + v +
                          "' must occupy slot 1 before binding '" + f->v1 +
                          "'",
                      f->span);
      }
      SlotEnv inner;
      for (const auto& [v, s] : env)
        if (s == 1 && v != f->v1) inner[v] = 2;
      inner[f->v1] = 1;
      return i2::card_geq(f->num, c2_to_i2(f->kids[0], inner));
    }
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

namespace {

// Variables that are read inside some counting body, i.e. must start in
// slot 1 when the enclosing quantifier is at the top level.
void slot1_constraints(const FOPtr& f, bool under_quant,
                       std::set<std::string>* out) {
  if (f->kind == FOKind::ExistsGeq) {
    if (!under_quant)
      for (const auto& v : free_vars(f->kids[0]))
        if (v != f->v1) out->insert(v);
    slot1_constraints(f->kids[0], true, out);
    return;
  }
  for (const auto& k : f->kids) slot1_constraints(k, under_quant, out);
}

void structural_alternation_check(const FOPtr& f) {
  if (f->kind == FOKind::ExistsGeq && has_offender(f->kids[0], f->v1))
    throw Error(ErrorKind::AlternationViolated,
                "nested counting over '" + f->v1 + "'", f->span);
  for (const auto& k : f->kids) structural_alternation_check(k);
}

}  // namespace

std::pair<I2Ptr, SlotEnv> c2_to_i2_auto(const FOPtr& f) {
  structural_alternation_check(f);
  std::set<std::string> need1;
  slot1_constraints(f, false, &need1);
  if (need1.size() > 1)
    throw Error(ErrorKind::AlternationViolated,
                "two variables would need slot 1 at the top level");
  SlotEnv env;
  std::string first = need1.empty() ? "" : *need1.begin();
  if (!first.empty()) env[first] = 1;
  // Fill remaining free and bound names deterministically.
  auto fv = free_vars(f);
  fv.insert("x");
  fv.insert("y");
  for (const auto& v : fv) {
    if (env.count(v)) continue;
    if (env.empty()) {
      env[v] = v == "y" ? 2 : 1;
      continue;
    }
    bool has1 = false, has2 = false;
    for (const auto& [_, s] : env) {
      has1 = has1 || s == 1;
      has2 = has2 || s == 2;
    }
    env[v] = !has1 ? 1 : (!has2 ? 2 : (v == "x" ? 1 : 2));
  }
  if (!env.count("x")) env["x"] = 1;
  if (!env.count("y")) env["y"] = env["x"] == 1 ? 2 : 1;
  return {c2_to_i2(f, env), env};
}

I2Ptr c2_to_i2(const FOPtr& f) { return c2_to_i2_auto(f).first; }

FOPtr i2_to_c2(const I2Ptr& f, const std::map<int, std::string>& env) {
  auto var_of = [&](int slot) {
    auto it = env.find(slot);
    if (it == env.end())
      throw Error(ErrorKind::Internal, "slot environment incomplete");
    return it->second;
  };
  switch (f->kind) {
    case I2Kind::True:
      return fo::truth();
    case I2Kind::AtomU:
      return atom_u(f->pred, var_of(f->i1));
    case I2Kind::AtomB:
      return atom_b(f->pred, var_of(f->i1), var_of(f->i2));
    case I2Kind::Eq:
      return eq(var_of(f->i1), var_of(f->i2));
    case I2Kind::And:
      return fo::land(i2_to_c2(f->kids[0], env), i2_to_c2(f->kids[1], env));
    case I2Kind::Or:
      return fo::lor(i2_to_c2(f->kids[0], env), i2_to_c2(f->kids[1], env));
    case I2Kind::Not:
      return fo::lnot(i2_to_c2(f->kids[0], env));
    case I2Kind::CardGeq: {
      std::string fresh = var_of(1) == "x" ? "y" : "x";
      std::map<int, std::string> inner{{1, fresh}, {2, var_of(1)}};
      return exists_geq(f->num, fresh, i2_to_c2(f->kids[0], inner));
    }
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

R2Ptr i2_to_rl2(const I2Ptr& f) {
  switch (f->kind) {
    case I2Kind::True:
      return rl2::truth();
    case I2Kind::AtomU:
      return f->i1 == 1 ? rl2::pred_u(f->pred)
                        : rl2::prime(rl2::pred_u(f->pred));
    case I2Kind::AtomB: {
      R2Ptr b = rl2::pred_b(f->pred);
      if (f->i1 == 2 && f->i2 == 1) return b;
      if (f->i1 == 1 && f->i2 == 2) return rl2::tilde(b);
      if (f->i1 == 2 && f->i2 == 2) return rl2::prime(b);
      return rl2::tilde(rl2::prime(b));  // f(#1,#1)
    }
    case I2Kind::Eq:
      return f->i1 == f->i2 ? rl2::truth() : rl2::id();
    case I2Kind::And:
      return rl2::land(i2_to_rl2(f->kids[0]), i2_to_rl2(f->kids[1]));
    case I2Kind::Or:
      return rl2::lor(i2_to_rl2(f->kids[0]), i2_to_rl2(f->kids[1]));
    case I2Kind::Not:
      return rl2::lnot(i2_to_rl2(f->kids[0]));
    case I2Kind::CardGeq:
      return rl2::card_geq(f->num, i2_to_rl2(f->kids[0]));
  }
  throw Error(ErrorKind::Internal, "unhandled formula kind");
}

// ---------------------------------------------------------------------------
// Index-free fragment to bounded-variable form.

namespace {

struct RdEnv {
  int counter = 2;  // highest fresh-variable subscript used so far
  std::string s1 = "y1", s2 = "y2";
};

FOPtr rd(const R2Ptr& f, const RdEnv& e) {
  switch (f->kind) {
    case R2Kind::True:
      return fo::truth();
    case R2Kind::PredU:
      return atom_u(f->name, e.s1);
    case R2Kind::PredB:
      return atom_b(f->name, e.s2, e.s1);
    case R2Kind::Id:
      return eq(e.s2, e.s1);
    case R2Kind::And:
      return fo::land(rd(f->kids[0], e), rd(f->kids[1], e));
    case R2Kind::Not:
      return fo::lnot(rd(f->kids[0], e));
    case R2Kind::Prime:
      return rd(f->kids[0], RdEnv{e.counter, e.s2, e.s2});
    case R2Kind::Tilde:
      return rd(f->kids[0], RdEnv{e.counter, e.s2, e.s1});
    case R2Kind::CardGeq: {
      int n = e.counter + 1;
      std::string fresh = "y" + std::to_string(n);
      return exists_geq(f->num, fresh, rd(f->kids[0], RdEnv{n, fresh, e.s1}));
    }
  }
  throw Error(ErrorKind::Internal, "unhandled fragment kind");
}

}  // namespace

FOPtr rl2_to_d2(const R2Ptr& f) {
  FOPtr r = rd(f, RdEnv{});
  auto check = check_d2(r);
  if (!check.ok)
    throw Error(ErrorKind::Internal,
                "translation left the bounded-variable fragment: " +
                    check.reason);
  return r;
}

// ---------------------------------------------------------------------------
// The composed loop.

namespace {

// Translate one top-level piece (an atom or a maximal quantified subtree)
// choosing the slot environment from the piece's free variables; pieces
// whose frees correspond to slot 2 are translated mirrored and rewrapped
// with a swap.
R2Ptr loop_piece(const FOPtr& piece) {
  auto fv = free_vars(piece);
  bool uses_y2 = fv.count("y2") != 0;
  bool uses_y1 = fv.count("y1") != 0;
  if (uses_y1 && uses_y2 && piece->kind == FOKind::ExistsGeq)
    throw Error(ErrorKind::AlternationViolated,
                "quantified piece reads both slots");
  SlotEnv env;
  if (piece->kind != FOKind::ExistsGeq) {
    // atom: direct slot read-off
    env = SlotEnv{{"y1", 1}, {"y2", 2}};
    return i2_to_rl2(c2_to_i2(piece, env));
  }
  if (uses_y2) {
    env = SlotEnv{{"y2", 1}, {"y1", 2}};
    return rl2::tilde(i2_to_rl2(c2_to_i2(piece, env)));
  }
  env = SlotEnv{{"y1", 1}, {"y2", 2}};
  return i2_to_rl2(c2_to_i2(piece, env));
}

R2Ptr loop_split(const FOPtr& f) {
  switch (f->kind) {
    case FOKind::And:
      return rl2::land(loop_split(f->kids[0]), loop_split(f->kids[1]));
    case FOKind::Or:
      return rl2::lor(loop_split(f->kids[0]), loop_split(f->kids[1]));
    case FOKind::Not:
      return rl2::lnot(loop_split(f->kids[0]));
    case FOKind::True:
      return rl2::truth();
    default:
      return loop_piece(f);
  }
}

}  // namespace

R2Ptr rl2_loop(const R2Ptr& f, const AlternateOptions& opts) {
  FOPtr d2 = rl2_to_d2(f);
  FOPtr d2c = ensure_counting_condition(d2);
  FOPtr c2 = d2_to_c2(d2c);
  FOPtr alt = alternate(c2, opts);
  return loop_split(alt);
}

}  // namespace rl
