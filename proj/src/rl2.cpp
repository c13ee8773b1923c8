#include "rolelogic/rl2.hpp"

#include <functional>

#include "rolelogic/error.hpp"

namespace rl {

bool equal(const R2Ptr& a, const R2Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->num != b->num)
    return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

int node_count(const R2Ptr& f) {
  int n = 1;
  for (const auto& k : f->kids) n += node_count(k);
  return n;
}

namespace rl2 {

R2Ptr make(R2Kind kind, std::string name, int num, std::vector<R2Ptr> kids,
           SourceSpan span) {
  auto f = std::make_shared<RL2Formula>();
  f->kind = kind;
  f->name = std::move(name);
  f->num = num;
  f->kids = std::move(kids);
  f->span = std::move(span);
  return f;
}

R2Ptr truth() { return make(R2Kind::True, "", 0, {}); }
R2Ptr pred_u(std::string name, SourceSpan span) {
  return make(R2Kind::PredU, std::move(name), 0, {}, std::move(span));
}
R2Ptr pred_b(std::string name, SourceSpan span) {
  return make(R2Kind::PredB, std::move(name), 0, {}, std::move(span));
}
R2Ptr id() { return make(R2Kind::Id, "", 0, {}); }
R2Ptr land(R2Ptr a, R2Ptr b) {
  return make(R2Kind::And, "", 0, {std::move(a), std::move(b)});
}
R2Ptr lnot(R2Ptr a) { return make(R2Kind::Not, "", 0, {std::move(a)}); }
R2Ptr prime(R2Ptr a) { return make(R2Kind::Prime, "", 0, {std::move(a)}); }
R2Ptr tilde(R2Ptr a) { return make(R2Kind::Tilde, "", 0, {std::move(a)}); }
R2Ptr card_geq(int k, R2Ptr a) {
  return make(R2Kind::CardGeq, "", k, {std::move(a)});
}
R2Ptr lor(R2Ptr a, R2Ptr b) {
  return lnot(land(lnot(std::move(a)), lnot(std::move(b))));
}
R2Ptr implies(R2Ptr a, R2Ptr b) {
  return lnot(land(std::move(a), lnot(std::move(b))));
}
R2Ptr iff(R2Ptr a, R2Ptr b) {
  return land(implies(a, b), implies(b, a));
}
R2Ptr curly(R2Ptr a) { return card_geq(1, std::move(a)); }
R2Ptr square(R2Ptr a) { return lnot(curly(lnot(std::move(a)))); }
R2Ptr falsity() { return lnot(truth()); }

}  // namespace rl2

bool eval_rl2(const R2Ptr& f, const Structure& s, const PairEnv& e) {
  switch (f->kind) {
    case R2Kind::True:
      return true;
    case R2Kind::PredU:
      return s.in_unary(f->name, e.slot1);
    case R2Kind::PredB:
      return s.in_binary(f->name, e.slot2, e.slot1);
    case R2Kind::Id:
      return e.slot2 == e.slot1;
    case R2Kind::And:
      return eval_rl2(f->kids[0], s, e) && eval_rl2(f->kids[1], s, e);
    case R2Kind::Not:
      return !eval_rl2(f->kids[0], s, e);
    case R2Kind::Prime:
      return eval_rl2(f->kids[0], s, PairEnv{e.slot2, e.slot2});
    case R2Kind::Tilde:
      return eval_rl2(f->kids[0], s, PairEnv{e.slot2, e.slot1});
    case R2Kind::CardGeq: {
      if (f->num == 0) return true;
      int found = 0;
      for (int o = 1; o <= s.size(); ++o)
        if (eval_rl2(f->kids[0], s, PairEnv{o, e.slot1}) && ++found >= f->num)
          return true;
      return false;
    }
  }
  throw Error(ErrorKind::Internal, "unhandled fragment kind");
}

namespace {

[[noreturn]] void reject(const FPtr& f, const std::string& path) {
  throw Error(ErrorKind::NotInFragment,
              std::string("'") + kind_name(f->kind) +
                  "' is outside the index-free fragment",
              f->span, path);
}

struct Coercer {
  const Vocabulary& vocab;

  R2Ptr atom(const std::string& name, const SourceSpan& span,
             const std::string& path) {
    auto [base, tag] = split_tag(name);
    if (vocab.is_unary(base)) return rl2::pred_u(name, span);
    if (vocab.is_binary(base)) return rl2::pred_b(name, span);
    throw Error(ErrorKind::UnboundName, "'" + name + "'", span, path);
  }

  // Accepts the canonical embedded atom shapes A #1, f #2 #1, id #2 #1.
  R2Ptr applied_atom(const FPtr& f, const std::string& path) {
    const FPtr& fn = f->kids[0];
    const FPtr& arg = f->kids[1];
    if (fn->kind == FKind::Var && arg->kind == FKind::Index &&
        arg->num == 1) {
      auto [base, tag] = split_tag(fn->name);
      if (vocab.is_unary(base)) return rl2::pred_u(fn->name, fn->span);
    }
    if (fn->kind == FKind::App && arg->kind == FKind::Index && arg->num == 1) {
      const FPtr& head = fn->kids[0];
      const FPtr& first = fn->kids[1];
      if (first->kind == FKind::Index && first->num == 2) {
        if (head->kind == FKind::Id) return rl2::id();
        if (head->kind == FKind::Var) {
          auto [base, tag] = split_tag(head->name);
          if (vocab.is_binary(base)) return rl2::pred_b(head->name, head->span);
        }
      }
    }
    reject(f, path);
  }

  std::vector<R2Ptr> go_kids(const FPtr& f, const std::string& path) {
    std::vector<R2Ptr> kids;
    for (size_t i = 0; i < f->kids.size(); ++i)
      kids.push_back(go(f->kids[i], path + "/" + std::to_string(i)));
    return kids;
  }

  R2Ptr go(const FPtr& f, const std::string& path) {
    switch (f->kind) {
      case FKind::True:
        return rl2::truth();
      case FKind::Var:
        return atom(f->name, f->span, path);
      case FKind::Id:
        return rl2::id();
      case FKind::And:
        return rl2::land(go(f->kids[0], path + "/0"),
                         go(f->kids[1], path + "/1"));
      case FKind::Not:
        return rl2::lnot(go(f->kids[0], path + "/0"));
      case FKind::Prime:
        return rl2::prime(go(f->kids[0], path + "/0"));
      case FKind::Tilde:
        return rl2::tilde(go(f->kids[0], path + "/0"));
      case FKind::CardGeq:
        return rl2::card_geq(f->num, go(f->kids[0], path + "/0"));
      case FKind::App:
        return applied_atom(f, path);
      // sugar that stays inside the fragment
      case FKind::Or:
        return rl2::lor(go(f->kids[0], path + "/0"), go(f->kids[1], path + "/1"));
      case FKind::Implies:
        return rl2::implies(go(f->kids[0], path + "/0"),
                            go(f->kids[1], path + "/1"));
      case FKind::Iff:
        return rl2::iff(go(f->kids[0], path + "/0"),
                        go(f->kids[1], path + "/1"));
      case FKind::Curly:
        return rl2::curly(go(f->kids[0], path + "/0"));
      case FKind::Square:
        return rl2::square(go(f->kids[0], path + "/0"));
      case FKind::CardEq: {
        R2Ptr a = go(f->kids[0], path + "/0");
        return rl2::land(rl2::card_geq(f->num, a),
                         rl2::lnot(rl2::card_geq(f->num + 1, a)));
      }
      case FKind::CardLeq:
        return rl2::lnot(rl2::card_geq(f->num + 1, go(f->kids[0], path + "/0")));
      case FKind::SumGeq:
      case FKind::SumEq:
      case FKind::SumLeq: {
        auto kids = go_kids(f, path);
        return sum_card(f->kind, f->num, kids);
      }
      case FKind::Disjoint: {
        auto kids = go_kids(f, path);
        if (kids.empty())
          throw Error(ErrorKind::ArityMismatch, "disjoint of no sets", f->span,
                      path);
        R2Ptr conj = rl2::truth();
        bool first = true;
        for (size_t i = 0; i < kids.size(); ++i)
          for (size_t j = i + 1; j < kids.size(); ++j) {
            R2Ptr c = rl2::lnot(rl2::land(kids[i], kids[j]));
            conj = first ? c : rl2::land(conj, c);
            first = false;
          }
        return rl2::square(conj);
      }
      case FKind::Partition: {
        auto kids = go_kids(f, path);
        if (kids.size() < 2)
          throw Error(ErrorKind::ArityMismatch, "partition needs parts",
                      f->span, path);
        std::vector<R2Ptr> parts(kids.begin() + 1, kids.end());
        R2Ptr conj = rl2::truth();
        bool first = true;
        for (size_t i = 0; i < parts.size(); ++i)
          for (size_t j = i + 1; j < parts.size(); ++j) {
            R2Ptr c = rl2::lnot(rl2::land(parts[i], parts[j]));
            conj = first ? c : rl2::land(conj, c);
            first = false;
          }
        R2Ptr un = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) un = rl2::lor(un, parts[i]);
        return rl2::land(rl2::square(conj),
                         rl2::square(rl2::iff(kids[0], un)));
      }
      case FKind::SetMinus:
        return rl2::land(go(f->kids[0], path + "/0"),
                         rl2::lnot(go(f->kids[1], path + "/1")));
      case FKind::ImageOp:
        return rl2::curly(rl2::land(go(f->kids[0], path + "/0"),
                                    rl2::tilde(go(f->kids[1], path + "/1"))));
      case FKind::Wlp:
        return rl2::square(rl2::implies(go(f->kids[0], path + "/0"),
                                        go(f->kids[1], path + "/1")));
      default:
        reject(f, path);
    }
  }

  R2Ptr sum_card(FKind kind, int k, const std::vector<R2Ptr>& bodies) {
    if (bodies.empty())
      throw Error(ErrorKind::ArityMismatch, "cardinality sum over no parts");
    if (kind == FKind::SumLeq) return rl2::lnot(sum_card(FKind::SumGeq, k + 1, bodies));
    bool exact = kind == FKind::SumEq;
    std::vector<R2Ptr> alts;
    std::vector<int> cur;
    std::function<void(int, size_t)> rec = [&](int rem, size_t i) {
      if (i + 1 == bodies.size()) {
        cur.push_back(rem);
        R2Ptr conj;
        for (size_t j = 0; j < bodies.size(); ++j) {
          R2Ptr c = exact
                        ? rl2::land(rl2::card_geq(cur[j], bodies[j]),
                                    rl2::lnot(rl2::card_geq(cur[j] + 1,
                                                            bodies[j])))
                        : rl2::card_geq(cur[j], bodies[j]);
          conj = conj ? rl2::land(conj, c) : c;
        }
        alts.push_back(conj);
        cur.pop_back();
        return;
      }
      for (int v = 0; v <= rem; ++v) {
        cur.push_back(v);
        rec(rem - v, i + 1);
        cur.pop_back();
      }
    };
    rec(k, 0);
    R2Ptr r = alts[0];
    for (size_t i = 1; i < alts.size(); ++i) r = rl2::lor(r, alts[i]);
    return r;
  }
};

}  // namespace

R2Ptr coerce_rl2(const FPtr& f, const Vocabulary& vocab) {
  Coercer c{vocab};
  return c.go(f, "");
}

FPtr embed_rl2(const R2Ptr& f) {
  using namespace fml;
  switch (f->kind) {
    case R2Kind::True:
      return truth();
    case R2Kind::PredU:
      return app(var(f->name), index(1));
    case R2Kind::PredB:
      return app(app(var(f->name), index(2)), index(1));
    case R2Kind::Id:
      return app(app(id(), index(2)), index(1));
    case R2Kind::And:
      return land(embed_rl2(f->kids[0]), embed_rl2(f->kids[1]));
    case R2Kind::Not:
      return lnot(embed_rl2(f->kids[0]));
    case R2Kind::Prime:
      return prime(embed_rl2(f->kids[0]));
    case R2Kind::Tilde:
      return tilde(embed_rl2(f->kids[0]));
    case R2Kind::CardGeq:
      return card_geq(f->num, embed_rl2(f->kids[0]));
  }
  throw Error(ErrorKind::Internal, "unhandled fragment kind");
}

namespace {

bool is_unary_cube(const R2Ptr& f) {
  switch (f->kind) {
    case R2Kind::PredU:
      return true;
    case R2Kind::And:
      return is_unary_cube(f->kids[0]) && is_unary_cube(f->kids[1]);
    case R2Kind::Not:
      return is_unary_cube(f->kids[0]);
    default:
      return false;
  }
}

bool is_edge_disjunction(const R2Ptr& f) {
  if (f->kind == R2Kind::PredB) return true;
  if (f->kind != R2Kind::Not) return false;
  if (f->kids[0]->kind == R2Kind::PredB) return true;
  // disjunction is encoded as !(!a & !b)
  if (f->kids[0]->kind == R2Kind::And) {
    const R2Ptr& a = f->kids[0]->kids[0];
    const R2Ptr& b = f->kids[0]->kids[1];
    if (a->kind == R2Kind::Not && b->kind == R2Kind::Not)
      return is_edge_disjunction(a->kids[0]) && is_edge_disjunction(b->kids[0]);
  }
  return false;
}

void flatten_and(const R2Ptr& f, std::vector<R2Ptr>* out) {
  if (f->kind == R2Kind::And) {
    flatten_and(f->kids[0], out);
    flatten_and(f->kids[1], out);
  } else {
    out->push_back(f);
  }
}

bool is_bracketed_pair_constraint(const R2Ptr& body) {
  std::vector<R2Ptr> conj;
  flatten_and(body, &conj);
  int primed = 0, plain = 0, edges = 0;
  for (const auto& c : conj) {
    if (c->kind == R2Kind::Prime && is_unary_cube(c->kids[0]))
      ++primed;
    else if (is_unary_cube(c))
      ++plain;
    else if (is_edge_disjunction(c))
      ++edges;
    else
      return false;
  }
  return primed >= 1 && plain >= 1 && edges == 1;
}

}  // namespace

bool is_bsac(const R2Ptr& f) {
  switch (f->kind) {
    case R2Kind::And:
      return is_bsac(f->kids[0]) && is_bsac(f->kids[1]);
    case R2Kind::Not:
      return is_bsac(f->kids[0]);
    case R2Kind::CardGeq: {
      if (f->num != 1) return false;  // no counting beyond the quantifiers
      const R2Ptr& body = f->kids[0];
      if (is_unary_cube(body)) return true;  // {C}
      if (body->kind == R2Kind::CardGeq && body->num == 1)
        return is_bracketed_pair_constraint(body->kids[0]);  // {{...}}
      return false;
    }
    default:
      return false;
  }
}

std::string tagged_name(const std::string& base, VocabTag tag) {
  if (!tag) return base;
  return base + "$" + std::to_string(*tag);
}

std::pair<std::string, VocabTag> split_tag(const std::string& name) {
  auto pos = name.rfind('$');
  if (pos == std::string::npos || pos + 1 >= name.size())
    return {name, std::nullopt};
  for (size_t i = pos + 1; i < name.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(name[i]))) return {name, std::nullopt};
  return {name.substr(0, pos), std::stoi(name.substr(pos + 1))};
}

R2Ptr rename_vocab(const R2Ptr& f, VocabTag i, VocabTag j) {
  if (f->kind == R2Kind::PredU || f->kind == R2Kind::PredB) {
    auto [base, tag] = split_tag(f->name);
    if (tag == i)
      return rl2::make(f->kind, tagged_name(base, j), 0, {}, f->span);
    return f;
  }
  std::vector<R2Ptr> kids;
  kids.reserve(f->kids.size());
  for (const auto& k : f->kids) kids.push_back(rename_vocab(k, i, j));
  return rl2::make(f->kind, f->name, f->num, std::move(kids), f->span);
}

Structure rename_struct(const Structure& s, VocabTag i, VocabTag j) {
  std::map<std::string, std::set<int>> unary;
  std::map<std::string, std::set<Structure::Pair>> binary;
  for (const auto& [name, elems] : s.unary()) {
    auto [base, tag] = split_tag(name);
    unary[tag == i ? tagged_name(base, j) : name] = elems;
  }
  for (const auto& [name, pairs] : s.binary()) {
    auto [base, tag] = split_tag(name);
    binary[tag == i ? tagged_name(base, j) : name] = pairs;
  }
  return Structure(s.size(), std::move(unary), std::move(binary));
}

}  // namespace rl
