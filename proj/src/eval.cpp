#include "rolelogic/eval.hpp"

#include <utility>

#include "rolelogic/error.hpp"

namespace rl {

Value Value::fn(std::function<Value(const Value&)> f) {
  auto c = std::make_shared<const Callable>(Callable{std::move(f)});
  return Value{c};
}

bool Value::as_bool() const {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw Error(ErrorKind::TypeMismatch, "expected a boolean value");
}

int Value::as_elem() const {
  if (const int* e = std::get_if<int>(&v)) return *e;
  throw Error(ErrorKind::TypeMismatch, "expected an object value");
}

Value Value::apply(const Value& arg) const {
  if (auto c = std::get_if<std::shared_ptr<const Callable>>(&v))
    return (*c)->fn(arg);
  throw Error(ErrorKind::TypeMismatch, "applying a non-function value");
}

namespace {

Value lift_unary(const Structure& s, const std::string& name) {
  return Value::fn([&s, name](const Value& a) {
    return Value::of(s.in_unary(name, a.as_elem()));
  });
}

Value lift_binary(const Structure& s, const std::string& name) {
  return Value::fn([&s, name](const Value& a) {
    int x = a.as_elem();
    return Value::fn([&s, name, x](const Value& b) {
      return Value::of(s.in_binary(name, x, b.as_elem()));
    });
  });
}

int slot(const Env& e, int k, const FPtr& at) {
  if (k < 1 || static_cast<size_t>(k) > e.stack.size())
    throw Error(ErrorKind::StackUnderflow,
                "index #" + std::to_string(k) + " with stack depth " +
                    std::to_string(e.stack.size()),
                at->span);
  return e.stack[k - 1];
}

Value eval(const FPtr& f, const Structure& s, const Env& e);

Value eval_star(const FPtr& f, const Structure& s, const Env& e) {
  Value rel = eval(f->kids[0], s, e);
  int n = s.size();
  // Reflexive-transitive closure by iterated squaring over the finite
  // universe; cubic in |U| and independent of path length.
  std::vector<std::vector<bool>> m(n + 1, std::vector<bool>(n + 1, false));
  for (int a = 1; a <= n; ++a) {
    Value row = rel.apply(Value::of(a));
    m[a][a] = true;
    for (int b = 1; b <= n; ++b)
      if (row.apply(Value::of(b)).as_bool()) m[a][b] = true;
  }
  for (int k = 1; k <= n; ++k)
    for (int a = 1; a <= n; ++a)
      if (m[a][k])
        for (int b = 1; b <= n; ++b)
          if (m[k][b]) m[a][b] = true;
  auto closed = std::make_shared<std::vector<std::vector<bool>>>(std::move(m));
  return Value::fn([closed](const Value& a) {
    int x = a.as_elem();
    return Value::fn([closed, x](const Value& b) {
      int y = b.as_elem();
      // Elements outside the materialized square relate only to themselves.
      if (x >= static_cast<int>(closed->size()) ||
          y >= static_cast<int>(closed->size()))
        return Value::of(x == y);
      return Value::of((*closed)[x][y]);
    });
  });
}

Value eval(const FPtr& f, const Structure& s, const Env& e) {
  switch (f->kind) {
    case FKind::True:
      return Value::of(true);
    case FKind::Var: {
      auto it = e.named.find(f->name);
      if (it != e.named.end()) return it->second;
      if (s.has_unary(f->name)) return lift_unary(s, f->name);
      if (s.has_binary(f->name)) return lift_binary(s, f->name);
      throw Error(ErrorKind::UnboundName, "'" + f->name + "'", f->span);
    }
    case FKind::Index:
      return Value::of(slot(e, f->num, f));
    case FKind::Id:
      return Value::fn([](const Value& a) {
        int x = a.as_elem();
        return Value::fn(
            [x](const Value& b) { return Value::of(x == b.as_elem()); });
      });
    case FKind::And:
      return Value::of(eval(f->kids[0], s, e).as_bool() &&
                       eval(f->kids[1], s, e).as_bool());
    case FKind::Not:
      return Value::of(!eval(f->kids[0], s, e).as_bool());
    case FKind::Exists: {
      Value set = eval(f->kids[0], s, e);
      for (int o = 1; o <= s.size(); ++o)
        if (set.apply(Value::of(o)).as_bool()) return Value::of(true);
      return Value::of(false);
    }
    case FKind::Lam: {
      FPtr body = f->kids[0];
      Env captured = e;
      return Value::fn([body, &s, captured](const Value& d) {
        return eval(body, s, captured.pushed(d.as_elem()));
      });
    }
    case FKind::NamedLam: {
      FPtr body = f->kids[0];
      std::string name = f->name;
      Env captured = e;
      return Value::fn([body, name, &s, captured](const Value& d) {
        return eval(body, s, captured.with(name, d));
      });
    }
    case FKind::App:
      return eval(f->kids[0], s, e).apply(eval(f->kids[1], s, e));
    case FKind::Prime: {
      int d = slot(e, 2, f);
      Env inner = e.pushed(d).pushed(d);
      return eval(f->kids[0], s, inner);
    }
    case FKind::Tilde: {
      int d1 = slot(e, 1, f);
      int d2 = slot(e, 2, f);
      Env inner = e.pushed(d1).pushed(d2);
      return eval(f->kids[0], s, inner);
    }
    case FKind::CardGeq: {
      int want = f->num;
      if (want == 0) return Value::of(true);
      int found = 0;
      for (int o = 1; o <= s.size(); ++o) {
        if (eval(f->kids[0], s, e.pushed(o)).as_bool() && ++found >= want)
          return Value::of(true);
      }
      return Value::of(false);
    }
    case FKind::Star:
      return eval_star(f, s, e);
    default:
      throw Error(ErrorKind::Internal,
                  std::string("cannot evaluate sugared constructor '") +
                      kind_name(f->kind) + "'; desugar first",
                  f->span);
  }
}

}  // namespace

Value eval_value(const FPtr& f, const Structure& s, const Env& e) {
  return eval(f, s, e);
}

bool eval_formula(const FPtr& f, const Structure& s, const Env& e) {
  return eval(f, s, e).as_bool();
}

}  // namespace rl
