#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rolelogic/formula.hpp"
#include "rolelogic/structure.hpp"

namespace rl {

// Semantic values: booleans, universe elements, and functions. Functions are
// closures over immutable data, so values are safe to copy and share.
struct Value;

struct Callable {
  std::function<Value(const Value&)> fn;
};

struct Value {
  std::variant<bool, int, std::shared_ptr<const Callable>> v;

  static Value of(bool b) { return Value{b}; }
  static Value of(int e) { return Value{e}; }
  static Value fn(std::function<Value(const Value&)> f);

  bool as_bool() const;
  int as_elem() const;
  Value apply(const Value& arg) const;
};

// Evaluation environment: a stack of universe elements for de Bruijn
// indices (front = most recently bound) and named bindings. Relation symbols
// not bound here are looked up in the structure.
struct Env {
  std::vector<int> stack;
  std::map<std::string, Value> named;

  Env pushed(int e) const {
    Env r = *this;
    r.stack.insert(r.stack.begin(), e);
    return r;
  }
  Env with(const std::string& name, Value v) const {
    Env r = *this;
    r.named.insert_or_assign(name, std::move(v));
    return r;
  }
};

// Evaluates a core term over a finite structure. Boolean formulas return a
// boolean value; open types return elements or closures. Counting pushes
// each candidate onto the stack; the closure operator materializes its
// argument as a relation and closes it reflexively and transitively.
Value eval_value(const FPtr& f, const Structure& s, const Env& e);

// Convenience wrapper for boolean formulas.
bool eval_formula(const FPtr& f, const Structure& s, const Env& e = {});

}  // namespace rl
