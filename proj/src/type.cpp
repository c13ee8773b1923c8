#include "rolelogic/type.hpp"

#include <cassert>

namespace rl {

struct Type::Node {
  Kind kind;
  std::shared_ptr<const Node> from, to;
};

namespace {
const std::shared_ptr<const Type::Node>& bool_node() {
  static auto n = std::make_shared<const Type::Node>(
      Type::Node{Type::Kind::Bool, nullptr, nullptr});
  return n;
}
const std::shared_ptr<const Type::Node>& obj_node() {
  static auto n = std::make_shared<const Type::Node>(
      Type::Node{Type::Kind::Obj, nullptr, nullptr});
  return n;
}
}  // namespace

Type Type::boolean() { return Type(bool_node()); }
Type Type::obj() { return Type(obj_node()); }

Type Type::arrow(Type from, Type to) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Arrow, from.node_, to.node_}));
}

Type Type::rel(int k) {
  assert(k >= 0);
  Type t = boolean();
  for (int i = 0; i < k; ++i) t = arrow(obj(), t);
  return t;
}

Type::Kind Type::kind() const { return node_->kind; }

Type Type::from() const {
  assert(kind() == Kind::Arrow);
  return Type(node_->from);
}

Type Type::to() const {
  assert(kind() == Kind::Arrow);
  return Type(node_->to);
}

bool Type::is_rel(int* k) const {
  int depth = 0;
  const Node* n = node_.get();
  while (n->kind == Kind::Arrow) {
    if (n->from->kind != Kind::Obj) return false;
    ++depth;
    n = n->to.get();
  }
  if (n->kind != Kind::Bool) return false;
  if (k) *k = depth;
  return true;
}

bool Type::operator==(const Type& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->kind != Kind::Arrow) return true;
  return from() == o.from() && to() == o.to();
}

std::string Type::str() const {
  int k = 0;
  if (is_rel(&k)) {
    if (k == 0) return "bool";
    return "rel " + std::to_string(k);
  }
  switch (kind()) {
    case Kind::Bool: return "bool";
    case Kind::Obj: return "obj";
    case Kind::Arrow: {
      std::string lhs = from().str();
      if (from().kind() == Kind::Arrow) lhs = "(" + lhs + ")";
      return lhs + " -> " + to().str();
    }
  }
  return "?";
}

}  // namespace rl
