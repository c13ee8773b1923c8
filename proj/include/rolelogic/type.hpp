#pragma once

#include <map>
#include <memory>
#include <string>

namespace rl {

// Simple types: bool, obj, and the arrow constructor. Immutable value type;
// arrow nodes share their components.
class Type {
 public:
  enum class Kind { Bool, Obj, Arrow };

  Type() : Type(boolean()) {}

  static Type boolean();
  static Type obj();
  static Type arrow(Type from, Type to);

  // rel 0 = bool, rel (k+1) = obj -> rel k.
  static Type rel(int k);

  Kind kind() const;
  Type from() const;  // Arrow only
  Type to() const;    // Arrow only

  // True iff this type is rel k for some k >= 0; stores k if requested.
  bool is_rel(int* k = nullptr) const;

  bool operator==(const Type& o) const;
  bool operator!=(const Type& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Typing context for named variables (relation symbols, let-bound names).
using TypeContext = std::map<std::string, Type>;

}  // namespace rl
