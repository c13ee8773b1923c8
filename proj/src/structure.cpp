#include "rolelogic/structure.hpp"

#include "rolelogic/error.hpp"

namespace rl {

Structure::Structure(int n, std::map<std::string, std::set<int>> unary,
                     std::map<std::string, std::set<Pair>> binary)
    : n_(n), unary_(std::move(unary)), binary_(std::move(binary)) {
  if (n_ < 0) throw Error(ErrorKind::OutOfUniverse, "negative universe size");
  for (const auto& [name, elems] : unary_) {
    if (binary_.count(name))
      throw Error(ErrorKind::DuplicateDecl,
                  "'" + name + "' declared both unary and binary");
    for (int e : elems)
      if (!has_elem(e))
        throw Error(ErrorKind::OutOfUniverse,
                    "'" + name + "' contains " + std::to_string(e));
  }
  for (const auto& [name, pairs] : binary_)
    for (const auto& [a, b] : pairs)
      if (!has_elem(a) || !has_elem(b))
        throw Error(ErrorKind::OutOfUniverse,
                    "'" + name + "' contains (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
}

bool Structure::has_unary(const std::string& name) const {
  return unary_.count(name) != 0;
}

bool Structure::has_binary(const std::string& name) const {
  return binary_.count(name) != 0;
}

bool Structure::in_unary(const std::string& name, int e) const {
  auto it = unary_.find(name);
  if (it == unary_.end())
    throw Error(ErrorKind::UnboundName, "unary predicate '" + name + "'");
  return it->second.count(e) != 0;
}

bool Structure::in_binary(const std::string& name, int a, int b) const {
  auto it = binary_.find(name);
  if (it == binary_.end())
    throw Error(ErrorKind::UnboundName, "binary predicate '" + name + "'");
  return it->second.count({a, b}) != 0;
}

Vocabulary Vocabulary::of(const Structure& s) {
  Vocabulary v;
  for (const auto& [name, _] : s.unary()) v.unary.insert(name);
  for (const auto& [name, _] : s.binary()) v.binary.insert(name);
  return v;
}

Vocabulary Vocabulary::merged(const Vocabulary& o) const {
  Vocabulary v = *this;
  v.unary.insert(o.unary.begin(), o.unary.end());
  v.binary.insert(o.binary.begin(), o.binary.end());
  return v;
}

}  // namespace rl
