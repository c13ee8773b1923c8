#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rl {

// A finite first-order interpretation: universe {1..n}, unary predicates as
// element sets, binary predicates as sets of ordered pairs. Immutable after
// construction; the constructor validates membership and name disjointness.
class Structure {
 public:
  using Pair = std::pair<int, int>;

  Structure() = default;
  Structure(int n, std::map<std::string, std::set<int>> unary,
            std::map<std::string, std::set<Pair>> binary);

  int size() const { return n_; }
  bool has_elem(int e) const { return e >= 1 && e <= n_; }

  const std::map<std::string, std::set<int>>& unary() const { return unary_; }
  const std::map<std::string, std::set<Pair>>& binary() const {
    return binary_;
  }

  bool has_unary(const std::string& name) const;
  bool has_binary(const std::string& name) const;
  // Membership queries; unknown names raise UnboundName.
  bool in_unary(const std::string& name, int e) const;
  bool in_binary(const std::string& name, int a, int b) const;

  bool operator==(const Structure& o) const {
    return n_ == o.n_ && unary_ == o.unary_ && binary_ == o.binary_;
  }

 private:
  int n_ = 0;
  std::map<std::string, std::set<int>> unary_;
  std::map<std::string, std::set<Pair>> binary_;
};

// Predicate name sets, used to classify atoms when no structure is at hand.
struct Vocabulary {
  std::set<std::string> unary;
  std::set<std::string> binary;

  static Vocabulary of(const Structure& s);
  bool is_unary(const std::string& name) const { return unary.count(name); }
  bool is_binary(const std::string& name) const { return binary.count(name); }
  Vocabulary merged(const Vocabulary& o) const;
};

// Two-slot environment for the index-free fragment; both slots must be
// members of the structure's universe.
struct PairEnv {
  int slot1 = 1;
  int slot2 = 1;
};

}  // namespace rl
