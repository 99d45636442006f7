#pragma once

#include <cstdint>
#include <vector>

#include "qg/quasigroup.hpp"

namespace qg {

// Bijection on {0..n-1}.  Composition is left-to-right: (a * b) applies
// a first, matching the way words of translations act.
class Permutation {
 public:
  static Permutation identity(int n);
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

// Right translation x -> x*q and left translation x -> q*x.
Permutation right_translation(const Quasigroup& q, int elem);
Permutation left_translation(const Quasigroup& q, int elem);

struct PermutationGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, materialized closure
  size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

// Closure of a generator list under composition, by breadth-first
// saturation from the identity.  Throws ClosureCapExceeded past `cap`.
PermutationGroup generate_group(std::vector<Permutation> generators,
                                size_t cap = 1'000'000);

// Combinatorial multiplication group: closure of all left and right
// translations of q.
PermutationGroup multiplication_group(const Quasigroup& q,
                                      size_t cap = 1'000'000);

}  // namespace qg
