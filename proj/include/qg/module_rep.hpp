#pragma once

#include <vector>

#include "qg/group_ring.hpp"
#include "qg/matrix_mod.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// Assignment of an invertible k-by-k matrix over Z_m to each quasigroup
// element; extends multiplicatively to words in the translations and
// linearly to group-ring elements.
class ModuleAssignment {
 public:
  ModuleAssignment(long long modulus, int dim, std::vector<MatrixMod> assign);

  long long modulus() const { return modulus_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(assign_.size()); }
  const MatrixMod& matrix(int elem) const { return assign_[elem]; }
  const MatrixMod& matrix_inverse(int elem) const { return inverses_[elem]; }

 private:
  long long modulus_;
  int dim_;
  std::vector<MatrixMod> assign_;
  std::vector<MatrixMod> inverses_;  // cached at construction
};

// Product of the per-letter matrices, left to right; the empty word
// gives the identity matrix.
MatrixMod evaluate_word(const FreeWord& w, const ModuleAssignment& a);

// Integer-linear combination of word evaluations, reduced mod m.
MatrixMod evaluate_ring(const RingElement& r, const ModuleAssignment& a);

struct ModuleCheckReport {
  bool ok = true;
  // (x, y) pairs whose generator does not evaluate to zero.
  std::vector<std::pair<int, int>> failing;
};

// Evaluates every closed-form ideal generator of the semisymmetric
// representation ring and reports the pairs that fail to vanish.
ModuleCheckReport check_module(const Quasigroup& q, int base,
                               const ModuleAssignment& a);

}  // namespace qg
