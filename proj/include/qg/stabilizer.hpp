#pragma once

#include <vector>

#include "qg/free_word.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// Free basis of the point stabilizer of `base` inside the free group on
// the right translations of a semisymmetric quasigroup, with the coset
// transversal used to derive it.  For order n the basis has n^2 - n + 1
// elements:
//   E2            R(e^2)
//   T(x)          R(xe) R(ex)              for x != e
//   RLoop(x, y)   R(xe) R(y) R((xy)e)^-1   for x != e, y != ex
struct StabilizerBasis {
  enum class Kind { E2, T, RLoop };

  struct Element {
    Kind kind;
    int x = -1, y = -1;  // E2 uses neither, T uses x, RLoop uses both
    FreeWord word;
  };

  int base = 0;
  std::vector<Element> elements;
  std::vector<FreeWord> transversal;  // coset representative per point

  size_t rank() const { return elements.size(); }

  // Basis position of a kind-tagged element; -1 when absent.
  int index_of_e2() const { return 0; }
  int index_of_t(int x) const;
  int index_of_rloop(int x, int y) const;

 private:
  friend StabilizerBasis schreier_basis(const Quasigroup& q, int base);
  std::vector<int> t_index_, r_index_;  // lookup tables, built once
  int order_ = 0;
};

StabilizerBasis schreier_basis(const Quasigroup& q, int base);

// The canonical two-stop and three-stop stabilizer circuits through q
// (and q, r), written in right-translation letters.
struct StabilizerLoops {
  FreeWord t;       // R(e\q) L(q/e)^-1
  FreeWord r_loop;  // R(e\q) R(r) R(e\(qr))^-1
  FreeWord l_loop;  // L(q/e) L(r) L((rq)/e)^-1
};

StabilizerLoops loop_generators(const Quasigroup& q, int base, int elem_q,
                                int elem_r);

// True iff the word fixes `base` under the translation action.
bool is_stabilizer_word(const FreeWord& w, const Quasigroup& q, int base);

// One factor of a Schreier rewriting: basis element and exponent.
struct BasisFactor {
  int index;
  int exp;  // +1 or -1
  bool operator==(const BasisFactor&) const = default;
};

// Rewrites a stabilizer word as a product of basis elements by the
// left-to-right coset scan.  Substituting each factor's word back in and
// reducing recovers the input exactly.  Throws NotInStabilizer if the
// word moves the base point.
std::vector<BasisFactor> rewrite_in_basis(const FreeWord& w,
                                          const StabilizerBasis& basis,
                                          const Quasigroup& q);

// Expands a factor sequence back into a reduced free word.
FreeWord expand(const StabilizerBasis& basis,
                const std::vector<BasisFactor>& factors);

}  // namespace qg
