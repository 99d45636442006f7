#pragma once

#include <string>
#include <vector>

#include "qg/module_rep.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// Quasigroup on (Z_m)^k x Q with the linearized product
//   (v, p) (w, q) = (v M_q + w M_p^-1, p q).
// Elements are encoded fiber-major: index = fiber * n + base, with fiber
// vectors ordered lexicographically (first coordinate most significant).
struct Extension {
  Quasigroup base;
  long long modulus;
  int dim;
  Quasigroup total;

  int fiber_size() const;
  int projection(int elem) const { return elem % base.order(); }
  int fiber_index(int elem) const { return elem / base.order(); }
  std::vector<long long> fiber_vector(int elem) const;
  int encode(const std::vector<long long>& fiber, int base_elem) const;
};

// Builds the extension table after verifying that the assignment kills
// every ideal generator (ModuleCheckFailed otherwise).
Extension build_extension(const Quasigroup& q, const ModuleAssignment& a,
                          int base_for_check, int order_cap = 1024);

// Same construction with the annihilation check skipped; the result is
// always a quasigroup but need not be semisymmetric.
Extension build_extension_unchecked(const Quasigroup& q,
                                    const ModuleAssignment& a,
                                    int order_cap = 1024);

struct ExtensionCheck {
  bool ok = true;
  std::string witness;
};

struct ExtensionReport {
  ExtensionCheck latin;
  ExtensionCheck semisymmetric;
  ExtensionCheck projection;  // projection is a homomorphism
  ExtensionCheck fibers;      // fibers are abelian groups under subtraction
  bool all_ok() const {
    return latin.ok && semisymmetric.ok && projection.ok && fibers.ok;
  }
};

// Brute-force verification of the four structural claims about a built
// (or hand-altered) extension table.
ExtensionReport verify_extension(const Extension& ext);

}  // namespace qg
