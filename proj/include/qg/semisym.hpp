#pragma once

#include <array>
#include <vector>

#include "qg/quasigroup.hpp"

namespace qg {

// Triple of total maps (f1, f2, f3): Q -> P, the morphisms of the
// homotopy category of quasigroups.
struct HomotopyTriple {
  std::vector<int> f1, f2, f3;
};

// True iff f1(x) * f2(y) = f3(x*y) in P for all x, y in Q.
bool is_homotopy(const HomotopyTriple& t, const Quasigroup& domain,
                 const Quasigroup& codomain);

// Semisymmetric quasigroup on Q^3 with product
//   (x1,x2,x3)(y1,y2,y3) = (y3/x2, y1\x3, x1*y2).
// Component triples are encoded little-endian: (i,j,k) -> i*n^2 + j*n + k.
Quasigroup semisymmetrize(const Quasigroup& q, int order_cap = 1024);

// Index helpers for the encoding above.
int cube_encode(const Quasigroup& q, int i, int j, int k);
std::array<int, 3> cube_decode(const Quasigroup& q, int v);

}  // namespace qg
