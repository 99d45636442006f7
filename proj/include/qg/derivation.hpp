#pragma once

#include <vector>

#include "qg/group_ring.hpp"
#include "qg/quasigroup.hpp"
#include "qg/term.hpp"

namespace qg {

// Equation u = v between terms over variables x1..x_arity.
struct TermIdentity {
  Term lhs;
  Term rhs;
  int arity = 0;
};

// The semisymmetric law (x2 x1) x2 = x1 and the idempotent law
// x1 x1 = x1, as ready-made identities.
TermIdentity semisymmetric_identity();
TermIdentity idempotent_identity();

// Word derivative with respect to variable `var` (0-based) at the given
// argument assignment.  Operates on the multiplication-only rewrite of
// the term; the product rule is
//   d(u v) = du R(v) + dv R(u)^-1
// with d x_i = delta_{i,var}, where u, v on the right-hand side stand
// for their evaluated arguments.
RingElement differentiate(const Term& word, int var,
                          const std::vector<int>& args, const Quasigroup& q);

// True iff variable `var` appears exactly once in the raw term, on the
// left of every right division and on the right of every left division
// along its path.
bool occurs_uniquely_above_line(const Term& word, int var);

// The conjugating unit R(e\e)^-1 R(e\x), resolved through the division
// table; for semisymmetric quasigroups this is R(ee)^-1 R(xe).
FreeWord rho(const Quasigroup& q, int base, int x);

// Ideal generators of the representation ring for the variety cut out
// by `basis` inside the quasigroup variety: one group-ring element
//   rho(e, q_h) (du/dx_h - dv/dx_h)(q_1..q_k) rho(e, u(q_1..q_k))^-1
// per identity, contributing variable h, and argument tuple, in
// lexicographic (identity, h, tuple) order.  Variables occurring
// uniquely above the line on both sides contribute nothing and are
// skipped; elements that vanish are dropped.
std::vector<RingElement> ideal_generators(const Quasigroup& q, int base,
                                          const std::vector<TermIdentity>& basis);

// Closed-form generators for the semisymmetric variety:
//   R(ye) (R(x) R(y) + R(yx)^-1) R(xe)^-1
// over all pairs (x, y), in row-major order.
std::vector<RingElement> semisym_ideal_generators(const Quasigroup& q,
                                                  int base);

}  // namespace qg
