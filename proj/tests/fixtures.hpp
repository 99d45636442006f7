#pragma once

#include <vector>

#include "qg/matrix_mod.hpp"
#include "qg/quasigroup.hpp"

// Shared hand-checked instances used across the test suites.
namespace fixtures {

// Order-3 idempotent semisymmetric quasigroup on {e, a, b}:
//   e*e=e e*a=b e*b=a / a*e=b a*a=a a*b=e / b*e=a b*a=e b*b=b
inline qg::Quasigroup p3() {
  return qg::Quasigroup::from_mul_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}},
                                        {"e", "a", "b"});
}

// Order-4 companion on {e, a, b, c}.
inline qg::Quasigroup p4() {
  return qg::Quasigroup::from_mul_table(
      {{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}},
      {"e", "a", "b", "c"});
}

inline qg::Quasigroup trivial() {
  return qg::Quasigroup::from_mul_table({{0}}, {"e"});
}

inline qg::Quasigroup z3() { return qg::Quasigroup::from_abelian_group({3}); }

// The 3x3 matrices over Z_m that drive the module examples.  E is the
// cube-construction matrix; A and B complete the assignment for p3().
inline qg::MatrixMod mat_e(long long mod = 3) {
  return qg::MatrixMod::from_rows({{0, 0, 1}, {-1, 0, 0}, {0, 1, 0}}, mod);
}

inline qg::MatrixMod mat_a(long long mod = 3) {
  return qg::MatrixMod::from_rows({{0, 1, -1}, {1, 0, -1}, {-1, -1, 0}}, mod);
}

inline qg::MatrixMod mat_b(long long mod = 3) {
  return qg::MatrixMod::from_rows({{-1, 1, 1}, {-1, -1, -1}, {-1, 1, -1}}, mod);
}

}  // namespace fixtures
