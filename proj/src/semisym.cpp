#include "qg/semisym.hpp"

#include <array>

#include "qg/error.hpp"

namespace qg {

bool is_homotopy(const HomotopyTriple& t, const Quasigroup& domain,
                 const Quasigroup& codomain) {
  const int n = domain.order();
  const int m = codomain.order();
  for (const auto* f : {&t.f1, &t.f2, &t.f3}) {
    if (static_cast<int>(f->size()) != n)
      fail(Errc::OutOfRange, "map not total on the domain");
    for (int v : *f)
      if (v < 0 || v >= m) fail(Errc::OutOfRange, "map value out of range");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (codomain.mul(t.f1[x], t.f2[y]) != t.f3[domain.mul(x, y)])
        return false;
  return true;
}

int cube_encode(const Quasigroup& q, int i, int j, int k) {
  const int n = q.order();
  return (i * n + j) * n + k;
}

std::array<int, 3> cube_decode(const Quasigroup& q, int v) {
  const int n = q.order();
  return {v / (n * n), (v / n) % n, v % n};
}

Quasigroup semisymmetrize(const Quasigroup& q, int order_cap) {
  const long long n = q.order();
  const long long cube = n * n * n;
  if (cube > order_cap)
    fail(Errc::TableCapExceeded,
         "semisymmetrization order " + std::to_string(cube) +
             " exceeds cap " + std::to_string(order_cap));
  const int nn = static_cast<int>(n);
  const int total = static_cast<int>(cube);
  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  for (int xv = 0; xv < total; ++xv) {
    const auto x = cube_decode(q, xv);
    for (int yv = 0; yv < total; ++yv) {
      const auto y = cube_decode(q, yv);
      const int c1 = q.rdiv(y[2], x[1]);
      const int c2 = q.ldiv(y[0], x[2]);
      const int c3 = q.mul(x[0], y[1]);
      table[xv][yv] = (c1 * nn + c2) * nn + c3;
    }
  }
  return Quasigroup::from_mul_table(table);
}

}  // namespace qg
