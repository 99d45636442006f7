#include "qg/stabilizer.hpp"

#include "qg/error.hpp"

namespace qg {

int StabilizerBasis::index_of_t(int x) const {
  if (x < 0 || x >= order_) return -1;
  return t_index_[x];
}

int StabilizerBasis::index_of_rloop(int x, int y) const {
  if (x < 0 || x >= order_ || y < 0 || y >= order_) return -1;
  return r_index_[static_cast<size_t>(x) * order_ + y];
}

StabilizerBasis schreier_basis(const Quasigroup& q, int base) {
  const int n = q.order();
  if (base < 0 || base >= n) fail(Errc::OutOfRange, "base element out of range");
  if (!is_semisymmetric(q))
    fail(Errc::NotSemisymmetric, "quasigroup not semisymmetric");

  StabilizerBasis b;
  b.base = base;
  b.order_ = n;
  b.t_index_.assign(n, -1);
  b.r_index_.assign(static_cast<size_t>(n) * n, -1);

  // Transversal: the identity represents the coset of the base point;
  // the coset sending e to q != e is represented by the single letter
  // R(qe), which indeed maps e to e*(qe) = q.
  b.transversal.assign(n, FreeWord());
  for (int p = 0; p < n; ++p)
    if (p != base) b.transversal[p] = r_word(q.mul(p, base));

  // R(e^2)
  b.elements.push_back(
      {StabilizerBasis::Kind::E2, -1, -1, r_word(q.mul(base, base))});

  // T(x) = R(xe) R(ex)
  for (int x = 0; x < n; ++x) {
    if (x == base) continue;
    b.t_index_[x] = static_cast<int>(b.elements.size());
    b.elements.push_back(
        {StabilizerBasis::Kind::T, x, -1,
         r_word(q.mul(x, base)) * r_word(q.mul(base, x))});
  }

  // RLoop(x, y) = R(xe) R(y) R((xy)e)^-1 for y != ex
  for (int x = 0; x < n; ++x) {
    if (x == base) continue;
    for (int y = 0; y < n; ++y) {
      if (y == q.mul(base, x)) continue;
      b.r_index_[static_cast<size_t>(x) * n + y] =
          static_cast<int>(b.elements.size());
      b.elements.push_back(
          {StabilizerBasis::Kind::RLoop, x, y,
           r_word(q.mul(x, base)) * r_word(y) *
               r_word(q.mul(q.mul(x, y), base)).inverse()});
    }
  }
  return b;
}

StabilizerLoops loop_generators(const Quasigroup& q, int base, int elem_q,
                                int elem_r) {
  const int e = base;
  StabilizerLoops out;
  // Two-stop circuit e -> q -> e; the return edge is a left translation,
  // i.e. an inverse right translation.
  out.t = r_word(q.ldiv(e, elem_q)) * l_word(q.rdiv(elem_q, e)).inverse();
  // Right-translation circuit e -> q -> qr -> e.
  out.r_loop = r_word(q.ldiv(e, elem_q)) * r_word(elem_r) *
               r_word(q.ldiv(e, q.mul(elem_q, elem_r))).inverse();
  // Left-translation circuit e -> q -> rq -> e.
  out.l_loop = l_word(q.rdiv(elem_q, e)) * l_word(elem_r) *
               l_word(q.rdiv(q.mul(elem_r, elem_q), e)).inverse();
  return out;
}

bool is_stabilizer_word(const FreeWord& w, const Quasigroup& q, int base) {
  return act_on_element(w, base, q) == base;
}

std::vector<BasisFactor> rewrite_in_basis(const FreeWord& w,
                                          const StabilizerBasis& basis,
                                          const Quasigroup& q) {
  const int e = basis.base;
  if (!is_stabilizer_word(w, q, e))
    fail(Errc::NotInStabilizer, "word does not fix the base point");

  // Scan left to right.  At point p, a positive letter R(s) contributes
  // the Schreier element rep(p) R(s) rep(p*s)^-1, which is the identity
  // when R(s) just moves along the transversal, and otherwise is exactly
  // one tagged basis element.  A negative letter contributes the inverse
  // of the element named at the far endpoint.
  auto classify = [&](int p, int s) -> int {
    if (p == e)
      return s == q.mul(e, e) ? basis.index_of_e2() : -1;
    if (s == q.mul(e, p))  // p*s = e: the T-circuit through p
      return basis.index_of_t(p);
    return basis.index_of_rloop(p, s);
  };

  std::vector<BasisFactor> out;
  int p = e;
  for (const auto& letter : w.letters()) {
    if (letter.exp > 0) {
      const int idx = classify(p, letter.gen);
      if (idx >= 0) out.push_back({idx, +1});
      p = q.mul(p, letter.gen);
    } else {
      const int next = q.mul(letter.gen, p);
      const int idx = classify(next, letter.gen);
      if (idx >= 0) out.push_back({idx, -1});
      p = next;
    }
  }
  return out;
}

FreeWord expand(const StabilizerBasis& basis,
                const std::vector<BasisFactor>& factors) {
  FreeWord w;
  for (const auto& f : factors) {
    const FreeWord& b = basis.elements[f.index].word;
    w = w * (f.exp > 0 ? b : b.inverse());
  }
  return w;
}

}  // namespace qg
