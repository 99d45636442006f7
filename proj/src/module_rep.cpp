#include "qg/module_rep.hpp"

#include "qg/derivation.hpp"
#include "qg/error.hpp"

namespace qg {

ModuleAssignment::ModuleAssignment(long long modulus, int dim,
                                   std::vector<MatrixMod> assign)
    : modulus_(modulus), dim_(dim), assign_(std::move(assign)) {
  if (modulus < 2) fail(Errc::OutOfRange, "modulus must be at least 2");
  if (dim < 1) fail(Errc::OutOfRange, "dimension must be at least 1");
  inverses_.reserve(assign_.size());
  for (const auto& m : assign_) {
    if (m.dim() != dim || m.mod() != modulus)
      fail(Errc::OutOfRange, "matrix shape does not match the assignment");
    inverses_.push_back(m.inverse());  // throws NotInvertible
  }
}

MatrixMod evaluate_word(const FreeWord& w, const ModuleAssignment& a) {
  MatrixMod out = MatrixMod::identity(a.dim(), a.modulus());
  for (const auto& l : w.letters()) {
    if (l.gen < 0 || l.gen >= a.size())
      fail(Errc::OutOfRange, "letter has no assigned matrix");
    out = out * (l.exp > 0 ? a.matrix(l.gen) : a.matrix_inverse(l.gen));
  }
  return out;
}

MatrixMod evaluate_ring(const RingElement& r, const ModuleAssignment& a) {
  MatrixMod out(a.dim(), a.modulus());
  for (const auto& [w, c] : r.terms())
    out = out + evaluate_word(w, a).scaled(c);
  return out;
}

ModuleCheckReport check_module(const Quasigroup& q, int base,
                               const ModuleAssignment& a) {
  if (a.size() != q.order())
    fail(Errc::OutOfRange, "assignment does not cover the quasigroup");
  ModuleCheckReport rep;
  const auto gens = semisym_ideal_generators(q, base);
  const int n = q.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!evaluate_ring(gens[static_cast<size_t>(x) * n + y], a).is_zero()) {
        rep.ok = false;
        rep.failing.emplace_back(x, y);
      }
  return rep;
}

}  // namespace qg
