#include "qg/derivation.hpp"

#include "qg/error.hpp"

namespace qg {

TermIdentity semisymmetric_identity() {
  const Term x1 = Term::variable(0), x2 = Term::variable(1);
  return {Term::mul(Term::mul(x2, x1), x2), x1, 2};
}

TermIdentity idempotent_identity() {
  const Term x1 = Term::variable(0);
  return {Term::mul(x1, x1), x1, 1};
}

namespace {

RingElement diff_rec(const Term& t, int var, const std::vector<int>& args,
                     const Quasigroup& q) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.value() == var ? RingElement::one() : RingElement();
    case Term::Kind::Element:
      return RingElement();
    case Term::Kind::X:
      fail(Errc::UnboundVariable, "indeterminate X in a derivative");
    case Term::Kind::Mul: {
      const RingElement du = diff_rec(t.left(), var, args, q);
      const RingElement dv = diff_rec(t.right(), var, args, q);
      RingElement out;
      if (!du.is_zero())
        out = out + du * RingElement::unit(
                             r_word(evaluate(t.right(), q, args)));
      if (!dv.is_zero())
        out = out + dv * RingElement::unit(
                             l_word(evaluate(t.left(), q, args)));
      return out;
    }
    default:
      fail(Errc::OutOfRange, "derivative of a division-bearing term");
  }
}

}  // namespace

RingElement differentiate(const Term& word, int var,
                          const std::vector<int>& args, const Quasigroup& q) {
  return diff_rec(to_multiplicative(word), var, args, q);
}

namespace {

int occurrence_scan(const Term& t, int var, bool& sides_ok) {
  if (t.is_leaf())
    return t.kind() == Term::Kind::Variable && t.value() == var ? 1 : 0;
  const int l = occurrence_scan(t.left(), var, sides_ok);
  const int r = occurrence_scan(t.right(), var, sides_ok);
  if (t.kind() == Term::Kind::RDiv && r > 0) sides_ok = false;
  if (t.kind() == Term::Kind::LDiv && l > 0) sides_ok = false;
  return l + r;
}

}  // namespace

bool occurs_uniquely_above_line(const Term& word, int var) {
  bool sides_ok = true;
  const int count = occurrence_scan(word, var, sides_ok);
  return count == 1 && sides_ok;
}

FreeWord rho(const Quasigroup& q, int base, int x) {
  return r_word(q.ldiv(base, base)).inverse() * r_word(q.ldiv(base, x));
}

std::vector<RingElement> ideal_generators(
    const Quasigroup& q, int base, const std::vector<TermIdentity>& basis) {
  const int n = q.order();
  std::vector<RingElement> out;
  for (const auto& id : basis) {
    for (int h = 0; h < id.arity; ++h) {
      if (occurs_uniquely_above_line(id.lhs, h) &&
          occurs_uniquely_above_line(id.rhs, h))
        continue;
      std::vector<int> args(id.arity, 0);
      while (true) {
        const RingElement diff = differentiate(id.lhs, h, args, q) -
                                 differentiate(id.rhs, h, args, q);
        if (!diff.is_zero()) {
          const RingElement gen =
              RingElement::unit(rho(q, base, args[h])) * diff *
              RingElement::unit(rho(q, base, evaluate(id.lhs, q, args))
                                    .inverse());
          out.push_back(gen);
        }
        // next tuple, last coordinate fastest
        int pos = id.arity - 1;
        while (pos >= 0 && ++args[pos] == n) args[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  return out;
}

std::vector<RingElement> semisym_ideal_generators(const Quasigroup& q,
                                                  int base) {
  const int n = q.order();
  const int e = base;
  std::vector<RingElement> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const RingElement core =
          RingElement::unit(r_word(x) * r_word(y)) +
          RingElement::unit(r_word(q.mul(y, x)).inverse());
      out.push_back(RingElement::unit(r_word(q.mul(y, e))) * core *
                    RingElement::unit(r_word(q.mul(x, e)).inverse()));
    }
  }
  return out;
}

}  // namespace qg
