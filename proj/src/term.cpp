#include "qg/term.hpp"

#include "qg/error.hpp"

namespace qg {

Term Term::leaf(Kind k, int value) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = value;
  return Term(std::move(n));
}

Term Term::element(int q) { return leaf(Kind::Element, q); }
Term Term::x() { return leaf(Kind::X, -1); }

Term Term::variable(int index) {
  if (index < 0) fail(Errc::OutOfRange, "variable index must be nonnegative");
  return leaf(Kind::Variable, index);
}

Term Term::mul(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

Term Term::rdiv(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::RDiv;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

Term Term::ldiv(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LDiv;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

bool Term::same_tree(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (is_leaf()) return value() == other.value();
  return left().same_tree(other.left()) && right().same_tree(other.right());
}

int Term::node_count() const {
  if (is_leaf()) return 1;
  return 1 + left().node_count() + right().node_count();
}

Term reduced_mul(Term l, Term r, const Quasigroup& q, Variety v) {
  using K = Term::Kind;
  if (l.kind() == K::Element && r.kind() == K::Element)
    return Term::element(q.mul(l.value(), r.value()));
  // (u v) u -> v
  if (l.kind() == K::Mul && l.left().same_tree(r)) return l.right();
  // u (v u) -> v
  if (r.kind() == K::Mul && r.right().same_tree(l)) return r.left();
  if (v == Variety::MTS && l.same_tree(r)) return l;
  return Term::mul(std::move(l), std::move(r));
}

Term normalize(const Term& t, const Quasigroup& q, Variety v) {
  if (t.is_leaf()) return t;
  Term l = normalize(t.left(), q, v);
  Term r = normalize(t.right(), q, v);
  // Divisions resolve to the opposite product before the product rules
  // run: a/b = b*a and a\b = b*a in the semisymmetric theory.
  if (t.kind() == Term::Kind::Mul)
    return reduced_mul(std::move(l), std::move(r), q, v);
  return reduced_mul(std::move(r), std::move(l), q, v);
}

Term to_multiplicative(const Term& t) {
  if (t.is_leaf()) return t;
  Term l = to_multiplicative(t.left());
  Term r = to_multiplicative(t.right());
  if (t.kind() == Term::Kind::Mul) return Term::mul(std::move(l), std::move(r));
  return Term::mul(std::move(r), std::move(l));
}

Term act_on_term(const FreeWord& g, const Term& w, const Quasigroup& q) {
  Term cur = normalize(w, q, Variety::P);
  for (const auto& letter : g.letters()) {
    Term e = Term::element(letter.gen);
    cur = letter.exp > 0 ? reduced_mul(std::move(cur), std::move(e), q)
                         : reduced_mul(std::move(e), std::move(cur), q);
  }
  return cur;
}

Term substitute_x(const Term& t, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::X:
      return replacement;
    case Term::Kind::Element:
    case Term::Kind::Variable:
      return t;
    case Term::Kind::Mul:
      return Term::mul(substitute_x(t.left(), replacement),
                       substitute_x(t.right(), replacement));
    case Term::Kind::RDiv:
      return Term::rdiv(substitute_x(t.left(), replacement),
                        substitute_x(t.right(), replacement));
    case Term::Kind::LDiv:
      return Term::ldiv(substitute_x(t.left(), replacement),
                        substitute_x(t.right(), replacement));
  }
  fail(Errc::OutOfRange, "unreachable");
}

int evaluate(const Term& t, const Quasigroup& q, const std::vector<int>& args) {
  switch (t.kind()) {
    case Term::Kind::Element:
      return t.value();
    case Term::Kind::X:
      fail(Errc::UnboundVariable, "indeterminate X has no value");
    case Term::Kind::Variable:
      if (t.value() >= static_cast<int>(args.size()))
        fail(Errc::UnboundVariable,
             "no value bound for variable x" + std::to_string(t.value() + 1));
      return args[t.value()];
    case Term::Kind::Mul:
      return q.mul(evaluate(t.left(), q, args), evaluate(t.right(), q, args));
    case Term::Kind::RDiv:
      return q.rdiv(evaluate(t.left(), q, args), evaluate(t.right(), q, args));
    case Term::Kind::LDiv:
      return q.ldiv(evaluate(t.left(), q, args), evaluate(t.right(), q, args));
  }
  fail(Errc::OutOfRange, "unreachable");
}

}  // namespace qg
