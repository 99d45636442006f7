#pragma once

#include <memory>
#include <vector>

#include "qg/free_word.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

// Which equational theory the rewriting works in: the semisymmetric
// variety alone, or with idempotence added.
enum class Variety { P, MTS };

// Binary operation tree over quasigroup elements, the indeterminate X,
// and numbered variables.  Immutable; copies share structure.
class Term {
 public:
  enum class Kind { Element, X, Variable, Mul, RDiv, LDiv };

  static Term element(int q);
  static Term x();
  static Term variable(int index);  // 0-based; prints as x1, x2, ...
  static Term mul(Term l, Term r);
  static Term rdiv(Term l, Term r);  // l / r
  static Term ldiv(Term l, Term r);  // l \ r

  Kind kind() const { return node_->kind; }
  bool is_leaf() const {
    return kind() == Kind::Element || kind() == Kind::X ||
           kind() == Kind::Variable;
  }
  int value() const { return node_->value; }  // element or variable index
  Term left() const { return Term(node_->l); }
  Term right() const { return Term(node_->r); }

  bool same_tree(const Term& other) const;  // structural equality
  int node_count() const;

 private:
  struct Node {
    Kind kind;
    int value = -1;
    std::shared_ptr<const Node> l, r;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term leaf(Kind k, int value);

  std::shared_ptr<const Node> node_;
};

// Product of two already-normal terms, rewritten to normal form.  The
// rules, tried in this order at the new node:
//   both children element leaves          -> table product
//   (u v) u                               -> v
//   u (v u)                               -> v
//   u u               (MTS only)          -> u
Term reduced_mul(Term l, Term r, const Quasigroup& q, Variety v = Variety::P);

// Full normal form: divisions are replaced via a/b -> b*a and a\b -> b*a,
// then products are reduced innermost-first to a fixpoint.
Term normalize(const Term& t, const Quasigroup& q, Variety v = Variety::P);

// Division-free copy of the tree (a/b and a\b both become b*a) with no
// further reduction.  This is the preprocessing step for derivations,
// which must see the word's literal shape.
Term to_multiplicative(const Term& t);

// Action of a free word on a term: R(q) sends w to w*q, R(q)^-1 sends
// w to q*w, each product reduced as it is formed.
Term act_on_term(const FreeWord& g, const Term& w, const Quasigroup& q);

// Substitutes a term for every X leaf.
Term substitute_x(const Term& t, const Term& replacement);

// Evaluates a term with no X leaves to an element; `args[i]` is the
// value of variable i.  Divisions evaluate through the division tables.
int evaluate(const Term& t, const Quasigroup& q,
             const std::vector<int>& args = {});

}  // namespace qg
