#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qg/free_word.hpp"
#include "qg/permutation.hpp"
#include "qg/term.hpp"
#include "word_probes.hpp"

using namespace qg;

namespace {

using word_probes::chaotic_normalize;
using word_probes::count_leaves;
using word_probes::random_reduced_word;
using word_probes::random_tree;

}  // namespace

TEST_CASE("free word arithmetic reduces freely") {
  const FreeWord ra = r_word(1), rb = r_word(2), rc = r_word(0);
  CHECK((ra * ra.inverse()).is_identity());
  CHECK((ra * rb).inverse() == rb.inverse() * ra.inverse());
  // R(a)R(b) . R(b)^-1 R(c) = R(a)R(c)
  CHECK(ra * rb * rb.inverse() * rc == ra * rc);
  CHECK(word_of({{1, +1}, {1, -1}}).is_identity());
}

TEST_CASE("the published reductions over the order-3 quasigroup") {
  const auto q = fixtures::p3();
  const Term e = Term::element(0), b = Term::element(2), X = Term::x();

  // (eX)e normalizes to X
  CHECK(normalize(Term::mul(Term::mul(e, X), e), q).same_tree(X));
  // e(Xe) normalizes to X as well
  CHECK(normalize(Term::mul(e, Term::mul(X, e)), q).same_tree(X));

  // (eX)(eb) normalizes to (eX)a
  const Term lhs = Term::mul(Term::mul(e, X), Term::mul(e, b));
  const Term expect = Term::mul(Term::mul(e, X), Term::element(1));
  CHECK(normalize(lhs, q).same_tree(expect));

  // b((X X^2) X) drops to b X^2, and with idempotence on to b X
  const Term xsq = Term::mul(X, X);
  const Term w = Term::mul(b, Term::mul(Term::mul(X, xsq), X));
  CHECK(normalize(w, q, Variety::P).same_tree(Term::mul(b, xsq)));
  CHECK(normalize(w, q, Variety::MTS).same_tree(Term::mul(b, X)));
}

TEST_CASE("divisions normalize to opposite products") {
  const auto q = fixtures::p3();
  const Term X = Term::x(), a = Term::element(1);
  // X/a and X\a both become a X and X a respectively reversed:
  // l/r -> r*l, l\r -> r*l
  CHECK(normalize(Term::rdiv(X, a), q).same_tree(Term::mul(a, X)));
  CHECK(normalize(Term::ldiv(X, a), q).same_tree(Term::mul(a, X)));
  // over elements the product then collapses through the table
  CHECK(normalize(Term::rdiv(a, a), q).same_tree(Term::element(q.mul(1, 1))));
}

TEST_CASE("action of single letters") {
  const auto q = fixtures::p3();
  const Term X = Term::x();
  // R(e) appends on the right
  CHECK(act_on_term(r_word(0), X, q).same_tree(Term::mul(X, Term::element(0))));
  // R(e)^-1 = L(e) prepends on the left
  CHECK(act_on_term(l_word(0), X, q).same_tree(Term::mul(Term::element(0), X)));
}

TEST_CASE("acting by a word and its inverse is the identity") {
  const auto q = fixtures::p4();
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FreeWord w = random_reduced_word(rng, q.order(), 1 + i % 6);
    const Term t = random_tree(rng, q, 4);
    const Term moved = act_on_term(w * w.inverse(), t, q);
    CHECK(moved.same_tree(normalize(t, q)));
  }
}

TEST_CASE("action composes letter by letter") {
  const auto q = fixtures::p3();
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FreeWord g = random_reduced_word(rng, 3, 3);
    const FreeWord h = random_reduced_word(rng, 3, 3);
    const Term t = random_tree(rng, q, 3);
    CHECK(act_on_term(g * h, t, q)
              .same_tree(act_on_term(h, act_on_term(g, t, q), q)));
    // and on elements
    const int p = static_cast<int>(rng() % 3);
    CHECK(act_on_element(g * h, p, q) ==
          act_on_element(h, act_on_element(g, p, q), q));
  }
}

TEST_CASE("reduced words act on X without creating redexes") {
  for (const auto& q : {fixtures::p3(), fixtures::p4()}) {
    std::mt19937 rng(13);
    for (int i = 0; i < 1000; ++i) {
      const FreeWord w = random_reduced_word(rng, q.order(), 1 + i % 8);
      // unreduced build of the same spine
      Term raw = Term::x();
      for (const auto& l : w.letters())
        raw = l.exp > 0 ? Term::mul(raw, Term::element(l.gen))
                        : Term::mul(Term::element(l.gen), raw);
      const Term acted = act_on_term(w, Term::x(), q);
      CHECK(acted.same_tree(raw));
      CHECK(normalize(raw, q).same_tree(raw));
      int xs = 0, muls = 0;
      count_leaves(acted, xs, muls);
      CHECK(xs == 1);
      CHECK(muls == static_cast<int>(w.length()));
    }
  }
}

TEST_CASE("substitution commutes with the action") {
  const auto q = fixtures::p3();
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const FreeWord w = random_reduced_word(rng, 3, 4);
    const int p = static_cast<int>(rng() % 3);
    const Term acted = act_on_term(w, Term::x(), q);
    const Term value = normalize(substitute_x(acted, Term::element(p)), q);
    REQUIRE(value.kind() == Term::Kind::Element);
    CHECK(value.value() == act_on_element(w, p, q));
  }
}

TEST_CASE("the translation action is transitive via single letters") {
  const auto q = fixtures::p4();
  for (int from = 0; from < 4; ++from)
    for (int to = 0; to < 4; ++to)
      CHECK(act_on_element(r_word(q.ldiv(from, to)), from, q) == to);
}

TEST_CASE("left letters are inverse right letters on both carriers") {
  const auto q = fixtures::p3();
  for (int g = 0; g < 3; ++g) {
    for (int p = 0; p < 3; ++p)
      CHECK(act_on_element(l_word(g), p, q) == q.mul(g, p));
    CHECK((r_word(g) * l_word(g)).is_identity());
  }
}

TEST_CASE("two rewriting strategies reach the same normal form") {
  for (const auto& q : {fixtures::p3(), fixtures::p4()}) {
    std::mt19937 rng(23);
    for (int i = 0; i < 2000; ++i) {
      const Term t = random_tree(rng, q, 8);
      const Variety v = i % 2 ? Variety::P : Variety::MTS;
      const Term nf = normalize(t, q, v);
      CHECK(nf.same_tree(chaotic_normalize(t, q, v)));
      CHECK(normalize(nf, q, v).same_tree(nf));  // normal forms are stable
    }
  }
}

TEST_CASE("word action equals composing per-letter translation maps") {
  const auto q = fixtures::p4();
  std::mt19937 rng(29);
  for (int i = 0; i < 200; ++i) {
    const FreeWord w = random_reduced_word(rng, 4, 5);
    Permutation perm = Permutation::identity(4);
    for (const auto& l : w.letters())
      perm = perm * (l.exp > 0 ? right_translation(q, l.gen)
                               : left_translation(q, l.gen));
    for (int p = 0; p < 4; ++p)
      CHECK(act_on_element(w, p, q) == perm.apply(p));
  }
}
