#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "qg/error.hpp"
#include "qg/permutation.hpp"
#include "qg/quasigroup.hpp"

using namespace qg;

namespace {

void require_all_axioms(const Quasigroup& q) {
  const auto rep = check_axioms(q);
  REQUIRE(rep.all_ok());
}

// Independent closure oracle: repeated pairwise products to a fixpoint,
// a different algorithm from the breadth-first saturation in the library.
size_t closure_order_oracle(const std::vector<Permutation>& gens) {
  std::set<Permutation> elems(gens.begin(), gens.end());
  elems.insert(Permutation::identity(gens.front().degree()));
  for (;;) {
    std::set<Permutation> next = elems;
    for (const auto& a : elems)
      for (const auto& b : elems) next.insert(a * b);
    if (next.size() == elems.size()) return elems.size();
    elems.swap(next);
  }
}

}  // namespace

TEST_CASE("from_mul_table accepts the order-3 table") {
  const auto q = fixtures::p3();
  CHECK(q.order() == 3);
  CHECK(q.mul(0, 1) == 2);  // e*a = b
  CHECK(q.label(2) == "b");
  require_all_axioms(q);
}

TEST_CASE("from_mul_table handles the one-element table") {
  const auto q = fixtures::trivial();
  CHECK(q.order() == 1);
  CHECK(q.mul(0, 0) == 0);
  require_all_axioms(q);
}

TEST_CASE("from_mul_table rejects repeated column entries") {
  CHECK_THROWS_AS(Quasigroup::from_mul_table({{0, 0}, {1, 1}}), Error);
}

TEST_CASE("from_mul_table rejects malformed tables") {
  CHECK_THROWS_AS(Quasigroup::from_mul_table({{0, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(Quasigroup::from_mul_table({{0, 1}, {1}}), Error);
}

TEST_CASE("semisymmetry holds for the small examples and fails for Z3") {
  CHECK(is_semisymmetric(fixtures::p3()));
  CHECK(is_semisymmetric(fixtures::p4()));
  CHECK(is_semisymmetric(fixtures::trivial()));
  const auto z3 = fixtures::z3();
  CHECK_FALSE(is_semisymmetric(z3));
  // (1+0)+1 = 2 != 0
  CHECK(z3.mul(z3.mul(1, 0), 1) == 2);
}

TEST_CASE("idempotence") {
  CHECK(is_idempotent(fixtures::p4()));
  CHECK(is_idempotent(fixtures::trivial()));
  CHECK_FALSE(is_idempotent(Quasigroup::from_abelian_group({2})));
}

TEST_CASE("check_axioms flags a corrupted division table") {
  const auto q = fixtures::p3();
  std::vector<int> mul, rdiv, ldiv;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      mul.push_back(q.mul(x, y));
      rdiv.push_back(q.rdiv(x, y));
      ldiv.push_back(q.ldiv(x, y));
    }
  std::swap(ldiv[1], ldiv[2]);  // corrupt row 0 of x\y
  const auto bad = Quasigroup::from_raw_tables(3, mul, rdiv, ldiv);
  const auto rep = check_axioms(bad);
  CHECK_FALSE(rep.il.ok);
  CHECK(rep.il.witness_x >= 0);
  CHECK(rep.il.witness_y >= 0);
}

TEST_CASE("opposite is an involution and transposes the table") {
  const auto q = fixtures::p3();
  const auto op = q.opposite();
  CHECK(op.opposite() == q);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(op.mul(x, y) == q.mul(y, x));
  // a commutative quasigroup equals its opposite
  CHECK(fixtures::z3().opposite() == fixtures::z3());
  // semisymmetry transfers both ways
  CHECK(is_semisymmetric(op));
}

TEST_CASE("from_abelian_group builds the expected tables") {
  const auto z2 = Quasigroup::from_abelian_group({2});
  CHECK(z2.mul(0, 1) == 1);
  CHECK(z2.mul(1, 1) == 0);
  require_all_axioms(z2);
  require_all_axioms(fixtures::z3());
  // divisions are subtraction and its opposite
  const auto z3 = fixtures::z3();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(z3.rdiv(x, y) == ((x - y) % 3 + 3) % 3);
      CHECK(z3.ldiv(x, y) == ((y - x) % 3 + 3) % 3);
    }

  const auto klein = Quasigroup::from_abelian_group({2, 2});
  CHECK(klein.order() == 4);
  CHECK(klein.mul(1, 2) == 3);  // (0,1)+(1,0) = (1,1)
  require_all_axioms(klein);

  CHECK_THROWS_AS(Quasigroup::from_abelian_group({0}), Error);
}

TEST_CASE("semisymmetric divisions coincide with the opposite product") {
  for (const auto& q : {fixtures::p3(), fixtures::p4()}) {
    for (int x = 0; x < q.order(); ++x)
      for (int y = 0; y < q.order(); ++y) {
        CHECK(q.ldiv(y, x) == q.mul(x, y));
        CHECK(q.rdiv(y, x) == q.mul(x, y));
      }
  }
}

TEST_CASE("left and right translations invert each other when semisymmetric") {
  const auto q = fixtures::p4();
  for (int e = 0; e < q.order(); ++e)
    CHECK((right_translation(q, e) * left_translation(q, e)).is_identity());
}

TEST_CASE("multiplication group of the trivial quasigroup") {
  CHECK(multiplication_group(fixtures::trivial()).order() == 1);
}

TEST_CASE("multiplication group of Z3 is the translations") {
  CHECK(multiplication_group(fixtures::z3()).order() == 3);
}

TEST_CASE("multiplication group order matches an independent closure") {
  const auto q = fixtures::p3();
  const auto g = multiplication_group(q);
  CHECK(g.order() == closure_order_oracle(g.generators));
  CHECK(g.contains(Permutation::identity(3)));
}

TEST_CASE("closure cap throws") {
  CHECK_THROWS_AS(multiplication_group(fixtures::p4(), 3), Error);
}
