#include <doctest.h>

#include <random>

#include "gpi/algebra.hpp"
#include "gpi/fleet.hpp"

using namespace gpi;

TEST_CASE("cocycle validation") {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  FieldPtr f = CycField::get(1);
  CycScalar one = CycScalar::one(f);
  CycScalar minus(f, Rational(-1));

  CHECK_THROWS_WITH_AS(cocycle_validate(c2, f, {{one, one}, {minus, one}}),
                       doctest::Contains("NotNormalized"), Error);
  CHECK_THROWS_WITH_AS(cocycle_validate(c2, f, {{one, one}, {one, CycScalar(f, Rational(2))}}),
                       doctest::Contains("NotRootOfUnity"), Error);

  // A sign pattern violating the cocycle identity on C2xC2.
  GroupPtr v4 = FiniteGroup::product(c2, c2);
  std::vector<std::vector<CycScalar>> vals(4, std::vector<CycScalar>(4, one));
  vals[1][2] = minus;  // alpha(b, a) alone breaks 2-cocycle consistency
  CHECK_THROWS_WITH_AS(cocycle_validate(v4, f, vals),
                       doctest::Contains("CocycleIdentityFails"), Error);
}

TEST_CASE("twisted group algebra relations") {
  AlgebraPtr sign = fleet::sign_c2c2();
  // u_a u_b = -u_b u_a for a = (t,e), b = (e,t).
  AlgElement ua = AlgElement::basis(sign, 2);  // degree index 2 = (t,e)
  AlgElement ub = AlgElement::basis(sign, 1);  // degree index 1 = (e,t)
  CHECK(ua * ub == -(ub * ua));
  CHECK(ua * ua == AlgElement::unit(sign));

  AlgebraPtr qm = fleet::qc2_minus();
  AlgElement u = AlgElement::basis(qm, 1);
  CHECK(u * u == -AlgElement::unit(qm));
}

TEST_CASE("matrix grading") {
  AlgebraPtr m = fleet::m_eg();
  REQUIRE(m->dim() == 4);
  // basis order: e11, e12, e21, e22; degrees e, t, t, e.
  CHECK(m->degree(0) == 0);
  CHECK(m->degree(1) == 1);
  CHECK(m->degree(2) == 1);
  CHECK(m->degree(3) == 0);
  AlgElement e12 = AlgElement::basis(m, 1), e21 = AlgElement::basis(m, 2);
  CHECK(e12 * e21 == AlgElement::basis(m, 0));
  CHECK((e12 * e12).is_zero());
  CHECK(AlgElement::unit(m) == AlgElement::basis(m, 0) + AlgElement::basis(m, 3));
}

TEST_CASE("tensor and opposite") {
  AlgebraPtr a = fleet::qc2();
  AlgebraPtr t = tensor_graded(a, a);
  CHECK(t->dim() == 4);
  CHECK(t->group()->order() == 4);

  AlgebraPtr sign = fleet::sign_c2c2();
  AlgebraPtr op = opposite(sign);
  for (int i = 0; i < sign->dim(); ++i)
    for (int j = 0; j < sign->dim(); ++j) {
      AlgElement lhs = AlgElement::basis(op, i) * AlgElement::basis(op, j);
      AlgElement rhs = AlgElement::basis(sign, j) * AlgElement::basis(sign, i);
      CHECK(lhs.coords() == rhs.coords());
    }
  // degrees inverted (order 2 here, so unchanged as sets)
  for (int i = 0; i < sign->dim(); ++i)
    CHECK(op->degree(i) == sign->group()->inverse(sign->degree(i)));

  AlgebraPtr c3 = fleet::falpha_c3c3();
  AlgebraPtr c3op = opposite(c3);
  for (int i = 0; i < c3->dim(); ++i)
    CHECK(c3op->degree(i) == c3->group()->inverse(c3->degree(i)));

  CHECK_THROWS_WITH_AS(tensor_graded(fleet::qc2(), fleet::falpha_c3c3()),
                       doctest::Contains("OrderMismatch"), Error);
}

TEST_CASE("quotient regrading") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  FieldPtr f = CycField::get(1);
  AlgebraPtr a = twisted_group_algebra(Cocycle::trivial(c4, f));
  QuotientMap q = quotient(c4, {0, 2});
  AlgebraPtr b = regrade_quotient(a, q);
  CHECK(b->group()->order() == 2);
  CHECK(b->degree(0) == 0);
  CHECK(b->degree(2) == 0);  // t2 lands in the kernel coset
  CHECK(b->degree(1) == 1);

  GroupPtr c2 = FiniteGroup::cyclic(2);
  QuotientMap other = quotient(c2, {0});
  CHECK_THROWS_WITH_AS(regrade_quotient(a, other), doctest::Contains("GroupMismatch"),
                       Error);
}

TEST_CASE("component maps") {
  AlgebraPtr a = fleet::sign_c2c2();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-2, 2);
  int n = a->dim();
  std::vector<std::vector<CycScalar>> phi(
      static_cast<size_t>(n), std::vector<CycScalar>(static_cast<size_t>(n)));
  for (auto& row : phi)
    for (auto& x : row) x = CycScalar(a->field(), Rational(d(rng)));
  auto parts = map_components(phi, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycScalar sum(a->field());
      for (const auto& [g, pg] : parts) sum += pg[static_cast<size_t>(i)][static_cast<size_t>(j)];
      CHECK(sum == phi[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
  // each part shifts degrees by its key
  for (const auto& [g, pg] : parts)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!pg[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
          CHECK(a->degree(i) == a->group()->mul(g, a->degree(j)));
}

TEST_CASE("star involution") {
  AlgebraPtr t16 = fleet::twisted16();
  AlgElement one = AlgElement::unit(t16);
  CHECK(star_involution(one) == one);

  // (u_a (x) e_12)^* = u_a^{-1} (x) e_21; here u_a^{-1} = u_a.
  // basis index (h*2 + i)*2 + j with a = group element 2.
  AlgElement x = AlgElement::basis(t16, (2 * 2 + 0) * 2 + 1);
  AlgElement expect = AlgElement::basis(t16, (2 * 2 + 1) * 2 + 0);
  CHECK(star_involution(x) == expect);
  CHECK(star_involution(star_involution(x)) == x);

  CHECK_THROWS_WITH_AS(star_involution(AlgElement::unit(fleet::q_times_q())),
                       doctest::Contains("NotTwistedMatrixForm"), Error);
}

TEST_CASE("element utilities") {
  AlgebraPtr a = fleet::m_eg();
  AlgElement x = AlgElement::basis(a, 0) + AlgElement::basis(a, 1);
  CHECK_FALSE(x.is_homogeneous());
  CHECK(x.component(0) == AlgElement::basis(a, 0));
  CHECK(x.component(1) == AlgElement::basis(a, 1));
  auto comps = x.components();
  CHECK(comps.size() == 2);
  int deg = -1;
  CHECK(AlgElement::basis(a, 2).is_homogeneous(&deg));
  CHECK(deg == 1);
}
