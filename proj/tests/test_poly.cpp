#include <doctest.h>

#include "gpi/poly.hpp"

using namespace gpi;

namespace {

GroupPtr c2() { return FiniteGroup::cyclic(2); }
FieldPtr q() { return CycField::get(1); }

}  // namespace

TEST_CASE("parsing and printing") {
  GroupPtr g = c2();
  FieldPtr f = q();
  GradedPolynomial p = parse_poly("x[1,e]*x[2,t] - 3/2*x[2,t]*x[1,e]", g, f);
  CHECK(p.term_count() == 2);
  CHECK(parse_poly(p.str(), g, f) == p);

  FieldPtr f3 = CycField::get(3);
  GradedPolynomial z = parse_poly("z^2*x[1,t]", g, f3);
  CHECK(z.terms().begin()->second == CycScalar::zeta(f3, 2));
  // compound coefficients round trip through parentheses
  GradedPolynomial w = parse_poly("(1+z)*x[1,e]", g, f3);
  CHECK(parse_poly(w.str(), g, f3) == w);

  CHECK_THROWS_WITH_AS(parse_poly("x[1,nope]", g, f), doctest::Contains("UnknownGroupElement"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_poly("x[1,e]+", g, f), doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("projections sum to the whole") {
  GroupPtr g = c2();
  FieldPtr f = q();
  GradedPolynomial p =
      parse_poly("x[1,e]*x[2,t] + x[1,t]*x[2,t] - 2*x[1,e] + x[2,e]*x[1,e]", g, f);
  GradedPolynomial sum(g, f);
  for (int d = 0; d < 2; ++d) sum = sum + project(p, d);
  CHECK(sum == p);
  CHECK(project(p, 1).term_count() == 2);
}

TEST_CASE("transpose is an anti-homomorphism") {
  GroupPtr g = c2();
  FieldPtr f = q();
  GradedPolynomial a = parse_poly("x[1,e]*x[2,t] - x[3,t]", g, f);
  GradedPolynomial b = parse_poly("2*x[4,t] + x[1,e]", g, f);
  CHECK(transpose(a * b) == transpose(b) * transpose(a));
  CHECK(transpose(transpose(a)) == a);
}

TEST_CASE("psi quotient") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  FieldPtr f = q();
  QuotientMap qm = quotient(c4, {0, 2});
  GradedPolynomial p = parse_poly("x[1,t]*x[2,t3]", c4, f);
  GradedPolynomial img = psi_quotient(p, qm);
  // both degrees map to the nontrivial coset
  for (const auto& [m, c] : img.terms())
    for (const auto& [i, d] : m) CHECK(d == 1);

  GradedPolynomial collide = parse_poly("x[1,e] - x[1,t2]", c4, f);
  CHECK(psi_quotient(collide, qm).is_zero());

  QuotientMap triv = quotient(c4, {0});
  CHECK(psi_quotient(p, triv).term_count() == p.term_count());
}

TEST_CASE("q-stability on the C4 examples") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  FieldPtr f = q();
  QuotientMap qm = quotient(c4, {0, 2});
  CHECK_FALSE(is_q_stable(parse_poly("x[2,t2]", c4, f), qm));
  CHECK(is_q_stable(parse_poly("2*x[1,e]", c4, f), qm));
  // trivial kernel: always stable
  QuotientMap triv = quotient(c4, {0});
  CHECK(is_q_stable(parse_poly("x[2,t2] + x[1,t]*x[2,t3]", c4, f), triv));
  // all variables at degree e: always stable
  CHECK(is_q_stable(parse_poly("x[1,e]*x[2,e] - x[2,e]", c4, f), qm));
}

TEST_CASE("staircase polynomial") {
  FieldPtr f = q();
  Poly l1 = regev(1, f);
  REQUIRE(l1.terms().size() == 1);
  CHECK(l1.terms().begin()->first == std::vector<int>{1, 2});

  Poly l4 = regev(2, f);
  CHECK(l4.terms().size() == 576);
  for (const auto& [m, c] : l4.terms()) CHECK(m.size() == 8);
  // identity-permutation monomial: +x1 y1 x2x3x4 y2y3y4
  std::vector<int> id_mono{1, 5, 2, 3, 4, 6, 7, 8};
  auto it = l4.terms().find(id_mono);
  REQUIRE(it != l4.terms().end());
  CHECK(it->second == CycScalar::one(f));
  CHECK(is_multilinear(l4));

  // swapping two x-variables negates the polynomial
  Poly swapped(f);
  for (const auto& [m, c] : l4.terms()) {
    std::vector<int> m2 = m;
    for (int& v : m2) v = (v == 1) ? 2 : (v == 2 ? 1 : v);
    swapped.add_term(m2, c);
  }
  Poly sum = l4 + swapped;
  CHECK(sum.is_zero());

  CHECK_THROWS_WITH_AS(regev(3, f), doctest::Contains("ResourceBound"), Error);
}

TEST_CASE("embedding and degree pinning") {
  GroupPtr g = c2();
  FieldPtr f = q();
  Poly x1x2(f);
  x1x2.add_term({1, 2}, CycScalar::one(f));
  GradedPolynomial e = ungraded_embed(x1x2, g);
  CHECK(e.term_count() == 4);
  GradedPolynomial rho = project(e, 0);
  CHECK(rho == parse_poly("x[1,e]*x[2,e] + x[1,t]*x[2,t]", g, f));

  GroupPtr c3c3 = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  Poly x1(f);
  x1.add_term({1}, CycScalar::one(f));
  CHECK(ungraded_embed(x1, c3c3).term_count() == 9);

  CHECK_THROWS_WITH_AS(ungraded_embed(regev(2, f), c3c3, 1000),
                       doctest::Contains("ResourceBound"), Error);

  GradedPolynomial pinned = with_degrees(x1x2, {0, 1}, g);
  CHECK(pinned == parse_poly("x[1,e]*x[2,t]", g, f));
}

TEST_CASE("check product") {
  FieldPtr f = q();
  Poly x1(f);
  x1.add_term({1}, CycScalar::one(f));
  Poly fcheck = check_product(x1);
  REQUIRE(fcheck.terms().size() == 1);
  CHECK(fcheck.terms().begin()->first == std::vector<int>{1, 2});

  Poly l4 = regev(2, f);
  Poly l4check = check_product(l4);
  CHECK(l4check.max_index() == 16);
  for (const auto& [m, c] : l4check.terms()) CHECK(m.size() == 16);
}

TEST_CASE("multilinearity") {
  GroupPtr g = c2();
  FieldPtr f = q();
  CHECK(is_multilinear(parse_poly("x[1,e]*x[2,t] - x[2,t]*x[1,e]", g, f)));
  CHECK_FALSE(is_multilinear(parse_poly("x[1,e]*x[1,e]", g, f)));
  CHECK_FALSE(is_multilinear(parse_poly("x[1,e]*x[2,t] - x[1,e]", g, f)));
}
