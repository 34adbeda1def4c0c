#include <doctest.h>

#include <random>

#include "gpi/cyclotomic.hpp"

using namespace gpi;

namespace {

CycScalar rat(const FieldPtr& f, long num, long den = 1) {
  return CycScalar(f, Rational(num) / den);
}

// Random scalar with small integer coordinates.
CycScalar sample(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> c(static_cast<size_t>(f->degree()));
  for (auto& x : c) x = d(rng);
  return CycScalar(f, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomial degrees") {
  CHECK(CycField::get(1)->degree() == 1);  // x - 1
  CHECK(CycField::get(2)->degree() == 1);
  CHECK(CycField::get(3)->degree() == 2);
  CHECK(CycField::get(4)->degree() == 2);
  CHECK(CycField::get(12)->degree() == 4);
  // Phi_4 = x^2 + 1
  auto phi4 = CycField::get(4)->phi();
  CHECK(phi4[0] == 1);
  CHECK(phi4[1] == 0);
  CHECK(phi4[2] == 1);
}

TEST_CASE("basic arithmetic") {
  FieldPtr f3 = CycField::get(3);
  CycScalar z = CycScalar::zeta(f3);
  CHECK(z * z.pow(2) == CycScalar::one(f3));  // zeta^3 = 1

  FieldPtr f4 = CycField::get(4);
  CycScalar i = CycScalar::zeta(f4);
  CHECK((CycScalar::one(f4) + i) * (CycScalar::one(f4) - i) == rat(f4, 2));

  FieldPtr f1 = CycField::get(1);
  CHECK(rat(f1, 3, 2).inv() == rat(f1, 2, 3));
}

TEST_CASE("errors") {
  FieldPtr f1 = CycField::get(1);
  FieldPtr f3 = CycField::get(3);
  CHECK_THROWS_WITH_AS(CycScalar(f1).inv(), doctest::Contains("DivisionByZero"), Error);
  CHECK_THROWS_WITH_AS(CycScalar::one(f1) + CycScalar::one(f3),
                       doctest::Contains("OrderMismatch"), Error);
}

TEST_CASE("conjugation") {
  FieldPtr f3 = CycField::get(3);
  CycScalar z = CycScalar::zeta(f3);
  CHECK(z.conj() == z.pow(2));

  FieldPtr f1 = CycField::get(1);
  CHECK(rat(f1, 5, 7).conj() == rat(f1, 5, 7));

  FieldPtr f4 = CycField::get(4);
  CycScalar a = CycScalar::one(f4) + CycScalar::zeta(f4);
  CHECK(a.conj() * a == rat(f4, 2));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240817);
  for (int m : {1, 3, 4, 5, 8}) {
    FieldPtr f = CycField::get(m);
    for (int it = 0; it < 25; ++it) {
      CycScalar a = sample(f, rng), b = sample(f, rng), c = sample(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inv() == CycScalar::one(f));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("a * conj(a) = 0 only for a = 0, small grids") {
  for (int m : {3, 4}) {
    FieldPtr f = CycField::get(m);
    for (int c0 = -2; c0 <= 2; ++c0)
      for (int c1 = -2; c1 <= 2; ++c1) {
        CycScalar a(f, {Rational(c0), Rational(c1)});
        if (!a.is_zero()) CHECK_FALSE((a * a.conj()).is_zero());
      }
  }
}

TEST_CASE("literal parsing round trips") {
  FieldPtr f4 = CycField::get(4);
  CHECK(CycScalar::parse("3/2", f4) == rat(f4, 3, 2));
  CHECK(CycScalar::parse("z^2", f4) == CycScalar::zeta(f4, 2));
  CHECK(CycScalar::parse("1+2*z^3", f4) ==
        CycScalar::one(f4) + rat(f4, 2) * CycScalar::zeta(f4, 3));
  CHECK(CycScalar::parse("-z", f4) == -CycScalar::zeta(f4));
  CHECK_THROWS_WITH_AS(CycScalar::parse("z+", f4), doctest::Contains("SyntaxError"), Error);

  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    CycScalar a = sample(f4, rng);
    CHECK(CycScalar::parse(a.str(), f4) == a);
  }
}

TEST_CASE("rational text helpers") {
  CHECK(rational_str(Rational(-5) / 7) == "-5/7");
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-5/7") == Rational(-5) / 7);
}
