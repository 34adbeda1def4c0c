#include <doctest.h>

#include "gpi/fleet.hpp"
#include "gpi/structure.hpp"

using namespace gpi;

TEST_CASE("center and trace radical") {
  AlgebraPtr qc2 = fleet::qc2();
  CenterBases cb = center(qc2);
  CHECK(cb.center.size() == 2);    // commutative
  CHECK(cb.center_e.size() == 1);  // A_e = Q*1
  CHECK(trace_radical(qc2).empty());

  AlgebraPtr sign = fleet::sign_c2c2();
  CHECK(center(sign).center.size() == 1);  // ungraded M_2(Q)
  CHECK(trace_radical(sign).empty());

  AlgebraPtr dual = fleet::dual_numbers();
  auto rad = trace_radical(dual);
  REQUIRE(rad.size() == 1);
  CHECK(rad[0].coord(0).is_zero());  // radical spanned by x
}

TEST_CASE("minimal polynomials and roots") {
  AlgebraPtr qc2 = fleet::qc2();
  AlgElement u = AlgElement::basis(qc2, 1);
  auto mp = minimal_polynomial(qc2, u);  // x^2 - 1
  REQUIRE(mp.size() == 3);
  CHECK(mp[0] == CycScalar(qc2->field(), Rational(-1)));
  CHECK(mp[1].is_zero());
  CHECK(mp[2] == CycScalar::one(qc2->field()));

  auto [roots, complete] = roots_in_field(mp);
  CHECK(complete);
  CHECK(roots.size() == 2);

  // x^2 + 1 splits over Q(i) but not over Q.
  FieldPtr f4 = CycField::get(4);
  std::vector<CycScalar> x2p1{CycScalar::one(f4), CycScalar(f4), CycScalar::one(f4)};
  auto [r4, c4] = roots_in_field(x2p1);
  CHECK(c4);
  CHECK(r4.size() == 2);
  FieldPtr f1 = CycField::get(1);
  std::vector<CycScalar> x2p1q{CycScalar::one(f1), CycScalar(f1), CycScalar::one(f1)};
  auto [r1, c1] = roots_in_field(x2p1q);
  CHECK_FALSE(c1);
  CHECK(r1.empty());
}

TEST_CASE("central idempotents") {
  AlgebraPtr qc2 = fleet::qc2();
  auto idem = central_idempotents(qc2);
  REQUIRE(idem.size() == 2);
  AlgElement sum(qc2);
  for (const auto& ci : idem) {
    sum = sum + ci.elem;
    CHECK(ci.elem * ci.elem == ci.elem);
    REQUIRE(ci.mu_e.has_value());
    CHECK(*ci.mu_e == CycScalar(qc2->field(), Rational(1) / 2));
  }
  CHECK(sum == AlgElement::unit(qc2));

  auto qq = central_idempotents(fleet::q_times_q());
  CHECK(qq.size() == 2);

  auto qi = central_idempotents(fleet::qic4());
  CHECK(qi.size() == 4);
  AlgElement s(fleet::qic4());
  for (const auto& ci : qi) {
    CHECK(ci.elem * ci.elem == ci.elem);
    CHECK(ci.e_part_nonzero);
  }

  CHECK_THROWS_WITH_AS(central_idempotents(fleet::dual_numbers()),
                       doctest::Contains("NotSemisimple"), Error);
}

TEST_CASE("graded ideals and simplicity") {
  AlgebraPtr qc2 = fleet::qc2();
  CHECK(is_g_simple(qc2).kind == SimplicityVerdict::Simple);

  // Ungraded, Q(1+u) is an ideal of QC2; its graded closure is everything.
  AlgElement oneplusu = AlgElement::basis(qc2, 0) + AlgElement::basis(qc2, 1);
  auto closure = graded_ideal_closure(qc2, oneplusu);
  CHECK(closure.size() == 2);

  CHECK(is_g_simple(fleet::dual_numbers()).kind == SimplicityVerdict::NotSimple);
  CHECK(is_g_simple(fleet::q_times_q()).kind == SimplicityVerdict::NotSimple);
  CHECK(is_g_simple(fleet::sign_c2c2()).kind == SimplicityVerdict::Simple);
  CHECK(is_g_simple(fleet::m_eg()).kind == SimplicityVerdict::Simple);
  CHECK(is_g_simple(fleet::falpha_c3c3()).kind == SimplicityVerdict::Simple);

  // Opposite preserves the verdicts on the fleet.
  for (const AlgebraPtr& a :
       {fleet::qc2(), fleet::sign_c2c2(), fleet::m_eg(), fleet::falpha_c3c3()})
    CHECK(is_g_simple(opposite(a)).kind == SimplicityVerdict::Simple);

  // Tensor of G-simple fleet members stays simple over the product group.
  CHECK(is_g_simple(tensor_graded(fleet::qc2(), fleet::qc2())).kind ==
        SimplicityVerdict::Simple);
}

TEST_CASE("division structure") {
  auto rep = is_g_division(fleet::falpha_c3c3());
  CHECK(rep.verdict == DivisionStructureReport::Division);
  CHECK(rep.support.size() == 9);
  CHECK(rep.witnesses.size() == 9);

  CHECK(is_g_division(fleet::qc2()).verdict == DivisionStructureReport::Division);
  auto meg = is_g_division(fleet::m_eg());
  CHECK(meg.verdict == DivisionStructureReport::NotDivision);
  REQUIRE(meg.failing.has_value());

  CHECK(is_g_division(fleet::q_times_q()).verdict ==
        DivisionStructureReport::NotDivision);
}

TEST_CASE("exponents") {
  CHECK(exponent(fleet::qc2()) == 1);
  CHECK(exponent(fleet::qc2c2()) == 1);
  CHECK(exponent(fleet::qic4()) == 1);
  CHECK(exponent(fleet::sign_c2c2()) == 4);
  CHECK(exponent(fleet::m_eg()) == 4);
  CHECK(exponent(fleet::falpha_c3c3()) == 9);
  CHECK_THROWS_WITH_AS(exponent(fleet::dual_numbers()),
                       doctest::Contains("NotSemisimple"), Error);
}

TEST_CASE("kaplansky report") {
  auto rep = kaplansky_report(fleet::twisted16());
  CHECK(rep.matrix_size == 2);
  CHECK(rep.pi_degree == 8);  // ungraded M_4(Q), exponent 16
  CHECK(rep.within_bound);

  auto r2 = kaplansky_report(fleet::qc2());
  CHECK(r2.matrix_size == 1);
  CHECK(r2.within_bound);
}
