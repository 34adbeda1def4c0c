#include <doctest.h>

#include <random>

#include "gpi/checker.hpp"
#include "gpi/fleet.hpp"
#include "gpi/structure.hpp"

using namespace gpi;

namespace {

GradedPolynomial c3c3_remark_poly(const AlgebraPtr& a) {
  // x_{1,sigma} x_{2,tau} - zeta * x_{2,tau} x_{1,sigma}, sigma = (t,e), tau = (e,t)
  GradedPolynomial f(a->group(), a->field());
  CycScalar one = CycScalar::one(a->field());
  f.add_term({{1, 3}, {2, 1}}, one);
  f.add_term({{2, 1}, {1, 3}}, -CycScalar::zeta(a->field()));
  return f;
}

}  // namespace

TEST_CASE("evaluate") {
  AlgebraPtr a = fleet::falpha_c3c3();
  GradedPolynomial f = c3c3_remark_poly(a);
  Assignment asg;
  asg.values.emplace(GVar{1, 3}, AlgElement::basis(a, 3));
  asg.values.emplace(GVar{2, 1}, AlgElement::basis(a, 1));
  CHECK(evaluate(f, a, asg).is_zero());

  AlgebraPtr qc2 = fleet::qc2();
  GradedPolynomial x1(qc2->group(), qc2->field());
  x1.add_term({{1, 0}}, CycScalar::one(qc2->field()));
  Assignment one;
  one.values.emplace(GVar{1, 0}, AlgElement::unit(qc2));
  CHECK(evaluate(x1, qc2, one) == AlgElement::unit(qc2));

  Assignment bad;
  bad.values.emplace(GVar{1, 0}, AlgElement::basis(qc2, 1));  // degree t, not e
  CHECK_THROWS_WITH_AS(evaluate(x1, qc2, bad), doctest::Contains("InhomogeneousValue"),
                       Error);
  Assignment missing;
  CHECK_THROWS_WITH_AS(evaluate(x1, qc2, missing), doctest::Contains("MissingAssignment"),
                       Error);
}

TEST_CASE("generic evaluation") {
  AlgebraPtr qc2 = fleet::qc2();
  FieldPtr f = qc2->field();
  // x_{1,t}^2 -> t^2 * 1, not an identity
  GradedPolynomial sq(qc2->group(), f);
  sq.add_term({{1, 1}, {1, 1}}, CycScalar::one(f));
  GenericElement ge = evaluate_generic(sq, qc2);
  CHECK_FALSE(ge.is_zero());

  // commutator at degrees (e,e): identity since A_e is 1-dim
  GradedPolynomial comm(qc2->group(), f);
  comm.add_term({{1, 0}, {2, 0}}, CycScalar::one(f));
  comm.add_term({{2, 0}, {1, 0}}, -CycScalar::one(f));
  CHECK(evaluate_generic(comm, qc2).is_zero());

  GradedPolynomial x1(qc2->group(), f);
  x1.add_term({{1, 0}}, CycScalar::one(f));
  CHECK_FALSE(evaluate_generic(x1, qc2).is_zero());
}

TEST_CASE("identity checking") {
  AlgebraPtr c3 = fleet::falpha_c3c3();
  CHECK(is_identity(c3c3_remark_poly(c3), c3).identity);

  AlgebraPtr m = fleet::m_eg();
  GradedPolynomial comm(m->group(), m->field());
  comm.add_term({{1, 0}, {2, 0}}, CycScalar::one(m->field()));
  comm.add_term({{2, 0}, {1, 0}}, -CycScalar::one(m->field()));
  IdentityReport rep = is_identity(comm, m);
  CHECK_FALSE(rep.identity);
  REQUIRE(rep.witness.has_value());
  CHECK_FALSE(evaluate(comm, m, *rep.witness).is_zero());

  // non-multilinear witness extraction goes through the generic route
  GradedPolynomial sq(m->group(), m->field());
  sq.add_term({{1, 1}, {1, 1}}, CycScalar::one(m->field()));
  IdentityReport rep2 = is_identity(sq, m);
  CHECK_FALSE(rep2.identity);
  REQUIRE(rep2.witness.has_value());
  CHECK_FALSE(evaluate(sq, m, *rep2.witness).is_zero());

  // soundness cross-check: multilinear sweep agrees with the generic value
  for (const AlgebraPtr& a : {fleet::qc2(), fleet::m_eg(), fleet::sign_c2c2()}) {
    for (int g1 = 0; g1 < a->group()->order(); ++g1)
      for (int g2 = 0; g2 < a->group()->order(); ++g2) {
        GradedPolynomial p(a->group(), a->field());
        p.add_term({{1, g1}, {2, g2}}, CycScalar::one(a->field()));
        p.add_term({{2, g2}, {1, g1}}, -CycScalar::one(a->field()));
        bool sweep = is_identity(p, a).identity;
        bool generic = true;
        if (!a->component(g1).empty() && !a->component(g2).empty())
          generic = evaluate_generic(p, a).is_zero();
        CHECK(sweep == generic);
      }
  }
}

TEST_CASE("centrality verdicts") {
  AlgebraPtr qc2 = fleet::qc2();
  GradedPolynomial x1(qc2->group(), qc2->field());
  x1.add_term({{1, 0}}, CycScalar::one(qc2->field()));
  CHECK(is_central(x1, qc2).kind == CentralityVerdict::Central);

  // trivially graded M_2(Q)
  AlgebraPtr m2 = matrix_graded(field_algebra(CycField::get(1), FiniteGroup::trivial()),
                                {0, 0});
  GradedPolynomial comm(m2->group(), m2->field());
  comm.add_term({{1, 0}, {2, 0}}, CycScalar::one(m2->field()));
  comm.add_term({{2, 0}, {1, 0}}, -CycScalar::one(m2->field()));
  CentralityVerdict cv = is_central(comm, m2);
  CHECK(cv.kind == CentralityVerdict::Neither);

  CHECK(is_central(c3c3_remark_poly(fleet::falpha_c3c3()), fleet::falpha_c3c3()).kind ==
        CentralityVerdict::Identity);
}

TEST_CASE("rho dichotomy") {
  AlgebraPtr qc2 = fleet::qc2();
  // e-homogeneous central polynomial: rho(f) = f -> central branch
  GradedPolynomial f(qc2->group(), qc2->field());
  f.add_term({{1, 0}, {2, 0}}, CycScalar::one(qc2->field()));
  CHECK(rho_dichotomy(f, qc2) == RhoClass::Central);

  // central with zero e-part: x_{1,t} on QC2 is central (commutative), rho = 0
  GradedPolynomial xt(qc2->group(), qc2->field());
  xt.add_term({{1, 1}}, CycScalar::one(qc2->field()));
  CHECK(rho_dichotomy(xt, qc2) == RhoClass::Identity);

  AlgebraPtr m2 = matrix_graded(field_algebra(CycField::get(1), FiniteGroup::trivial()),
                                {0, 0});
  GradedPolynomial comm(m2->group(), m2->field());
  comm.add_term({{1, 0}, {2, 0}}, CycScalar::one(m2->field()));
  comm.add_term({{2, 0}, {1, 0}}, -CycScalar::one(m2->field()));
  CHECK_THROWS_WITH_AS(rho_dichotomy(comm, m2), doctest::Contains("PreconditionFailed"),
                       Error);
}

TEST_CASE("staircase evaluator agrees with direct expansion") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const AlgebraPtr& a : {fleet::m_eg(), fleet::sign_c2c2()}) {
    for (int n : {1, 2}) {
      int dd = n * n;
      Poly L = regev(n, a->field());
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<AlgElement> xs, ys, all;
        for (int i = 0; i < 2 * dd; ++i) {
          AlgElement v(a);
          for (int b = 0; b < a->dim(); ++b)
            v.add_scaled(AlgElement::basis(a, b), CycScalar(a->field(), Rational(d(rng))));
          all.push_back(v);
          (i < dd ? xs : ys).push_back(v);
        }
        // direct term-by-term evaluation of the materialized polynomial
        AlgElement direct(a);
        for (const auto& [m, c] : L.terms()) {
          AlgElement cur = all[static_cast<size_t>(m[0] - 1)];
          for (size_t p = 1; p < m.size(); ++p)
            cur = cur * all[static_cast<size_t>(m[p] - 1)];
          direct.add_scaled(cur, c);
        }
        CHECK(regev_evaluate(n, xs, ys) == direct);
      }
    }
  }
}

TEST_CASE("strong falsifier semantics") {
  AlgebraPtr sign = fleet::sign_c2c2();
  Poly l4 = regev(2, sign->field());
  StrongReport vac = strong_falsifier(l4, sign, 0);
  CHECK_FALSE(vac.counterexample);
  CHECK(vac.checked == 0);

  // the commutator is not central on the sign algebra
  Poly comm(sign->field());
  comm.add_term({1, 2}, CycScalar::one(sign->field()));
  comm.add_term({2, 1}, -CycScalar::one(sign->field()));
  CHECK_THROWS_WITH_AS(strong_falsifier(comm, sign, 1000),
                       doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("degree-e central finder") {
  AlgebraPtr qc2 = fleet::qc2();
  ECentralResult r = find_e_central(qc2);
  CHECK(r.n == 1);
  CHECK(r.degrees == std::vector<int>{0, 0});
  REQUIRE(r.poly.has_value());
  CHECK(is_central(*r.poly, qc2).kind == CentralityVerdict::Central);
  CHECK_FALSE(r.value.is_zero());

  CHECK_THROWS_WITH_AS(find_e_central(fleet::dual_numbers()),
                       doctest::Contains("NotSemisimple"), Error);
}

TEST_CASE("multilinear identity spaces") {
  AlgebraPtr qc2 = fleet::qc2();
  IdSpace s = multilinear_id_space(qc2, {1, 1});
  CHECK(s.dimension() == 1);
  // kernel direction is the commutator x1x2 - x2x1
  REQUIRE(s.kernel.size() == 1);
  CHECK(s.kernel[0][0] == -s.kernel[0][1]);

  AlgebraPtr m2 = matrix_graded(field_algebra(CycField::get(1), FiniteGroup::trivial()),
                                {0, 0});
  CHECK(multilinear_id_space(m2, {0, 0}).dimension() == 0);
  CHECK(multilinear_id_space(qc2, {0}).dimension() == 0);
  CHECK(multilinear_id_space(qc2, {1}).dimension() == 0);
  CHECK_THROWS_WITH_AS(multilinear_id_space(qc2, {0, 0, 0, 0, 0}),
                       doctest::Contains("ResourceBound"), Error);
}

TEST_CASE("identity space comparison") {
  AlgebraPtr qc2 = fleet::qc2();
  CHECK(compare_id_spaces(qc2, qc2, 3).equal);

  CompareReport diff = compare_id_spaces(qc2, fleet::m_eg(), 2);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.witness.has_value());
  CHECK(diff.witness_degrees.size() == 2);
  // the witness separates: identity of exactly one algebra
  bool id1 = is_identity(*diff.witness, qc2).identity;
  bool id2 = is_identity(*diff.witness, fleet::m_eg()).identity;
  CHECK(id1 != id2);

  CHECK(compare_id_spaces(qc2, fleet::qc2_minus(), 3).equal);

  CHECK_THROWS_WITH_AS(compare_id_spaces(qc2, fleet::sign_c2c2(), 2),
                       doctest::Contains("GroupMismatch"), Error);
}

TEST_CASE("psi compatibility of the projected staircase on C4 -> C2") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  FieldPtr f = CycField::get(1);
  QuotientMap q = quotient(c4, {0, 2});
  // A degree tuple whose length-8 products are separated by the quotient:
  // all entries at e keeps every product at e.
  Poly L = regev(2, f);
  GradedPolynomial FG = with_degrees(L, std::vector<int>(8, 0), c4);
  CHECK(is_q_stable(FG, q));
  GradedPolynomial lhs = psi_quotient(project(FG, 0), q);
  GradedPolynomial rhs = project(psi_quotient(FG, q), 0);
  CHECK(lhs == rhs);
}
