#include "gpi/fleet.hpp"

namespace gpi {
namespace fleet {

namespace {

// Bicharacter cocycle on a product of two cyclic groups: alpha(g, h) =
// w^{g_1 * h_2} where g = (g_1, g_2) under the a-major product indexing.
Cocycle bicharacter(const GroupPtr& g, const FieldPtr& f, int nb, const CycScalar& w) {
  int n = g->order();
  std::vector<std::vector<CycScalar>> vals(
      static_cast<size_t>(n), std::vector<CycScalar>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      vals[static_cast<size_t>(x)][static_cast<size_t>(y)] = w.pow((x / nb) * (y % nb));
  return cocycle_validate(g, f, vals);
}

}  // namespace

AlgebraPtr qc2() {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  FieldPtr f = CycField::get(1);
  return twisted_group_algebra(Cocycle::trivial(c2, f));
}

AlgebraPtr qc2_minus() {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  FieldPtr f = CycField::get(1);
  CycScalar one = CycScalar::one(f);
  CycScalar minus = CycScalar(f, Rational(-1));
  std::vector<std::vector<CycScalar>> vals{{one, one}, {one, minus}};
  return twisted_group_algebra(cocycle_validate(c2, f, vals));
}

AlgebraPtr m_eg() {
  GroupPtr c2 = FiniteGroup::cyclic(2);
  FieldPtr f = CycField::get(1);
  return matrix_graded(field_algebra(f, c2), {0, 1});
}

AlgebraPtr sign_c2c2() {
  GroupPtr g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  FieldPtr f = CycField::get(1);
  return twisted_group_algebra(bicharacter(g, f, 2, CycScalar(f, Rational(-1))));
}

AlgebraPtr qc2c2() {
  GroupPtr g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  FieldPtr f = CycField::get(1);
  return twisted_group_algebra(Cocycle::trivial(g, f));
}

AlgebraPtr falpha_c3c3() {
  GroupPtr g = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  FieldPtr f = CycField::get(3);
  return twisted_group_algebra(bicharacter(g, f, 3, CycScalar::zeta(f)));
}

AlgebraPtr qic4() {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  FieldPtr f = CycField::get(4);
  return twisted_group_algebra(Cocycle::trivial(c4, f));
}

AlgebraPtr twisted16() {
  return matrix_graded(sign_c2c2(), {0, 1});
}

AlgebraPtr dual_numbers() {
  GroupPtr g = FiniteGroup::trivial();
  FieldPtr f = CycField::get(1);
  CycScalar one = CycScalar::one(f);
  CycScalar zero(f);
  std::vector<std::vector<std::vector<SCTerm>>> mul(2, std::vector<std::vector<SCTerm>>(2));
  mul[0][0] = {SCTerm{0, one}};
  mul[0][1] = {SCTerm{1, one}};
  mul[1][0] = {SCTerm{1, one}};
  mul[1][1] = {};
  std::vector<CycScalar> unit{one, zero};
  return std::make_shared<GradedAlgebra>(f, g, std::vector<std::string>{"1", "x"},
                                         std::vector<int>{0, 0}, mul, unit);
}

AlgebraPtr q_times_q() {
  GroupPtr g = FiniteGroup::trivial();
  FieldPtr f = CycField::get(1);
  CycScalar one = CycScalar::one(f);
  std::vector<std::vector<std::vector<SCTerm>>> mul(2, std::vector<std::vector<SCTerm>>(2));
  mul[0][0] = {SCTerm{0, one}};
  mul[0][1] = {};
  mul[1][0] = {};
  mul[1][1] = {SCTerm{1, one}};
  std::vector<CycScalar> unit{one, one};
  return std::make_shared<GradedAlgebra>(f, g, std::vector<std::string>{"p", "q"},
                                         std::vector<int>{0, 0}, mul, unit);
}

}  // namespace fleet
}  // namespace gpi
