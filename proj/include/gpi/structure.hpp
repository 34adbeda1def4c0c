#ifndef GPI_STRUCTURE_HPP
#define GPI_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpi/algebra.hpp"
#include "gpi/linalg.hpp"

namespace gpi {

struct CenterBases {
  std::vector<AlgElement> center;    // basis of Z(A)
  std::vector<AlgElement> center_e;  // basis of Z(A)_e
};

CenterBases center(const AlgebraPtr& a);

// Radical of the trace form tr(L_x L_y); empty iff A is semisimple.
std::vector<AlgElement> trace_radical(const AlgebraPtr& a);

struct CentralIdempotent {
  AlgElement elem;
  // mu_e: e-part of the idempotent expressed against the e-part of the unit;
  // absent when the e-part is not a scalar multiple of the unit's.
  std::optional<CycScalar> mu_e;
  bool e_part_nonzero = false;
};

// Primitive central idempotents over Q(zeta_m); FactorizationIncomplete when
// a minimal polynomial does not split by the implemented methods.
std::vector<CentralIdempotent> central_idempotents(const AlgebraPtr& a);

// Smallest graded two-sided ideal containing v, as an RREF coordinate basis.
std::vector<Vec> graded_ideal_closure(const AlgebraPtr& a, const AlgElement& v);

struct SimplicityVerdict {
  enum Kind { Simple, NotSimple, Inconclusive } kind;
  std::vector<Vec> witness_ideal;  // for NotSimple
  std::string reason;              // for Inconclusive
};

SimplicityVerdict is_g_simple(const AlgebraPtr& a);

struct DivisionStructureReport {
  enum Verdict { Division, NotDivision, Inconclusive } verdict;
  std::vector<int> support;            // H when Division
  std::vector<AlgElement> witnesses;   // invertible b_h per h in H
  std::optional<AlgElement> failing;   // non-invertible homogeneous witness
};

DivisionStructureReport is_g_division(const AlgebraPtr& a);

// Max over simple components of dim over its center; NotSemisimple/NotSplit.
int exponent(const AlgebraPtr& a);

// Minimal polynomial of x acting on the unital subalgebra it generates,
// monic, constant term first.
std::vector<CycScalar> minimal_polynomial(const AlgebraPtr& a, const AlgElement& x);

// Roots found inside Q(zeta_m) by rational-root search plus the quadratic
// discriminant method twisted by powers of zeta. Second member reports
// whether the polynomial split completely.
std::pair<std::vector<CycScalar>, bool> roots_in_field(std::vector<CycScalar> poly);

struct KaplanskyReport {
  int matrix_size;      // n of the retained twisted-matrix form
  int pi_degree;        // 2*sqrt(exponent), the Amitsur-Levitzki degree
  bool within_bound;    // matrix_size <= pi_degree / 2
};

// Desk-scale bound check for algebras with a retained twisted-matrix form.
KaplanskyReport kaplansky_report(const AlgebraPtr& a);

}  // namespace gpi

#endif
