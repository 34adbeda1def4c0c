#ifndef GPI_FLEET_HPP
#define GPI_FLEET_HPP

#include "gpi/algebra.hpp"

namespace gpi {
namespace fleet {

// Standard desk-scale instances shared by the tests and the experiment
// catalog. All are built fresh per call; they are cheap.

// Q[C2], the 2-dimensional group algebra (u^2 = 1).
AlgebraPtr qc2();

// Q^alpha[C2] with u^2 = -1.
AlgebraPtr qc2_minus();

// M_2(Q) with the (e, t) matrix grading over C2.
AlgebraPtr m_eg();

// F^alpha(C2xC2) with the sign bicharacter alpha(g, h) = (-1)^{g_1 h_2};
// ungraded it is M_2(Q).
AlgebraPtr sign_c2c2();

// Q[C2xC2], the plain group algebra.
AlgebraPtr qc2c2();

// F^alpha(C3xC3) over Q(zeta_3) with alpha(g, h) = zeta^{g_1 h_2}.
AlgebraPtr falpha_c3c3();

// Q(i)[C4], the group algebra over the 4th cyclotomic field.
AlgebraPtr qic4();

// dim-16 twisted-matrix instance: M_2 over the sign algebra, tuple (e, a).
AlgebraPtr twisted16();

// Q[x]/(x^2), trivially graded; not semisimple.
AlgebraPtr dual_numbers();

// Q x Q, trivially graded.
AlgebraPtr q_times_q();

}  // namespace fleet
}  // namespace gpi

#endif
