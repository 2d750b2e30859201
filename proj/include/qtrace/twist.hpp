#pragma once

#include "qtrace/module.hpp"

namespace qtrace {

// The universal fusion matrix J(lambda), solved once and for all from the
// ABRR relation (Eq.-2.6 shape)
//     J (q^{2(lambda+rho)-x^2})_2 = R^{21} q^{-x(x)x} (q^{2(lambda+rho)-x^2})_2 J.
// J is a sum of terms  coeff_{n,nu1,nu2}(zeta) (F^n P_{nu1}) (x) (E^n P_{nu2})
// where P_w projects onto input weight w and zeta = q^{2 lambda}.  Grading by
// n makes the fixed point a triangular solve:
//   coeff_n (1 - zeta^n q^{2n(1-nu2-n)}) =
//     sum_{k=1..n} c_k q^{k(nu1-nu2-4(n-k)-2k)} zeta^{n-k} q^{2(n-k)(1-nu2-(n-k))} coeff_{n-k},
// so the solution is the unique one of the form 1 + (positive weight in the
// second slot).  Coefficients are pair-independent and cached globally.
const FracFn& fusion_j_coeff(int n, int nu1, int nu2);

// Matrix of J_{AB}(lambda) on A (x) B; entries rational in (q, zeta).
FMatrix eval_fusion_J(const Rep& a, const Rep& b);

// Blackboard substitution lambda -> -lambda - rho:  zeta -> q^{-2} zeta^{-1}.
FracFn blackboard_subst(const FracFn& f);
FMatrix blackboard_subst(const FMatrix& m);

// Matrix of BB-J(lambda) = J(-lambda-rho) on A (x) B.
FMatrix eval_fusion_J_bb(const Rep& a, const Rep& b);

// Residual of the ABRR relation for J_{AB} in column-normalized form
// (both sides divided by the diagonal factor at the input weight, which
// keeps all zeta powers integral).  Zero iff J solves the relation.
FMatrix abrr_residual(const Rep& a, const Rep& b);

// Q(lambda) = m_21 (1 (x) S^{-1}) (BB-J(lambda)) evaluated on A.
FMatrix eval_Q(const Rep& a);
// S(Q)(lambda - h) on A (antipode applied, argument shifted blockwise).
FMatrix eval_SQ_shifted(const Rep& a);
// G(lambda) = q^{-2 rho} Q^{-1}(lambda) S(Q)(lambda - h) on A.
FMatrix eval_G(const Rep& a);

}  // namespace qtrace
