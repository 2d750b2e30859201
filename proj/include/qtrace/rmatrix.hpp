#pragma once

#include "qtrace/module.hpp"

namespace qtrace {

// Coefficients c_n of the universal R-matrix in the triangular form
//   R = q^{h(x)h/2} * sum_{n>=0} c_n E^n (x) F^n,  c_0 = 1.
// The paper never prints c_n; they are pinned by requiring
// R Delta(x) = Delta^op(x) R on irrep(K) (x) irrep(K) with K large enough,
// which has a unique triangular solution.  Values are cached globally.
const FracFn& universal_r_coeff(int n);

// Matrix of R on A (x) B.
FMatrix universal_R(const Rep& a, const Rep& b);
// Matrix of R^{21} = flip(R) on A (x) B: q^{h(x)h/2} * sum c_n F^n (x) E^n.
FMatrix universal_R21(const Rep& a, const Rep& b);

// Drinfeld element u = sum S(b_i) a_i as a matrix on A (diagonal on weight
// vectors; equals q^{-(nu,nu+2rho)} q^h on the irrep of highest weight nu).
FMatrix drinfeld_u(const Rep& a);
// S(u) as a matrix on A.
FMatrix drinfeld_Su(const Rep& a);

// Scalar by which q^{-2rho} u acts on an irrep (its central part).
FracFn drinfeld_u_central_scalar(const FdModule& v);

}  // namespace qtrace
