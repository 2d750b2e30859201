#pragma once

#include "qtrace/module.hpp"
#include "qtrace/series.hpp"

namespace qtrace {

struct NonGenericWeight : std::domain_error {
  explicit NonGenericWeight(const std::string& w) : std::domain_error(w) {}
};

// [mu + a]_q as a rational function of (q, y = q^mu):
// (y q^a - y^{-1} q^{-a}) / (q - q^{-1}).
FracFn qnum_mu(int a);

// Gaussian binomial (k choose l)_{q^{-2}} as used in Delta(F^k).
FracFn qbinom_qm2(long k, long l);

// The intertwiner Phi^v : M_{mu+s} -> M_{mu+s-wt(v)} (x) V with leading
// vector v of weight wt(v) and symbolic generic mu.  Coefficient u_j lives in
// V[wt(v)+2j]; u_0 = v.  Built from the E-annihilation recurrence
//   u_{j+1} = - q^{-(wt v + 2j + 2)} / ([j+1]_q [mu+s-wt(v)-j]_q) E u_j,
// which for irrep(2m) is the recurrence (7.6)-shape relation.
struct Intertwiner {
  const Rep* space;  // not owned
  int lead;          // basis index of the leading vector
  int lead_wt;
  int shift;                            // s
  std::vector<std::vector<FracFn>> u;   // u[j][basis index], coefficients in (q,y)
};

Intertwiner build_intertwiner(const Rep& v, int lead, int shift);

// Components of Phi(F^k v_{mu+s}):  (target Verma degree, V basis) -> coeff.
// Degrees above max_deg are dropped (the caller tracks the truncation).
using PhiImage = std::map<std::pair<int, int>, FracFn>;
PhiImage apply_intertwiner(const Intertwiner& phi, int k, int max_deg);

// Scalar by which the Drinfeld-Reshetikhin central element
// C_W = Tr|_W (1 (x) pi_W)(R^{21} R (1 (x) q^{2rho})) acts on the Verma
// highest vector at symbolic weight mu, computed by applying the truncated
// R-action on M_mu (x) W.  Equals chi_W(q^{2(mu+rho)}) by Prop-2.2 shape.
FracFn central_element_action(const Rep& w);

// chi_W(q^{2(mu+rho)}) = sum_nu dim W[nu] q^{(mu+1) nu} as FracFn(q,y).
FracFn character_at_mu_plus_rho(const Rep& w);

}  // namespace qtrace
