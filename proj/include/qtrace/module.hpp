#pragma once

#include <string>

#include "qtrace/matrix.hpp"

namespace qtrace {

// A finite-dimensional U_q(sl2) module with a chosen weight basis.  Matrix
// entries are rational in q alone.  E raises weights by 2, F lowers by 2,
// K = q^h is diagonal with entries q^{weight}.
struct Rep {
  std::vector<int> weights;  // eigenvalue of h per basis vector
  FMatrix E, F, K;

  int dim() const { return static_cast<int>(weights.size()); }
  int max_weight() const;
  int min_weight() const;
  // indices of the zero-weight basis vectors
  std::vector<int> zero_weight_indices() const;
};

// Named module; irrep/dual constructors keep weights descending.
struct FdModule : Rep {
  std::string name;
};

// Irreducible module with highest weight n (dimension n+1), in the basis
// w_0, ..., w_n with F w_i = w_{i+1} and E w_i = [i]_q [n-i+1]_q w_{i-1}.
FdModule irrep(int n);

// Dual module via the antipode, <x f, v> = <f, S(x) v>.  The basis is chosen
// weight-descending: basis vector j of dual(V) is the dual functional of
// V-basis vector (dim-1-j), so pairing(j) = dim-1-j.
FdModule dual(const FdModule& v);
inline int dual_pairing(const FdModule& v, int j) { return v.dim() - 1 - j; }

// Verifies the defining relations (Eq.-7.1 shape) on a module:
// KEK^{-1} = q^2 E, KFK^{-1} = q^{-2}F, EF - FE = (K - K^{-1})/(q - q^{-1}).
bool check_relations(const Rep& v);

// Tensor product with lexicographic product basis (first factor major) and
// the iterated coproduct action Delta(E) = E(x)q^h + 1(x)E,
// Delta(F) = F(x)1 + q^{-h}(x)F.
struct TensorSpace {
  std::vector<FdModule> factors;
  std::vector<std::vector<int>> multi;  // basis index -> per-factor basis indices
  Rep rep;

  int dim() const { return rep.dim(); }
  int nfactors() const { return static_cast<int>(factors.size()); }
  int comp_index(int basis, int k) const { return multi[basis][k]; }
  int comp_weight(int basis, int k) const { return factors[k].weights[multi[basis][k]]; }
  // sum of component weights over a factor subset
  int subset_weight(int basis, const std::vector<int>& ks) const;
  std::string name() const;
};

TensorSpace make_tensor(std::vector<FdModule> factors);

// The matrix of x acting in factor k of the tensor space (1 elsewhere).
FMatrix factor_op(const TensorSpace& s, int k, const FMatrix& x);

// diag q^{w1*w2/2} on A(x)B given the two weight lists (Cartan part of R).
FMatrix cartan_half(const std::vector<int>& wa, const std::vector<int>& wb);

}  // namespace qtrace
