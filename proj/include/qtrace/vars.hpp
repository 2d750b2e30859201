#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace qtrace {

// The fixed variable set of the engine.  Every polynomial lives over these
// thirteen formal variables; most objects use two or three of them.
//
//   q     deformation parameter.  Exponents of q are stored in HALF-UNITS:
//         a stored exponent e means q^{e/2}.  This makes q^{h(x)h/2} factors
//         and the (lam,mu) = lam*mu/2 pairing exact without a separate
//         square-root symbol.
//   zeta  q^{2 lambda}, the spectral variable on the exchange side
//   xi    q^{-lambda},  the series variable on the trace side
//   y     q^{mu}
//   eta   auxiliary symbol (q-binomial base p, Macdonald q^{2 mu_1}, ...)
//   t     auxiliary series variable (constant-term t, classical-limit t, ...)
//   T1..T3  integration-variable symbols of the hypergeometric residue
//         algebra, reused as cone variables z_i on the Macdonald side
//   A     the hypergeometric A parameter
//   lam, mu, ell   polynomial lambda, mu and ell = e^{lambda/2} used by the
//         degenerate-limit checks
enum class Var : int {
  q = 0,
  zeta,
  xi,
  y,
  eta,
  t,
  T1,
  T2,
  T3,
  A,
  lam,
  mu,
  ell,
};

inline constexpr int kNumVars = 13;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "q", "zeta", "xi", "y", "eta", "t", "T1", "T2", "T3", "A", "lam", "mu", "ell"};

// Exponent vector of a monomial.  Entry 0 (q) is in half-units.
using ExpVec = std::array<std::int32_t, kNumVars>;

inline constexpr ExpVec kZeroExp{};

inline ExpVec unit_exp(Var v, std::int32_t e) {
  ExpVec r{};
  r[static_cast<int>(v)] = e;
  return r;
}

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace qtrace
