#pragma once

#include <string>

#include "qtrace/lpoly.hpp"

namespace qtrace {

// Rational function num/den over the fixed variable set.  Fractions are kept
// unreduced: normalization only strips the common monomial of num and den,
// scales den to integer content 1 with positive leading coefficient, and
// canonicalizes 0 to 0/1.  Equality is decided by cross-multiplication, so no
// multivariate gcd is ever required.
class FracFn {
 public:
  FracFn() : num_(), den_(LPoly::from_int(1)) {}
  explicit FracFn(LPoly n) : num_(std::move(n)), den_(LPoly::from_int(1)) { normalize(); }
  FracFn(LPoly n, LPoly d);

  static FracFn one() { return FracFn(LPoly::from_int(1)); }
  static FracFn from_int(long n) { return FracFn(LPoly::from_int(n)); }
  static FracFn from_rat(Rat r) { return FracFn(LPoly::constant(std::move(r))); }
  static FracFn var_pow(Var v, std::int32_t e);
  static FracFn q_pow_half(std::int32_t h) { return FracFn(LPoly::q_pow_half(h)); }
  static FracFn q_pow(std::int32_t e) { return FracFn(LPoly::q_pow(e)); }

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool den_is_one() const { return den_.is_one(); }

  FracFn operator-() const;
  friend FracFn operator+(const FracFn& a, const FracFn& b);
  friend FracFn operator-(const FracFn& a, const FracFn& b);
  friend FracFn operator*(const FracFn& a, const FracFn& b);
  friend FracFn operator/(const FracFn& a, const FracFn& b);
  FracFn& operator+=(const FracFn& o) { return *this = *this + o; }
  FracFn& operator-=(const FracFn& o) { return *this = *this - o; }
  FracFn& operator*=(const FracFn& o) { return *this = *this * o; }
  FracFn& operator/=(const FracFn& o) { return *this = *this / o; }

  FracFn inv() const;
  FracFn pow(long e) const;  // negative exponents allowed for nonzero values

  // Exact equality as rational functions: num*o.den == o.num*den as LPoly.
  bool eq(const FracFn& o) const;

  // Structural identity of the normalized representation (used for the
  // equal-denominator fast path and canonical serialization tests).
  bool operator==(const FracFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  FracFn subst(const std::map<Var, LPoly::Mono>& repl) const;
  FracFn invert_var(Var v) const { return FracFn(num_.invert_var(v), den_.invert_var(v)); }

  // Substitute a whole Laurent polynomial for a variable.  Requires the
  // variable to occur with bounded exponents; negative exponents of v demand
  // value != 0 and are handled by clearing with value^k.
  FracFn subst_poly(Var v, const FracFn& value) const;

  // Evaluate at a rational point (pt[q] = value of q^{1/2});
  // std::nullopt if the denominator vanishes there.
  std::optional<Rat> eval(const std::array<Rat, kNumVars>& pt) const;

  std::string canonical() const;
  static FracFn parse(std::string_view s);
  std::string pretty() const;

 private:
  LPoly num_, den_;
  void normalize();
};

// frac_eq of the specification.
inline bool frac_eq(const FracFn& a, const FracFn& b) { return a.eq(b); }

// Gaussian binomial (k choose l)_p in the variable `base` (Eq.-7.9 shape
// prod_{i=k-l+1..k}(1-p^i) / prod_{i=1..l}(1-p^i), returned after exact
// cancellation so den == 1).  Domain error unless 0 <= l <= k.
FracFn qbinom_p(long k, long l, Var base = Var::eta);

}  // namespace qtrace
