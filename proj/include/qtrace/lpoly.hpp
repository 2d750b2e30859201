#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/vars.hpp"

namespace qtrace {

// Sparse multivariate Laurent polynomial over Q with the fixed variable set.
// Terms are kept in a std::map ordered lexicographically on the exponent
// vector; no zero coefficient is ever stored, so representation is canonical.
class LPoly {
 public:
  using Terms = std::map<ExpVec, Rat>;

  LPoly() = default;  // zero

  static LPoly constant(Rat c);
  static LPoly from_int(long n) { return constant(Rat(n)); }
  static LPoly monomial(Rat c, const ExpVec& e);
  // v^e (for v == Var::q the exponent is in half-units)
  static LPoly var_pow(Var v, std::int32_t e);
  // q^{h/2} with h in half-units, and q^e with integer e
  static LPoly q_pow_half(std::int32_t h) { return var_pow(Var::q, h); }
  static LPoly q_pow(std::int32_t e) { return var_pow(Var::q, 2 * e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Constant term (coefficient of the zero exponent vector).
  Rat constant_coeff() const;

  // Degree range of a variable over all terms; 0 on the zero polynomial.
  std::int32_t min_deg(Var v) const;
  std::int32_t max_deg(Var v) const;
  bool depends_on(Var v) const { return min_deg(v) != 0 || max_deg(v) != 0; }

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  friend LPoly operator+(LPoly a, const LPoly& b) { a += b; return a; }
  friend LPoly operator-(LPoly a, const LPoly& b) { a -= b; return a; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly& operator*=(const LPoly& o) { *this = *this * o; return *this; }
  LPoly& mul_monomial(const Rat& c, const ExpVec& e);
  LPoly& mul_scalar(const Rat& c);
  LPoly pow(unsigned n) const;

  bool operator==(const LPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  // Simultaneous substitution v -> c * x^e for every v in the map.  The
  // replacement must be a nonzero monomial; exponent vectors compose
  // additively, so Laurent exponents remain integral by construction.
  struct Mono {
    Rat coeff;
    ExpVec exp;
  };
  LPoly subst(const std::map<Var, Mono>& repl) const;

  // Negate all exponents of one variable (v -> v^{-1}).
  LPoly invert_var(Var v) const;

  // View as a polynomial in v: v-degree -> coefficient (v-exponent removed).
  std::map<std::int32_t, LPoly> collect(Var v) const;

  // Evaluate at a rational point; pt[q] is the value assigned to q^{1/2}.
  Rat eval(const std::array<Rat, kNumVars>& pt) const;

  // Leading term in the canonical order (largest exponent vector).
  // Pre: nonzero.
  const std::pair<const ExpVec, Rat>& leading() const;

  // gcd of all coefficient numerators divided by lcm of denominators,
  // signed so that leading coefficient divided by it is positive.
  // Pre: nonzero.
  Rat content() const;

  // Canonical text form; bit-exact round-trip with parse().
  std::string canonical() const;
  static LPoly parse(std::string_view s);

  // Human-readable rendering (q half-exponents printed as fractions).
  std::string pretty() const;

 private:
  Terms terms_;
  void add_term(const ExpVec& e, const Rat& c);
  friend class FracFn;
};

// [n]_q = (q^n - q^{-n})/(q - q^{-1}) expanded as a Laurent polynomial,
// valid for any integer n (odd under n -> -n).
LPoly qnum(long n);
// [n]_q! for n >= 0.
LPoly qfact(long n);

}  // namespace qtrace
