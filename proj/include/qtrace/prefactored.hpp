#pragma once

#include <variant>

#include "qtrace/series.hpp"

namespace qtrace {

struct ConventionError : std::domain_error {
  explicit ConventionError(const std::string& what) : std::domain_error(what) {}
};

// q^{c * lambda * mu} times a body that is either an exact rational function
// of (q, xi, y) or a truncated xi-series with (q, y)-rational coefficients.
// All lambda-linear exponents live in xi-powers of the body and all mu-linear
// exponents in y-powers, so c is the only prefactor datum.
class PrefFn {
 public:
  PrefFn() : c_(0), body_(FracFn()) {}
  PrefFn(Rat c, FracFn body) : c_(std::move(c)), body_(std::move(body)) {}
  PrefFn(Rat c, XiSeries body) : c_(std::move(c)), body_(std::move(body)) {}

  const Rat& c() const { return c_; }
  bool is_series() const { return std::holds_alternative<XiSeries>(body_); }
  const FracFn& frac() const { return std::get<FracFn>(body_); }
  const XiSeries& series() const { return std::get<XiSeries>(body_); }

  // expand a rational body through xi^hi (no-op prefactor)
  PrefFn expanded(int hi) const {
    return is_series() ? PrefFn(c_, series().truncated(hi)) : PrefFn(c_, XiSeries::expand(frac(), hi));
  }

  bool is_zero() const { return is_series() ? series().is_zero() : frac().is_zero(); }

  // lambda -> lambda + k:  xi -> q^{-k} xi, zeta -> q^{2k} zeta, body *= y^{c k}
  PrefFn shift_lambda(const Rat& k) const;
  // mu -> mu + k:  y -> q^{k} y, body *= xi^{-c k}
  PrefFn shift_mu(const Rat& k) const;
  // mu -> -mu - rho (rho = 1):  y -> q^{-1} y^{-1}, c -> -c, body *= xi^{c}
  PrefFn subst_mu_neg_rho() const;
  // simultaneous q -> q^{-1}, lambda -> -lambda: xi fixed, y -> y^{-1},
  // explicit q-exponents negated, prefactor unchanged   (rational body only)
  PrefFn q_inverse_lambda_neg() const;
  // lambda <-> mu swap: xi -> y^{-1}, y -> xi^{-1}     (rational body only)
  PrefFn swap_lambda_mu() const;

  PrefFn operator-() const;
  friend PrefFn operator+(const PrefFn& a, const PrefFn& b);
  friend PrefFn operator-(const PrefFn& a, const PrefFn& b);
  friend PrefFn operator*(const PrefFn& a, const PrefFn& b);
  PrefFn scaled(const FracFn& f) const;

  // equality: equal prefactor exponents and equal bodies (frac_eq for
  // rational bodies, window agreement for series)
  bool eq(const PrefFn& o) const;

  std::string pretty() const;

 private:
  Rat c_;
  std::variant<FracFn, XiSeries> body_;

  static void require_int(const Rat& r, const char* what) {
    if (!is_integer(r)) throw ConventionError(std::string("non-Laurent substitution: ") + what);
  }
};

}  // namespace qtrace
