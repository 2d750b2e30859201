#include "qtrace/prefactored.hpp"

namespace qtrace {

namespace {

// q-exponent (in half-units) of q^{a*k} for rational a and integer k,
// rejecting non-Laurent results.
std::int32_t half_units(const Rat& a, long k, const char* what) {
  Rat h = a * Rat(2 * k);
  if (!is_integer(h)) throw ConventionError(std::string("non-Laurent substitution: ") + what);
  return static_cast<std::int32_t>(to_long(h));
}

}  // namespace

PrefFn PrefFn::shift_lambda(const Rat& k) const {
  // y^{c k} must stay Laurent in y
  Rat yk = c_ * k;
  require_int(yk, "shift_lambda needs integral c*k for the y-power");
  if (is_series()) {
    XiSeries s = series().mapped([&](int d, const FracFn& f) {
      return f * FracFn::q_pow_half(half_units(-k, d, "shift_lambda on series"));
    });
    s = s.scaled(FracFn::var_pow(Var::y, static_cast<std::int32_t>(to_long(yk))));
    return PrefFn(c_, std::move(s));
  }
  std::map<Var, LPoly::Mono> repl;
  Rat qh = Rat(-2) * k;  // q-half-units per unit xi exponent
  if (!is_integer(qh)) throw ConventionError("shift_lambda: non-Laurent xi substitution");
  repl[Var::xi] = {Rat(1), unit_exp(Var::q, static_cast<std::int32_t>(to_long(qh))) + unit_exp(Var::xi, 1)};
  Rat qh2 = Rat(4) * k;
  if (frac().num().depends_on(Var::zeta) || frac().den().depends_on(Var::zeta)) {
    if (!is_integer(qh2)) throw ConventionError("shift_lambda: non-Laurent zeta substitution");
    repl[Var::zeta] = {Rat(1), unit_exp(Var::q, static_cast<std::int32_t>(to_long(qh2))) + unit_exp(Var::zeta, 1)};
  }
  FracFn b = frac().subst(repl) * FracFn::var_pow(Var::y, static_cast<std::int32_t>(to_long(yk)));
  return PrefFn(c_, std::move(b));
}

PrefFn PrefFn::shift_mu(const Rat& k) const {
  Rat xk = -c_ * k;
  require_int(xk, "shift_mu needs integral c*k for the xi-power");
  int xs = static_cast<int>(to_long(xk));
  Rat qh = Rat(2) * k;
  if (!is_integer(qh)) throw ConventionError("shift_mu: non-Laurent y substitution");
  std::map<Var, LPoly::Mono> repl;
  repl[Var::y] = {Rat(1), unit_exp(Var::q, static_cast<std::int32_t>(to_long(qh))) + unit_exp(Var::y, 1)};
  if (is_series()) {
    XiSeries s = series().mapped([&](int, const FracFn& f) { return f.subst(repl); });
    return PrefFn(c_, s.shifted(xs));
  }
  FracFn b = frac().subst(repl);
  b = b * FracFn::var_pow(Var::xi, xs);
  return PrefFn(c_, std::move(b));
}

PrefFn PrefFn::subst_mu_neg_rho() const {
  Rat xk = c_;
  require_int(xk, "mu -> -mu-rho needs integral c");
  int xs = static_cast<int>(to_long(xk));
  std::map<Var, LPoly::Mono> repl;
  repl[Var::y] = {Rat(1), unit_exp(Var::q, -2) + unit_exp(Var::y, -1)};
  if (is_series()) {
    XiSeries s = series().mapped([&](int, const FracFn& f) { return f.subst(repl); });
    return PrefFn(-c_, s.shifted(xs));
  }
  FracFn b = frac().subst(repl) * FracFn::var_pow(Var::xi, xs);
  return PrefFn(-c_, std::move(b));
}

PrefFn PrefFn::q_inverse_lambda_neg() const {
  if (is_series()) throw ConventionError("q_inverse_lambda_neg needs a rational body");
  FracFn b = frac().invert_var(Var::q).invert_var(Var::y);
  return PrefFn(c_, std::move(b));
}

PrefFn PrefFn::swap_lambda_mu() const {
  if (is_series()) throw ConventionError("swap_lambda_mu needs a rational body");
  std::map<Var, LPoly::Mono> repl;
  repl[Var::xi] = {Rat(1), unit_exp(Var::y, -1)};
  repl[Var::y] = {Rat(1), unit_exp(Var::xi, -1)};
  return PrefFn(c_, frac().subst(repl));
}

PrefFn PrefFn::operator-() const {
  if (is_series()) return PrefFn(c_, -series());
  return PrefFn(c_, -frac());
}

PrefFn operator+(const PrefFn& a, const PrefFn& b) {
  if (a.c_ != b.c_) throw ConventionError("PrefFn addition with different prefactors");
  if (a.is_series() || b.is_series()) {
    XiSeries sa = a.is_series() ? a.series() : XiSeries::expand(a.frac(), b.series().hi());
    XiSeries sb = b.is_series() ? b.series() : XiSeries::expand(b.frac(), a.series().hi());
    return PrefFn(a.c_, sa + sb);
  }
  return PrefFn(a.c_, a.frac() + b.frac());
}

PrefFn operator-(const PrefFn& a, const PrefFn& b) { return a + (-b); }

PrefFn operator*(const PrefFn& a, const PrefFn& b) {
  Rat c = a.c_ + b.c_;
  if (a.is_series() || b.is_series()) {
    int hi = a.is_series() ? a.series().hi() : b.series().hi();
    XiSeries sa = a.is_series() ? a.series() : XiSeries::expand(a.frac(), hi);
    XiSeries sb = b.is_series() ? b.series() : XiSeries::expand(b.frac(), hi);
    return PrefFn(std::move(c), sa * sb);
  }
  return PrefFn(std::move(c), a.frac() * b.frac());
}

PrefFn PrefFn::scaled(const FracFn& f) const {
  if (is_series()) return PrefFn(c_, series().scaled(f));
  return PrefFn(c_, frac() * f);
}

bool PrefFn::eq(const PrefFn& o) const {
  if (c_ != o.c_) return false;
  if (is_series() != o.is_series()) {
    const PrefFn& s = is_series() ? *this : o;
    const PrefFn& r = is_series() ? o : *this;
    return s.series().eq_on_common_window(XiSeries::expand(r.frac(), s.series().hi()));
  }
  if (is_series()) return series().eq_on_common_window(o.series());
  return frac().eq(o.frac());
}

std::string PrefFn::pretty() const {
  std::string head = "q^{" + rat_str(c_) + " l*m} * ";
  return head + (is_series() ? series().pretty() : frac().pretty());
}

}  // namespace qtrace
