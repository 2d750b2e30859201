#include "qtrace/fracfn.hpp"

#include <sstream>
#include <stdexcept>

namespace qtrace {

FracFn::FracFn(LPoly n, LPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("FracFn: zero denominator");
  normalize();
}

void FracFn::normalize() {
  if (num_.is_zero()) {
    den_ = LPoly::from_int(1);
    return;
  }
  // strip the common monomial of num and den
  ExpVec shift{};
  bool any = false;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    std::int32_t m = std::min(num_.min_deg(v), den_.min_deg(v));
    shift[i] = -m;
    any = any || m != 0;
  }
  if (any) {
    num_.mul_monomial(Rat(1), shift);
    den_.mul_monomial(Rat(1), shift);
  }
  // scale so den has integer content 1 and positive leading coefficient
  Rat c = den_.content();
  if (c != 1) {
    Rat ic = Rat(1) / c;
    den_.mul_scalar(ic);
    num_.mul_scalar(ic);
  }
}

FracFn FracFn::var_pow(Var v, std::int32_t e) {
  if (e >= 0) return FracFn(LPoly::var_pow(v, e));
  return FracFn(LPoly::from_int(1), LPoly::var_pow(v, -e));
}

FracFn FracFn::operator-() const {
  FracFn r = *this;
  r.num_ = -r.num_;
  return r;
}

FracFn operator+(const FracFn& a, const FracFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FracFn r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

FracFn operator-(const FracFn& a, const FracFn& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  FracFn r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ - b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

FracFn operator*(const FracFn& a, const FracFn& b) {
  if (a.is_zero() || b.is_zero()) return FracFn();
  FracFn r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

FracFn operator/(const FracFn& a, const FracFn& b) {
  if (b.is_zero()) throw std::domain_error("FracFn: division by zero");
  if (a.is_zero()) return FracFn();
  FracFn r;
  r.num_ = a.num_ * b.den_;
  r.den_ = a.den_ * b.num_;
  r.normalize();
  return r;
}

FracFn FracFn::inv() const {
  if (is_zero()) throw std::domain_error("FracFn::inv of zero");
  FracFn r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

FracFn FracFn::pow(long e) const {
  if (e == 0) return FracFn::one();
  FracFn base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FracFn acc = FracFn::one();
  while (k) {
    if (k & 1) acc *= base;
    if (k >>= 1) base *= base;
  }
  return acc;
}

bool FracFn::eq(const FracFn& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

FracFn FracFn::subst(const std::map<Var, LPoly::Mono>& repl) const {
  return FracFn(num_.subst(repl), den_.subst(repl));
}

FracFn FracFn::subst_poly(Var v, const FracFn& value) const {
  auto apply = [&](const LPoly& p) {
    auto by_deg = p.collect(v);
    FracFn acc;
    for (const auto& [d, coeff] : by_deg) acc += FracFn(coeff) * value.pow(d);
    return acc;
  };
  FracFn n = apply(num_);
  FracFn d = apply(den_);
  return n / d;
}

std::optional<Rat> FracFn::eval(const std::array<Rat, kNumVars>& pt) const {
  Rat d = den_.eval(pt);
  if (d == 0) return std::nullopt;
  return num_.eval(pt) / d;
}

std::string FracFn::canonical() const {
  std::ostringstream os;
  os << num_.canonical() << " / " << den_.canonical();
  return os.str();
}

FracFn FracFn::parse(std::string_view s) {
  auto pos = s.find("} / {");
  if (pos == std::string_view::npos) throw std::invalid_argument("FracFn::parse: bad format");
  LPoly n = LPoly::parse(s.substr(0, pos + 1));
  LPoly d = LPoly::parse(s.substr(pos + 3));
  return FracFn(std::move(n), std::move(d));
}

std::string FracFn::pretty() const {
  if (den_.is_one()) return num_.pretty();
  return "(" + num_.pretty() + ") / (" + den_.pretty() + ")";
}

FracFn qbinom_p(long k, long l, Var base) {
  if (l < 0 || k < 0 || l > k) throw std::domain_error("qbinom_p: need 0 <= l <= k");
  LPoly num = LPoly::from_int(1);
  LPoly den = LPoly::from_int(1);
  LPoly one = LPoly::from_int(1);
  for (long i = k - l + 1; i <= k; ++i)
    num *= one - LPoly::var_pow(base, static_cast<std::int32_t>(i));
  for (long i = 1; i <= l; ++i)
    den *= one - LPoly::var_pow(base, static_cast<std::int32_t>(i));
  // exact cancellation: the Gaussian recurrence gives the polynomial form
  LPoly poly;
  {
    // (k,l)_p = sum over the standard recurrence; build row by row
    std::vector<LPoly> row(static_cast<std::size_t>(l) + 1);
    row[0] = LPoly::from_int(1);
    for (long kk = 1; kk <= k; ++kk) {
      long top = std::min(kk, l);
      for (long ll = top; ll >= 1; --ll) {
        // (kk,ll) = (kk-1,ll-1) + p^ll * (kk-1,ll)
        LPoly t = row[static_cast<std::size_t>(ll) - 1];
        if (ll < kk) {
          LPoly u = row[static_cast<std::size_t>(ll)];
          u.mul_monomial(Rat(1), unit_exp(base, static_cast<std::int32_t>(ll)));
          t += u;
        }
        row[static_cast<std::size_t>(ll)] = std::move(t);
      }
    }
    poly = row[static_cast<std::size_t>(l)];
  }
  FracFn ratio(num, den);
  if (!ratio.eq(FracFn(poly))) throw std::logic_error("qbinom_p: cancellation check failed");
  return FracFn(poly);
}

}  // namespace qtrace
