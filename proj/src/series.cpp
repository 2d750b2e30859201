#include "qtrace/series.hpp"

#include <sstream>

namespace qtrace {

XiSeries XiSeries::constant(const FracFn& c, int hi) {
  XiSeries s(0, hi);
  s.set_coeff(0, c);
  return s;
}

FracFn XiSeries::coeff(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? FracFn() : it->second;
}

void XiSeries::set_coeff(int d, FracFn f) {
  if (d < lo_ || d > hi_) throw std::out_of_range("XiSeries::set_coeff outside window");
  if (f.is_zero())
    c_.erase(d);
  else
    c_[d] = std::move(f);
}

bool XiSeries::is_zero() const {
  for (const auto& [d, f] : c_)
    if (!f.is_zero()) return false;
  return true;
}

XiSeries XiSeries::expand(const FracFn& f, int hi) {
  if (f.is_zero()) return XiSeries(0, hi);
  auto den_parts = f.den().collect(Var::xi);
  if (den_parts.begin()->first != 0) throw IrregularAtInfinity();
  const LPoly c0 = den_parts.begin()->second;
  auto num_parts = f.num().collect(Var::xi);
  const int jmin = num_parts.begin()->first;

  XiSeries out(jmin, hi);
  if (hi < jmin) return out;

  // inverse-series numerators P_d with 1/den = sum_d P_d / c0^{d+1} xi^d
  const int need = hi - jmin;
  std::vector<LPoly> P(static_cast<std::size_t>(need) + 1);
  std::vector<LPoly> c0pow(static_cast<std::size_t>(need) + 2);
  c0pow[0] = LPoly::from_int(1);
  for (int i = 1; i <= need + 1; ++i) c0pow[static_cast<std::size_t>(i)] = c0pow[static_cast<std::size_t>(i - 1)] * c0;
  P[0] = LPoly::from_int(1);
  for (int d = 1; d <= need; ++d) {
    LPoly acc;
    for (const auto& [k, ck] : den_parts) {
      if (k == 0 || k > d) continue;
      acc += ck * P[static_cast<std::size_t>(d - k)] * c0pow[static_cast<std::size_t>(k - 1)];
    }
    P[static_cast<std::size_t>(d)] = -acc;
  }

  for (int n = jmin; n <= hi; ++n) {
    LPoly numer;
    for (const auto& [j, aj] : num_parts) {
      int d = n - j;
      if (d < 0 || d > need) continue;
      numer += aj * P[static_cast<std::size_t>(d)] * c0pow[static_cast<std::size_t>(j - jmin)];
    }
    if (!numer.is_zero()) out.set_coeff(n, FracFn(numer, c0pow[static_cast<std::size_t>(n - jmin) + 1]));
  }
  return out;
}

XiSeries XiSeries::operator-() const {
  XiSeries r = *this;
  for (auto& [d, f] : r.c_) f = -f;
  return r;
}

XiSeries operator+(const XiSeries& a, const XiSeries& b) {
  XiSeries r(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
  for (int d = r.lo_; d <= r.hi_; ++d) {
    FracFn f = a.coeff(d) + b.coeff(d);
    if (!f.is_zero()) r.c_[d] = std::move(f);
  }
  return r;
}

XiSeries operator-(const XiSeries& a, const XiSeries& b) {
  XiSeries r(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
  for (int d = r.lo_; d <= r.hi_; ++d) {
    FracFn f = a.coeff(d) - b.coeff(d);
    if (!f.is_zero()) r.c_[d] = std::move(f);
  }
  return r;
}

XiSeries operator*(const XiSeries& a, const XiSeries& b) {
  XiSeries r(a.lo_ + b.lo_, std::min(a.hi_ + b.lo_, b.hi_ + a.lo_));
  for (const auto& [da, fa] : a.c_) {
    if (fa.is_zero()) continue;
    for (const auto& [db, fb] : b.c_) {
      int d = da + db;
      if (d < r.lo_ || d > r.hi_) continue;
      FracFn t = fa * fb;
      auto it = r.c_.find(d);
      if (it == r.c_.end())
        r.c_.emplace(d, std::move(t));
      else
        it->second += t;
    }
  }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second.is_zero())
      it = r.c_.erase(it);
    else
      ++it;
  }
  return r;
}

XiSeries XiSeries::scaled(const FracFn& c) const {
  XiSeries r(lo_, hi_);
  if (c.is_zero()) return r;
  for (const auto& [d, f] : c_) r.c_[d] = f * c;
  return r;
}

XiSeries XiSeries::mul_laurent(const std::map<int, FracFn>& p) const {
  if (p.empty()) return XiSeries(lo_, hi_);
  int pmin = p.begin()->first;
  XiSeries r(lo_ + pmin, hi_ + pmin);
  for (const auto& [dp, fp] : p) {
    if (fp.is_zero()) continue;
    for (const auto& [d, f] : c_) {
      int n = d + dp;
      if (n < r.lo_ || n > r.hi_) continue;
      FracFn t = f * fp;
      auto it = r.c_.find(n);
      if (it == r.c_.end())
        r.c_.emplace(n, std::move(t));
      else
        it->second += t;
    }
  }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second.is_zero())
      it = r.c_.erase(it);
    else
      ++it;
  }
  return r;
}

XiSeries XiSeries::shifted(int s) const {
  XiSeries r(lo_ + s, hi_ + s);
  for (const auto& [d, f] : c_) r.c_[d + s] = f;
  return r;
}

XiSeries XiSeries::truncated(int new_hi) const {
  XiSeries r(lo_, std::min(hi_, new_hi));
  for (const auto& [d, f] : c_)
    if (d <= r.hi_) r.c_[d] = f;
  return r;
}

XiSeries XiSeries::mapped(const std::function<FracFn(int, const FracFn&)>& fn) const {
  XiSeries r(lo_, hi_);
  for (const auto& [d, f] : c_) {
    FracFn g = fn(d, f);
    if (!g.is_zero()) r.c_[d] = std::move(g);
  }
  return r;
}

bool XiSeries::eq_on_common_window(const XiSeries& o) const {
  int lo = std::min(lo_, o.lo_);
  int hi = std::min(hi_, o.hi_);
  for (int d = lo; d <= hi; ++d) {
    if (!coeff(d).eq(o.coeff(d))) return false;
  }
  return true;
}

std::string XiSeries::pretty(int max_terms) const {
  std::ostringstream os;
  os << "O-window[" << lo_ << "," << hi_ << "]: ";
  int n = 0;
  for (const auto& [d, f] : c_) {
    if (n++ >= max_terms) {
      os << "+ ...";
      break;
    }
    os << "(" << f.pretty() << ")*xi^" << d << " ";
  }
  return os.str();
}

}  // namespace qtrace
