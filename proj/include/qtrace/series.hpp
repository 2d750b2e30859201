#pragma once

#include <functional>
#include <stdexcept>

#include "qtrace/fracfn.hpp"

namespace qtrace {

struct IrregularAtInfinity : std::domain_error {
  IrregularAtInfinity() : std::domain_error("series_expand: denominator vanishes at xi=0") {}
};

// Truncated Laurent series in xi = q^{-lambda}.  Coefficients are rational in
// the remaining variables (in the trace pipeline: q and y).  The window
// [lo, hi] is the exactness contract: coefficients below lo are exactly zero,
// coefficients in [lo, hi] are exact, nothing is claimed above hi.
class XiSeries {
 public:
  XiSeries() : lo_(0), hi_(-1) {}
  XiSeries(int lo, int hi) : lo_(lo), hi_(hi) {}

  static XiSeries zero(int lo, int hi) { return XiSeries(lo, hi); }
  static XiSeries constant(const FracFn& c, int hi);

  // Geometric-series expansion of a rational function of xi through xi^hi.
  // Pre: den, viewed as a Laurent polynomial in xi after normalization, has
  // a nonvanishing xi^0 part; otherwise IrregularAtInfinity is thrown.
  static XiSeries expand(const FracFn& f, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool window_empty() const { return hi_ < lo_; }

  FracFn coeff(int d) const;
  void set_coeff(int d, FracFn f);

  bool is_zero() const;  // all windowed coefficients vanish

  XiSeries operator-() const;
  friend XiSeries operator+(const XiSeries& a, const XiSeries& b);
  friend XiSeries operator-(const XiSeries& a, const XiSeries& b);
  friend XiSeries operator*(const XiSeries& a, const XiSeries& b);
  XiSeries& operator+=(const XiSeries& o) { return *this = *this + o; }
  XiSeries& operator-=(const XiSeries& o) { return *this = *this - o; }

  XiSeries scaled(const FracFn& c) const;  // c must be xi-free
  // multiply by a Laurent polynomial in xi given as degree -> coefficient
  XiSeries mul_laurent(const std::map<int, FracFn>& p) const;
  XiSeries shifted(int s) const;  // multiply by xi^s
  XiSeries truncated(int new_hi) const;

  // apply fn to every coefficient; fn receives (degree, coeff)
  XiSeries mapped(const std::function<FracFn(int, const FracFn&)>& fn) const;

  // true iff the two series agree on the intersection of their windows
  bool eq_on_common_window(const XiSeries& o) const;
  // the order through which agreement was checked (min of the two hi's)
  int common_hi(const XiSeries& o) const { return std::min(hi_, o.hi_); }

  std::string pretty(int max_terms = 6) const;

 private:
  int lo_, hi_;
  std::map<int, FracFn> c_;
};

}  // namespace qtrace
