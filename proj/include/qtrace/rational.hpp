#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtrace {

// Arbitrary-precision rational.  mpq_class keeps gcd(|num|, den) = 1 and
// den > 0 after every operation, which is exactly the Ratio contract.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: overflow");
  return r.get_num().get_si();
}

// r^e for possibly negative e; r must be nonzero when e < 0.
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat base = r;
  if (neg) {
    if (base == 0) throw std::domain_error("rat_pow: 0^negative");
    base = Rat(1) / base;
  }
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace qtrace
