#include "qtrace/lpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qtrace {

LPoly LPoly::constant(Rat c) {
  LPoly p;
  if (c != 0) p.terms_.emplace(kZeroExp, std::move(c));
  return p;
}

LPoly LPoly::monomial(Rat c, const ExpVec& e) {
  LPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

LPoly LPoly::var_pow(Var v, std::int32_t e) { return monomial(Rat(1), unit_exp(v, e)); }

bool LPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == kZeroExp;
}

bool LPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == kZeroExp && terms_.begin()->second == 1;
}

Rat LPoly::constant_coeff() const {
  auto it = terms_.find(kZeroExp);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::int32_t LPoly::min_deg(Var v) const {
  const int i = static_cast<int>(v);
  std::int32_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

std::int32_t LPoly::max_deg(Var v) const {
  const int i = static_cast<int>(v);
  std::int32_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] > m) m = e[i];
    first = false;
  }
  return m;
}

void LPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // multiply the smaller into the larger
  const LPoly& s = a.term_count() <= b.term_count() ? a : b;
  const LPoly& l = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [es, cs] : s.terms_) {
    for (const auto& [el, cl] : l.terms_) {
      r.add_term(es + el, cs * cl);
    }
  }
  return r;
}

LPoly& LPoly::mul_monomial(const Rat& c, const ExpVec& e) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Terms out;
  for (auto& [te, tc] : terms_) out.emplace_hint(out.end(), te + e, tc * c);
  terms_ = std::move(out);
  return *this;
}

LPoly& LPoly::mul_scalar(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, tc] : terms_) tc *= c;
  return *this;
}

LPoly LPoly::pow(unsigned n) const {
  LPoly acc = LPoly::from_int(1);
  LPoly base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

LPoly LPoly::subst(const std::map<Var, Mono>& repl) const {
  for (const auto& [v, m] : repl) {
    (void)v;
    if (m.coeff == 0) throw std::invalid_argument("LPoly::subst: zero monomial");
  }
  LPoly r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    Rat nc = c;
    for (const auto& [v, m] : repl) {
      const int i = static_cast<int>(v);
      std::int32_t ei = e[i];
      if (ei == 0) continue;
      ne[i] -= ei;  // remove v^ei, then splice in the replacement
      for (int k = 0; k < kNumVars; ++k) ne[k] += m.exp[k] * ei;
      if (m.coeff != 1) nc *= rat_pow(m.coeff, ei);
    }
    r.add_term(ne, nc);
  }
  return r;
}

LPoly LPoly::invert_var(Var v) const {
  const int i = static_cast<int>(v);
  LPoly r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[i] = -ne[i];
    r.add_term(ne, c);
  }
  return r;
}

std::map<std::int32_t, LPoly> LPoly::collect(Var v) const {
  const int i = static_cast<int>(v);
  std::map<std::int32_t, LPoly> r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[i] = 0;
    r[e[i]].add_term(ne, c);
  }
  return r;
}

Rat LPoly::eval(const std::array<Rat, kNumVars>& pt) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] != 0) t *= rat_pow(pt[i], e[i]);
    }
    acc += t;
  }
  return acc;
}

const std::pair<const ExpVec, Rat>& LPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("LPoly::leading on zero");
  return *terms_.rbegin();
}

Rat LPoly::content() const {
  if (terms_.empty()) throw std::logic_error("LPoly::content on zero");
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading().second < 0) content = -content;
  return content;
}

std::string LPoly::canonical() const {
  // {e0 e1 ... e12: c; e0 ... e12: c; ...} with terms in map order
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "; ";
    first = false;
    for (int i = 0; i < kNumVars; ++i) {
      if (i) os << ' ';
      os << e[i];
    }
    os << ": " << rat_str(c);
  }
  os << '}';
  return os.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
}

long parse_int(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw std::invalid_argument("LPoly::parse: expected integer");
  return std::stol(std::string(s.substr(start, i - start)));
}

}  // namespace

LPoly LPoly::parse(std::string_view s) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '{') throw std::invalid_argument("LPoly::parse: expected '{'");
  ++i;
  LPoly p;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '}') return p;
  while (true) {
    ExpVec e{};
    for (int k = 0; k < kNumVars; ++k) e[k] = static_cast<std::int32_t>(parse_int(s, i));
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ':') throw std::invalid_argument("LPoly::parse: expected ':'");
    ++i;
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && s[i] != ';' && s[i] != '}') ++i;
    std::string coeff(s.substr(start, i - start));
    while (!coeff.empty() && coeff.back() == ' ') coeff.pop_back();
    p.add_term(e, rat_parse(coeff));
    if (i >= s.size()) throw std::invalid_argument("LPoly::parse: unterminated");
    if (s[i] == '}') break;
    ++i;  // ';'
  }
  return p;
}

std::string LPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1) {
      os << rat_str(a);
      printed = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << '*';
      os << kVarNames[i];
      if (i == static_cast<int>(Var::q)) {
        if (e[i] != 2) {
          if (e[i] % 2 == 0)
            os << '^' << e[i] / 2;
          else
            os << "^(" << e[i] << "/2)";
        }
      } else if (e[i] != 1) {
        os << '^' << e[i];
      }
      printed = true;
    }
    if (!printed) os << rat_str(a);
  }
  return os.str();
}

LPoly qnum(long n) {
  if (n < 0) return -qnum(-n);
  LPoly r;
  // q^{n-1} + q^{n-3} + ... + q^{1-n}
  for (long k = n - 1; k >= 1 - n; k -= 2) r += LPoly::q_pow(static_cast<std::int32_t>(k));
  return r;
}

LPoly qfact(long n) {
  LPoly r = LPoly::from_int(1);
  for (long k = 2; k <= n; ++k) r *= qnum(k);
  return r;
}

}  // namespace qtrace
