#include "qtrace/module.hpp"

#include <sstream>
#include <stdexcept>

namespace qtrace {

int Rep::max_weight() const {
  int m = weights.empty() ? 0 : weights[0];
  for (int w : weights) m = std::max(m, w);
  return m;
}

int Rep::min_weight() const {
  int m = weights.empty() ? 0 : weights[0];
  for (int w : weights) m = std::min(m, w);
  return m;
}

std::vector<int> Rep::zero_weight_indices() const {
  std::vector<int> r;
  for (int i = 0; i < dim(); ++i)
    if (weights[i] == 0) r.push_back(i);
  return r;
}

FdModule irrep(int n) {
  if (n < 0) throw std::domain_error("irrep: negative highest weight");
  FdModule v;
  v.name = "irrep" + std::to_string(n);
  int d = n + 1;
  v.weights.resize(d);
  v.E = FMatrix(d, d);
  v.F = FMatrix(d, d);
  v.K = FMatrix(d, d);
  for (int i = 0; i < d; ++i) {
    v.weights[i] = n - 2 * i;
    v.K(i, i) = FracFn::q_pow(n - 2 * i);
    if (i + 1 < d) v.F(i + 1, i) = FracFn::one();
    if (i >= 1) v.E(i - 1, i) = FracFn(qnum(i) * qnum(n - i + 1));
  }
  return v;
}

FdModule dual(const FdModule& v) {
  FdModule d;
  d.name = "dual(" + v.name + ")";
  int n = v.dim();
  auto p = [&](int j) { return n - 1 - j; };
  d.weights.resize(n);
  for (int j = 0; j < n; ++j) d.weights[j] = -v.weights[p(j)];

  FMatrix kinv(n, n);
  for (int i = 0; i < n; ++i) kinv(i, i) = v.K(i, i).inv();
  FMatrix SE = (v.E * kinv).scaled(-FracFn::one());  // S(E) = -E q^{-h}
  FMatrix SF = (v.K * v.F).scaled(-FracFn::one());   // S(F) = -q^{h} F

  d.E = FMatrix(n, n);
  d.F = FMatrix(n, n);
  d.K = FMatrix(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      d.E(k, j) = SE(p(j), p(k));
      d.F(k, j) = SF(p(j), p(k));
    }
  for (int j = 0; j < n; ++j) d.K(j, j) = v.K(p(j), p(j)).inv();
  return d;
}

bool check_relations(const Rep& v) {
  int n = v.dim();
  FMatrix kinv(n, n);
  for (int i = 0; i < n; ++i) kinv(i, i) = v.K(i, i).inv();
  FMatrix lhs = v.K * v.E * kinv - v.E.scaled(FracFn::q_pow(2));
  if (!lhs.is_zero()) return false;
  lhs = v.K * v.F * kinv - v.F.scaled(FracFn::q_pow(-2));
  if (!lhs.is_zero()) return false;
  FracFn qden = FracFn(LPoly::q_pow(1) - LPoly::q_pow(-1));
  FMatrix rhs = (v.K - kinv).scaled(qden.inv());
  lhs = v.E * v.F - v.F * v.E - rhs;
  return lhs.is_zero();
}

int TensorSpace::subset_weight(int basis, const std::vector<int>& ks) const {
  int w = 0;
  for (int k : ks) w += comp_weight(basis, k);
  return w;
}

std::string TensorSpace::name() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "(x)";
    os << factors[i].name;
  }
  return os.str();
}

TensorSpace make_tensor(std::vector<FdModule> factors) {
  if (factors.empty()) throw std::invalid_argument("make_tensor: empty factor list");
  TensorSpace s;
  s.factors = std::move(factors);
  int dim = 1;
  for (const auto& f : s.factors) dim *= f.dim();
  s.multi.resize(dim);
  s.rep.weights.resize(dim);
  for (int b = 0; b < dim; ++b) {
    int rem = b;
    int nf = static_cast<int>(s.factors.size());
    std::vector<int> idx(nf);
    for (int k = nf - 1; k >= 0; --k) {
      idx[k] = rem % s.factors[k].dim();
      rem /= s.factors[k].dim();
    }
    int w = 0;
    for (int k = 0; k < nf; ++k) w += s.factors[k].weights[idx[k]];
    s.multi[b] = std::move(idx);
    s.rep.weights[b] = w;
  }
  // iterated coproduct
  s.rep.E = FMatrix(dim, dim);
  s.rep.F = FMatrix(dim, dim);
  s.rep.K = FMatrix::identity(1);
  int nf = static_cast<int>(s.factors.size());
  for (int j = 0; j < nf; ++j) {
    FMatrix terme = FMatrix::identity(1);
    FMatrix termf = FMatrix::identity(1);
    for (int k = 0; k < nf; ++k) {
      const FdModule& f = s.factors[k];
      FMatrix kinv(f.dim(), f.dim());
      for (int i = 0; i < f.dim(); ++i) kinv(i, i) = f.K(i, i).inv();
      const FMatrix& epart = (k < j) ? FMatrix::identity(f.dim()) : (k == j ? f.E : f.K);
      const FMatrix& fpart = (k < j) ? kinv : (k == j ? f.F : FMatrix::identity(f.dim()));
      terme = FMatrix::kron(terme, epart);
      termf = FMatrix::kron(termf, fpart);
    }
    s.rep.E = (j == 0) ? terme : s.rep.E + terme;
    s.rep.F = (j == 0) ? termf : s.rep.F + termf;
  }
  for (int k = 0; k < nf; ++k) s.rep.K = FMatrix::kron(s.rep.K, s.factors[k].K);
  return s;
}

FMatrix factor_op(const TensorSpace& s, int k, const FMatrix& x) {
  FMatrix r = FMatrix::identity(1);
  for (int i = 0; i < s.nfactors(); ++i) {
    r = FMatrix::kron(r, i == k ? x : FMatrix::identity(s.factors[i].dim()));
  }
  return r;
}

FMatrix cartan_half(const std::vector<int>& wa, const std::vector<int>& wb) {
  int na = static_cast<int>(wa.size()), nb = static_cast<int>(wb.size());
  FMatrix r(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int idx = i * nb + j;
      r(idx, idx) = FracFn::q_pow_half(wa[i] * wb[j]);
    }
  return r;
}

}  // namespace qtrace
