#include "qtrace/rmatrix.hpp"

#include <stdexcept>
#include <vector>

namespace qtrace {

namespace {

std::vector<FracFn> g_rcoeffs = {FracFn::one()};  // c_0 = 1

FMatrix matpow(const FMatrix& m, int n) {
  FMatrix r = FMatrix::identity(m.rows());
  for (int i = 0; i < n; ++i) r = r * m;
  return r;
}

// Solve for c_1..c_K on irrep(K) (x) irrep(K).
void solve_coeffs(int K) {
  FdModule v = irrep(K);
  int d = v.dim();
  FMatrix kinv(d, d);
  for (int i = 0; i < d; ++i) kinv(i, i) = v.K(i, i).inv();
  FMatrix id = FMatrix::identity(d);

  FMatrix dE = FMatrix::kron(v.E, v.K) + FMatrix::kron(id, v.E);
  FMatrix opE = FMatrix::kron(v.K, v.E) + FMatrix::kron(v.E, id);
  FMatrix dF = FMatrix::kron(v.F, id) + FMatrix::kron(kinv, v.F);
  FMatrix opF = FMatrix::kron(id, v.F) + FMatrix::kron(v.F, kinv);
  FMatrix cart = cartan_half(v.weights, v.weights);

  std::vector<FMatrix> T(static_cast<std::size_t>(K) + 1);
  for (int n = 0; n <= K; ++n) T[n] = cart * FMatrix::kron(matpow(v.E, n), matpow(v.F, n));

  // rows of the linear system sum_{n>=1} c_n * M_n[e] = -M_0[e]
  std::vector<std::vector<FracFn>> rows;  // length K+1, last = rhs
  auto harvest = [&](const FMatrix& dx, const FMatrix& ox) {
    std::vector<FMatrix> M(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n) M[n] = T[n] * dx - ox * T[n];
    int dd = d * d;
    for (int r = 0; r < dd; ++r)
      for (int c = 0; c < dd; ++c) {
        std::vector<FracFn> row(static_cast<std::size_t>(K) + 1);
        bool nz = false;
        for (int n = 1; n <= K; ++n) {
          row[n - 1] = M[n](r, c);
          nz = nz || !row[n - 1].is_zero();
        }
        row[K] = -M[0](r, c);
        if (nz || !row[K].is_zero()) rows.push_back(std::move(row));
      }
  };
  harvest(dE, opE);
  harvest(dF, opF);

  // Gaussian elimination over the fraction field
  std::vector<std::vector<FracFn>> pivots(static_cast<std::size_t>(K));
  std::vector<bool> have(static_cast<std::size_t>(K), false);
  for (auto& row : rows) {
    for (int col = 0; col < K; ++col) {
      if (row[col].is_zero()) continue;
      if (have[col]) {
        FracFn f = row[col];
        for (int j = col; j <= K; ++j) row[j] -= f * pivots[col][j];
        if (!row[col].is_zero()) throw std::logic_error("universal R solve: elimination failure");
      } else {
        FracFn p = row[col].inv();
        for (int j = col; j <= K; ++j) row[j] *= p;
        pivots[col] = row;
        have[col] = true;
        break;
      }
    }
  }
  for (int col = 0; col < K; ++col)
    if (!have[col]) throw std::logic_error("universal R solve: underdetermined system");
  // back-substitute
  std::vector<FracFn> c(static_cast<std::size_t>(K));
  for (int col = K - 1; col >= 0; --col) {
    FracFn val = pivots[col][K];
    for (int j = col + 1; j < K; ++j) val -= pivots[col][j] * c[j];
    c[col] = val;
  }
  // verify the full intertwining identities
  FMatrix R = T[0];
  for (int n = 1; n <= K; ++n) R = R + T[n].scaled(c[n - 1]);
  if (!(R * dE).eq(opE * R) || !(R * dF).eq(opF * R))
    throw std::logic_error("universal R solve: no consistent triangular solution (convention error)");

  // consistency with previously solved prefix
  for (std::size_t n = 1; n < g_rcoeffs.size() && n <= static_cast<std::size_t>(K); ++n) {
    if (!g_rcoeffs[n].eq(c[n - 1])) throw std::logic_error("universal R solve: prefix mismatch");
  }
  g_rcoeffs.resize(1);
  for (int n = 1; n <= K; ++n) g_rcoeffs.push_back(c[n - 1]);
}

int nilpotency(const FMatrix& e) {
  // largest n with e^n != 0
  FMatrix p = e;
  int n = 0;
  while (!p.is_zero()) {
    ++n;
    p = p * e;
    if (n > p.rows() + 1) throw std::logic_error("nilpotency: not nilpotent");
  }
  return n;
}

}  // namespace

const FracFn& universal_r_coeff(int n) {
  if (n < 0) throw std::domain_error("universal_r_coeff: negative index");
  if (static_cast<std::size_t>(n) >= g_rcoeffs.size()) solve_coeffs(n);
  return g_rcoeffs[static_cast<std::size_t>(n)];
}

FMatrix universal_R(const Rep& a, const Rep& b) {
  int nmax = std::min(nilpotency(a.E), nilpotency(b.F));
  FMatrix acc = FMatrix::identity(a.dim() * b.dim());
  FMatrix ea = a.E, fb = b.F;
  FMatrix ean = FMatrix::identity(a.dim()), fbn = FMatrix::identity(b.dim());
  for (int n = 1; n <= nmax; ++n) {
    ean = ean * ea;
    fbn = fbn * fb;
    acc = acc + FMatrix::kron(ean, fbn).scaled(universal_r_coeff(n));
  }
  return cartan_half(a.weights, b.weights) * acc;
}

FMatrix universal_R21(const Rep& a, const Rep& b) {
  int nmax = std::min(nilpotency(a.F), nilpotency(b.E));
  FMatrix acc = FMatrix::identity(a.dim() * b.dim());
  FMatrix fan = FMatrix::identity(a.dim()), ebn = FMatrix::identity(b.dim());
  for (int n = 1; n <= nmax; ++n) {
    fan = fan * a.F;
    ebn = ebn * b.E;
    acc = acc + FMatrix::kron(fan, ebn).scaled(universal_r_coeff(n));
  }
  return cartan_half(a.weights, b.weights) * acc;
}

FMatrix drinfeld_u(const Rep& a) {
  int d = a.dim();
  FMatrix sf = (a.K * a.F).scaled(-FracFn::one());  // S(F) = -q^h F
  int nmax = std::min(nilpotency(a.E), nilpotency(a.F));
  FMatrix u(d, d);
  FMatrix en = FMatrix::identity(d), sfn = FMatrix::identity(d);
  std::vector<int> wts;
  for (int w : a.weights) {
    bool seen = false;
    for (int x : wts) seen = seen || (x == w);
    if (!seen) wts.push_back(w);
  }
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) {
      en = a.E * en;
      sfn = sf * sfn;
    }
    // S(b) a = S(F)^n q^{-nu h/2} P_nu E^n, and q^{-nu h/2} restricted to
    // weight nu is the scalar q^{-nu^2/2}
    for (int nu : wts) {
      FMatrix term(d, d);
      bool nz = false;
      for (int r = 0; r < d; ++r) {
        if (a.weights[r] != nu) continue;
        for (int c2 = 0; c2 < d; ++c2) {
          if (en(r, c2).is_zero()) continue;
          term(r, c2) = en(r, c2);
          nz = true;
        }
      }
      if (!nz) continue;
      FracFn scal = universal_r_coeff(n) * FracFn::q_pow_half(-nu * nu);
      u = u + (sfn * term).scaled(scal);
    }
  }
  return u;
}

FMatrix drinfeld_Su(const Rep& a) {
  int d = a.dim();
  FMatrix kinv(d, d);
  for (int i = 0; i < d; ++i) kinv(i, i) = a.K(i, i).inv();
  FMatrix se = (a.E * kinv).scaled(-FracFn::one());  // S(E) = -E q^{-h}
  int nmax = std::min(nilpotency(a.E), nilpotency(a.F));
  FMatrix su(d, d);
  FMatrix fn = FMatrix::identity(d), sen = FMatrix::identity(d);
  std::vector<int> wts;
  for (int w : a.weights) {
    bool seen = false;
    for (int x : wts) seen = seen || (x == w);
    if (!seen) wts.push_back(w);
  }
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) {
      fn = a.F * fn;
      sen = se * sen;
    }
    for (int nu : wts) {
      // S(a) S^2(b) = S(E)^n P_{-nu} q^{-2n} q^{nu h/2} F^n;
      // q^{nu h/2} right after P_{-nu} is the scalar q^{-nu^2/2}
      FMatrix pfn(d, d);
      bool nz = false;
      for (int r = 0; r < d; ++r) {
        if (a.weights[r] != -nu) continue;
        for (int c2 = 0; c2 < d; ++c2) {
          if (fn(r, c2).is_zero()) continue;
          pfn(r, c2) = fn(r, c2);
          nz = true;
        }
      }
      if (!nz) continue;
      FracFn scal = universal_r_coeff(n) * FracFn::q_pow(-2 * n) * FracFn::q_pow_half(-nu * nu);
      su = su + (sen * pfn).scaled(scal);
    }
  }
  return su;
}

FracFn drinfeld_u_central_scalar(const FdModule& v) {
  FMatrix u = drinfeld_u(v);
  int d = v.dim();
  FMatrix kinv(d, d);
  for (int i = 0; i < d; ++i) kinv(i, i) = v.K(i, i).inv();
  FMatrix z = kinv * u;  // q^{-2 rho} u
  FracFn s = z(0, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const FracFn& want = (i == j) ? s : FracFn();
      if (!z(i, j).eq(want)) throw std::logic_error("drinfeld_u_central_scalar: q^{-2rho}u not scalar");
    }
  return s;
}

}  // namespace qtrace
