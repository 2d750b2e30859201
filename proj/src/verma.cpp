#include "qtrace/verma.hpp"

namespace qtrace {

FracFn qnum_mu(int a) {
  LPoly num = LPoly::monomial(Rat(1), unit_exp(Var::y, 1) + unit_exp(Var::q, 2 * a)) -
              LPoly::monomial(Rat(1), unit_exp(Var::y, -1) + unit_exp(Var::q, -2 * a));
  LPoly den = LPoly::q_pow(1) - LPoly::q_pow(-1);
  return FracFn(num, den);
}

FracFn qbinom_qm2(long k, long l) {
  FracFn b = qbinom_p(k, l, Var::eta);
  std::map<Var, LPoly::Mono> repl;
  repl[Var::eta] = {Rat(1), unit_exp(Var::q, -4)};  // p -> q^{-2}
  return b.subst(repl);
}

Intertwiner build_intertwiner(const Rep& v, int lead, int shift) {
  Intertwiner phi;
  phi.space = &v;
  phi.lead = lead;
  phi.lead_wt = v.weights[lead];
  phi.shift = shift;
  int jmax = (v.max_weight() - phi.lead_wt) / 2;
  phi.u.assign(static_cast<std::size_t>(jmax) + 1, std::vector<FracFn>(static_cast<std::size_t>(v.dim())));
  phi.u[0][lead] = FracFn::one();
  for (int j = 0; j < jmax; ++j) {
    // E u_j
    std::vector<FracFn> eu(static_cast<std::size_t>(v.dim()));
    bool nz = false;
    for (int r = 0; r < v.dim(); ++r) {
      FracFn acc;
      for (int c = 0; c < v.dim(); ++c) {
        if (phi.u[j][c].is_zero() || v.E(r, c).is_zero()) continue;
        acc += v.E(r, c) * phi.u[j][c];
      }
      nz = nz || !acc.is_zero();
      eu[r] = std::move(acc);
    }
    if (!nz) {
      phi.u.resize(static_cast<std::size_t>(j) + 1);
      break;
    }
    FracFn den = FracFn(qnum(j + 1)) * qnum_mu(shift - phi.lead_wt - j);
    if (den.is_zero()) throw NonGenericWeight("build_intertwiner: vanishing pivot");
    FracFn scal = -FracFn::q_pow(-(phi.lead_wt + 2 * j + 2)) / den;
    for (int r = 0; r < v.dim(); ++r) phi.u[j + 1][r] = eu[r] * scal;
  }
  return phi;
}

PhiImage apply_intertwiner(const Intertwiner& phi, int k, int max_deg) {
  // Phi(F^k v) = Delta(F^k) Phi(v)
  //            = sum_l (k choose l)_{q^{-2}} (q^{-lh} F^{k-l} (x) F^l) sum_j F^j v'' (x) u_j
  // where v'' is the highest vector of the target Verma of weight mu+s-wt(v).
  const Rep& V = *phi.space;
  int s2 = phi.shift - phi.lead_wt;  // target Verma weight shift
  PhiImage out;

  // F^l u_j per l
  std::vector<std::vector<std::vector<FracFn>>> flu(1);
  flu[0].resize(phi.u.size());
  for (std::size_t j = 0; j < phi.u.size(); ++j) flu[0][j] = phi.u[j];
  for (int l = 1; l <= k; ++l) {
    flu.push_back(flu.back());
    for (std::size_t j = 0; j < phi.u.size(); ++j) {
      std::vector<FracFn> nxt(static_cast<std::size_t>(V.dim()));
      for (int r = 0; r < V.dim(); ++r) {
        FracFn acc;
        for (int c = 0; c < V.dim(); ++c) {
          if (V.F(r, c).is_zero() || flu[l - 1][j][static_cast<std::size_t>(c)].is_zero()) continue;
          acc += V.F(r, c) * flu[l - 1][j][static_cast<std::size_t>(c)];
        }
        nxt[static_cast<std::size_t>(r)] = std::move(acc);
      }
      flu[static_cast<std::size_t>(l)][j] = std::move(nxt);
    }
  }

  for (int l = 0; l <= k; ++l) {
    FracFn binom = qbinom_qm2(k, l);
    for (std::size_t j = 0; j < phi.u.size(); ++j) {
      int deg = k - l + static_cast<int>(j);
      if (deg > max_deg) continue;
      // q^{-lh} on F^{k-l+j} v'' of weight mu + s2 - 2 deg:
      // y^{-l} q^{-l s2 + 2 l deg}
      FracFn cart = FracFn(LPoly::monomial(
          Rat(1), unit_exp(Var::y, -l) + unit_exp(Var::q, 2 * (-l * s2 + 2 * l * deg))));
      FracFn pre = binom * cart;
      const auto& vec = flu[static_cast<std::size_t>(l)][j];
      for (int r = 0; r < V.dim(); ++r) {
        if (vec[static_cast<std::size_t>(r)].is_zero()) continue;
        FracFn t = pre * vec[static_cast<std::size_t>(r)];
        auto key = std::make_pair(deg, r);
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(key, std::move(t));
        else
          it->second += t;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

FracFn character_at_mu_plus_rho(const Rep& w) {
  FracFn acc;
  for (int wt : w.weights) {
    acc += FracFn(LPoly::monomial(Rat(1), unit_exp(Var::y, wt) + unit_exp(Var::q, 2 * wt)));
  }
  return acc;
}

FracFn central_element_action(const Rep& w) {
  // Apply R^{21} R (1 (x) q^{2rho}) to v_mu (x) w_alpha over the Verma slice
  // of depth dim(w) and read off the v_mu (x) w_alpha coefficient, summed
  // over alpha.  Symbolic mu enters through half-powers q^{mu/2}; those are
  // tracked in the local variable eta = q^{mu/2} and folded back to y at the
  // end (nonzero trace paths carry even eta powers).
  int d = w.dim();
  int depth = d + 1;

  // state[(verma degree, w index)] -> coefficient in (q, eta)
  using State = std::map<std::pair<int, int>, FracFn>;
  auto cartan = [&](State st) {
    // q^{h (x) h / 2} with first weight mu - 2k symbolic: eta^{w2} q^{-k w2}
    State out;
    for (auto& [key, f] : st) {
      auto [k, b] = key;
      int w2 = w.weights[b];
      FracFn g = f * FracFn(LPoly::monomial(Rat(1), unit_exp(Var::eta, w2) + unit_exp(Var::q, -2 * k * w2)));
      out[key] = std::move(g);
    }
    return out;
  };
  auto theta = [&](State st, bool flipped) {
    // sum_n c_n E^n (x) F^n (flipped: F^n (x) E^n) then the Cartan factor
    State out;
    for (int n = 0; n <= d; ++n) {
      FMatrix m = FMatrix::identity(d);
      for (int i = 0; i < n; ++i) m = (flipped ? w.E : w.F) * m;
      if (n > 0 && m.is_zero()) break;
      for (const auto& [key, f] : st) {
        auto [k, b] = key;
        int k2;
        FracFn vcoef = FracFn::one();
        if (!flipped) {
          // E^n F^k v = (prod over steps of [k-i]_q [mu-(k-i)+1]_q) F^{k-n} v
          if (n > k) continue;
          k2 = k - n;
          for (int i = 0; i < n; ++i) {
            // [mu + 1 - (k-i)]_q written in eta = q^{mu/2}
            LPoly num = LPoly::monomial(Rat(1), unit_exp(Var::eta, 2) + unit_exp(Var::q, 2 * (1 - (k - i)))) -
                        LPoly::monomial(Rat(1), unit_exp(Var::eta, -2) + unit_exp(Var::q, -2 * (1 - (k - i))));
            LPoly den = LPoly::q_pow(1) - LPoly::q_pow(-1);
            vcoef *= FracFn(qnum(k - i)) * FracFn(num, den);
          }
        } else {
          k2 = k + n;
          if (k2 > depth) continue;
        }
        for (int r = 0; r < d; ++r) {
          if (m(r, b).is_zero()) continue;
          FracFn t = f * vcoef * m(r, b) * universal_r_coeff(n);
          auto key2 = std::make_pair(k2, r);
          auto it = out.find(key2);
          if (it == out.end())
            out.emplace(key2, std::move(t));
          else
            it->second += t;
        }
      }
    }
    return cartan(std::move(out));
  };

  FracFn total;
  for (int alpha = 0; alpha < d; ++alpha) {
    State st;
    st[{0, alpha}] = FracFn::q_pow(w.weights[alpha]);  // (1 (x) q^{2rho})
    st = theta(std::move(st), false);  // R
    st = theta(std::move(st), true);   // R^{21}
    auto it = st.find({0, alpha});
    if (it != st.end()) total += it->second;
  }
  // fold eta = q^{mu/2} back to y = q^{mu}
  FracFn out;
  {
    auto fold = [](const LPoly& p) {
      LPoly r;
      for (const auto& [e, c] : p.terms()) {
        ExpVec ne = e;
        int ee = ne[static_cast<int>(Var::eta)];
        if (ee % 2 != 0) throw std::logic_error("central_element_action: odd eta power survived");
        ne[static_cast<int>(Var::eta)] = 0;
        ne[static_cast<int>(Var::y)] += ee / 2;
        r += LPoly::monomial(c, ne);
      }
      return r;
    };
    out = FracFn(fold(total.num()), fold(total.den()));
  }
  return out;
}

}  // namespace qtrace
