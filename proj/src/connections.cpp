#include "angw/connections.hpp"

#include <sstream>

#include "angw/linalg.hpp"

namespace angw {

std::string CheckReport::to_json_string() const {
  std::ostringstream os;
  os << "{\"identity\": \"" << identity << "\", \"range\": \"" << range << "\", \"status\": \""
     << (pass ? "pass" : "fail") << "\", \"counterexample\": \"" << counterexample << "\"}";
  return os.str();
}

UChain u_connection(const UChain& x, const AnFamily& fam) {
  Cochain kappa = ks_euler_cochain(fam);
  Scalar half(1, 2);
  UChain r = x.d_du();
  r += half * gamma_op(x).shift_u(-1);
  r += half * cap_B11(kappa, x, fam).shift_u(-1);
  r += half * cap_b11(kappa, x, fam).shift_u(-2);
  return r;
}

UChain u_log_connection(const UChain& x, const AnFamily& fam) {
  return u_connection(x, fam).shift_u(1);
}

UChain ggm_connection(const BaseVectorField& v, const UChain& x, const AnFamily& fam) {
  UChain r(x.nvars(), x.tcap(), x.bar_cap());
  r.set_u_valid_hi(x.u_valid_hi());
  r.set_t_valid_hi(x.t_valid_hi());
  Cochain ks_v(fam.n(), fam.tcap(), Parity::Even);
  for (const auto& [j, coeff] : v.coefficients) {
    if (j < 0 || j >= fam.n()) throw UsageError("ggm_connection: field component out of range");
    r += coeff * x.d_dt(j);
    ks_v.set_component(j, AlgElement(coeff, TSeries(fam.n(), fam.tcap())));
  }
  r -= cap_b11(ks_v, x, fam).shift_u(-1);
  r -= cap_B11(ks_v, x, fam);
  return r;
}

UChain ggm_connection_dt(int j, const UChain& x, const AnFamily& fam) {
  BaseVectorField v;
  v.coefficients[j] = TSeries::constant(fam.n(), fam.tcap(), Scalar(1));
  return ggm_connection(v, x, fam);
}

BaseVectorField euler_field(int n, int tcap) {
  BaseVectorField e;
  for (int j = 0; j < n; ++j) {
    Scalar c = Scalar(1) - Scalar(j, n + 1);
    e.coefficients[j] = c * TSeries::variable(n, tcap, j);
  }
  return e;
}

CheckReport check_u_commutator(const AnFamily& fam, int tail_cap) {
  CheckReport rep;
  rep.identity = "[2u d_u + Gamma + t d_t|_{t=1}, b+uB] = b+uB";
  rep.range = "tails <= " + std::to_string(tail_cap) + ", u in [-2, 2]";
  Cochain kappa = ks_euler_cochain(fam);
  auto scaling = [&](const UChain& c) {  // 2u d/du + Gamma
    return Scalar(2) * c.d_du().shift_u(1) + gamma_op(c);
  };
  for (int head = 0; head < 2; ++head) {
    for (int k = 0; k <= tail_cap; ++k) {
      for (int p = -2; p <= 2; ++p) {
        UChain w(fam.n(), fam.tcap(), tail_cap + fam.n() + 2);
        w.add_term(head == 0 ? Head::One : Head::Eps, k, p,
                   TSeries::constant(fam.n(), fam.tcap(), Scalar(1)));
        UChain d = cyclic_differential(w, fam);
        UChain lhs = scaling(d) - cyclic_differential(scaling(w), fam) +
                     cochain_insertion(kappa, w, fam);
        if (!(lhs == d)) {
          rep.pass = false;
          rep.counterexample = word_string(w.terms().begin()->first.word) + " u^" +
                               std::to_string(p);
          return rep;
        }
      }
    }
  }
  return rep;
}

GoodSplittingReport check_good_splitting(const SplittingBasis& basis, const AnFamily& fam) {
  GoodSplittingReport rep;
  const int n = fam.n();
  for (int j = 0; j < n && rep.preserved; ++j) {
    for (int m = 0; m >= -2; --m) {
      UChain z = u_log_connection(basis.s[j].shift_u(m), fam);
      ClassCoords cc;
      try {
        cc = decompose_class(z, basis, fam);
      } catch (const UsageError& e) {
        rep.preserved = false;
        rep.detail = "s_" + std::to_string(j) + " u^" + std::to_string(m) +
                     " failed to decompose: " + e.what();
        break;
      }
      for (const auto& [jm, c] : cc.coords) {
        if (c.is_zero()) continue;
        if (jm.second <= -1) continue;                       // allowed span u^{<=-1} Im(s)
        if (m == 0 && jm == std::make_pair(j, 0)) continue;  // the extracted eigenvalue
        rep.preserved = false;
        rep.detail = "s_" + std::to_string(j) + " u^" + std::to_string(m) +
                     " decomposes outside the allowed span at (j=" + std::to_string(jm.first) +
                     ", m=" + std::to_string(jm.second) + ")";
        break;
      }
      if (m == 0 && rep.preserved) {
        TSeries diag = cc.at(j, 0, fam.n(), fam.tcap());
        rep.r_by_index.push_back(diag.constant_term());
        if (!(diag - TSeries::constant(fam.n(), fam.tcap(), diag.constant_term())).is_zero()) {
          rep.preserved = false;
          rep.detail = "eigenvalue of s_" + std::to_string(j) + " is not constant";
        }
      }
      if (!rep.preserved) break;
    }
  }
  if (rep.preserved && static_cast<int>(rep.r_by_index.size()) == n) {
    rep.r = rep.r_by_index[n - 1];
    rep.omega_compatible = true;  // omega-term decomposed as r*omega + span
  } else {
    rep.omega_compatible = false;
  }
  return rep;
}

UChain trivialization_apply(const UChain& x, const AnFamily& fam) {
  return trivialization_exp(x, fam, -1);
}

UChain trivialization_unapply(const UChain& x, const AnFamily& fam) {
  return trivialization_exp(x, fam, +1);
}

CheckReport check_homogeneity_identity(const UChain& x, const SplittingBasis& basis,
                                       const AnFamily& fam, const WeightTable& wt) {
  CheckReport rep;
  rep.identity = "(u-log connection + GGM_E + wt/2) x decomposes to zero";
  rep.range = "one chain";
  std::map<Scalar, UChain> strata = weight_decomposition(x, wt);
  if (strata.size() != 1) {
    rep.pass = false;
    rep.counterexample = "input not weight-homogeneous";
    return rep;
  }
  const Scalar w = strata.begin()->first;
  UChain lhs = u_log_connection(x, fam) + ggm_connection(euler_field(fam.n(), fam.tcap()), x, fam);
  lhs += (w / Scalar(2)) * x;
  ClassCoords cc = decompose_class(lhs, basis, fam);
  if (!cc.coords_zero()) {
    rep.pass = false;
    rep.counterexample = cc.to_json_string();
  }
  return rep;
}

int lift_ambiguity_rank(int n, int k, int l, int tail_cap) {
  if (l < 1) throw UsageError("lift_ambiguity_rank: ambiguity arises at u-orders >= 1");
  // Odd-parity weight stratum of weight wt(eps|eps^k) + 2l in the fiber
  // complex, modulo nothing (no boundaries land in odd parity): its cycles
  // are the ambiguity of the order-l lift.
  WeightTable wt(n);
  Scalar target = wt.word_weight(BarWord{Head::Eps, k}) + Scalar(2 * l);
  AnFamily fiber(n, 1);
  std::vector<int> stratum;
  for (int m = 0; m <= tail_cap; ++m)
    if (wt.word_weight(BarWord{Head::Eps, m}) == target) stratum.push_back(m);
  if (stratum.empty()) return 0;
  // Rank of b restricted to the stratum; cycles = dim - rank.
  QMatrix mat(tail_cap + 1, static_cast<int>(stratum.size()));
  for (size_t c = 0; c < stratum.size(); ++c) {
    UChain e(n, 1, tail_cap + n + 1);
    e.add_term(Head::Eps, stratum[c], 0, TSeries::constant(n, 1, Scalar(1)));
    UChain be = hoch_b(e, fiber);
    for (const auto& [key, coef] : be.terms())
      mat.at(key.word.tail, static_cast<int>(c)) = coef.constant_term();
  }
  return static_cast<int>(stratum.size()) - mat.rank();
}

}  // namespace angw
