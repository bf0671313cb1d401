#include "angw/family.hpp"

namespace angw {

AnFamily::AnFamily(int n, int tcap) : n_(n), tcap_(tcap) {
  if (n < 1) throw UsageError("AnFamily: level must be >= 1");
  if (tcap < 1) throw UsageError("AnFamily: truncation order must be >= 1");
  for (int k = 0; k < n_; ++k) {
    TSeries tk = TSeries::variable(n_, tcap_, k);
    if (!tk.is_zero()) mu_[k] = tk;  // tcap 1 kills every parameter: the central fiber
  }
  mu_[n_ + 1] = TSeries::constant(n_, tcap_, Scalar(1, n_ + 1));
}

AnFamily::AnFamily(int n, int tcap, bool fiber_only) : AnFamily(n, tcap) {
  if (fiber_only) {
    for (int k = 0; k < n_; ++k) mu_.erase(k);
    versal_ = false;
  }
}

Scalar weight_of(const BarWord& w, int upow, const Expo& t_expo, const WeightTable& wt) {
  Scalar r = wt.word_weight(w) + Scalar(upow) * wt.u_weight();
  for (size_t j = 0; j < t_expo.size(); ++j)
    if (t_expo[j]) r += Scalar(t_expo[j]) * wt.t_chain_weight(static_cast<int>(j));
  return r;
}

std::map<Scalar, UChain> weight_decomposition(const UChain& x, const WeightTable& wt) {
  std::map<Scalar, UChain> out;
  for (const auto& [k, c] : x.terms()) {
    for (const auto& [e, coef] : c.terms()) {
      Scalar w = weight_of(k.word, k.upow, e, wt);
      auto [it, fresh] = out.try_emplace(w, UChain(x.nvars(), x.tcap(), x.bar_cap()));
      if (fresh) {
        it->second.set_u_valid_hi(x.u_valid_hi());
        it->second.set_t_valid_hi(x.t_valid_hi());
      }
      TSeries mono(x.nvars(), x.tcap());
      mono.add_term(e, coef);
      it->second.add_term(k, mono);
    }
  }
  return out;
}

bool is_weight_homogeneous(const UChain& x, const Scalar& w, const WeightTable& wt) {
  for (const auto& [k, c] : x.terms())
    for (const auto& [e, coef] : c.terms()) {
      (void)coef;
      if (weight_of(k.word, k.upow, e, wt) != w) return false;
    }
  return true;
}

Scalar cyclic_pairing(const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b) {
  // <1, eps> = <eps, 1> = 1; the even-even and odd-odd pairings vanish.
  return a.first * b.second + a.second * b.first;
}

Cochain ks_map(int j, const AnFamily& fam) {
  if (j < 0 || j >= fam.n()) throw UsageError("ks_map: direction out of range");
  Cochain phi(fam.n(), fam.tcap(), Parity::Even);
  phi.set_component(j, AlgElement(TSeries::constant(fam.n(), fam.tcap(), Scalar(1)),
                                  TSeries(fam.n(), fam.tcap())));
  return phi;
}

Cochain ks_euler_cochain(const AnFamily& fam) {
  Cochain phi(fam.n(), fam.tcap(), Parity::Even);
  for (const auto& [k, coeff] : fam.mu()) {
    TSeries v = Scalar(2 - k) * coeff;
    phi.set_component(k, AlgElement(v, TSeries(fam.n(), fam.tcap())));
  }
  return phi;
}

AlgElement mu_eval(const AnFamily& fam, const std::vector<bool>& inputs) {
  const int n = fam.n();
  const int tc = fam.tcap();
  AlgElement zero{TSeries(n, tc), TSeries(n, tc)};
  size_t units = 0;
  for (bool b : inputs)
    if (!b) ++units;

  if (units == 0) {
    // All-eps window: the structure constants of the family.
    AlgElement r = zero;
    r.one = fam.mu_value(static_cast<int>(inputs.size()));
    return r;
  }
  if (inputs.size() == 2 && units >= 1) {
    // Strict unit: mu_2(1, a) = a = mu_2(a, 1) (eps has shifted degree 0,
    // so no sign appears on either side).
    if (units == 2) return AlgElement{TSeries::constant(n, tc, Scalar(1)), TSeries(n, tc)};
    return AlgElement{TSeries(n, tc), TSeries::constant(n, tc, Scalar(1))};
  }
  return zero;  // any other window containing the unit vanishes
}

}  // namespace angw
