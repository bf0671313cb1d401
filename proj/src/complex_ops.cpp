#include "angw/complex_ops.hpp"

namespace angw {

namespace {

void require_compatible(const UChain& x, const AnFamily& fam) {
  if (x.nvars() != fam.n() || x.tcap() != fam.tcap())
    throw UsageError("chain/family ring mismatch");
}

void require_unit_valued(const Cochain& phi) {
  if (!phi.unit_valued())
    throw UnsupportedQueryError(
        "cap operators: cochains with eps-valued components are outside this engine");
}

UChain like(const UChain& x) {
  UChain r(x.nvars(), x.tcap(), x.bar_cap());
  r.set_u_valid_hi(x.u_valid_hi());
  r.set_t_valid_hi(x.t_valid_hi());
  return r;
}

}  // namespace

UChain hoch_b(const UChain& x, const AnFamily& fam) {
  require_compatible(x, fam);
  UChain r = like(x);
  for (const auto& [key, f] : x.terms()) {
    if (key.word.head == Head::One) continue;  // strict unit: both mu_2 wraps cancel
    const int k = key.word.tail;
    for (const auto& [m, gamma] : fam.mu()) {
      if (m < 1 || m - 1 > k) continue;  // curvature inserts into tail slots: degenerate
      r.add_term(Head::One, k - m + 1, key.upow, Scalar(m) * (gamma * f));
    }
  }
  return r;
}

UChain connes_B(const UChain& x) {
  UChain r = like(x);
  for (const auto& [key, f] : x.terms()) {
    if (key.word.head == Head::One) continue;  // rotations of a unit head are degenerate
    const int m = key.word.tail;
    r.add_term(Head::One, m + 1, key.upow, Scalar(m + 1) * f);
  }
  return r;
}

UChain cyclic_differential(const UChain& x, const AnFamily& fam) {
  // uB is written out directly so that terms destined for the unknown zone
  // above the validity window are dropped before the bar_cap check fires.
  UChain r = hoch_b(x, fam);
  for (const auto& [key, f] : x.terms()) {
    if (key.word.head == Head::One) continue;
    const int m = key.word.tail;
    r.add_term(Head::One, m + 1, key.upow + 1, Scalar(m + 1) * f);
  }
  return r;
}

UChain gamma_op(const UChain& x) {
  UChain r = like(x);
  for (const auto& [key, f] : x.terms())
    r.add_term(key, Scalar(-key.word.tail) * f);
  return r;
}

UChain cap_b11(const Cochain& phi, const UChain& x, const AnFamily& fam) {
  require_compatible(x, fam);
  require_unit_valued(phi);
  UChain r = like(x);
  for (const auto& [key, f] : x.terms()) {
    const int k = key.word.tail;
    for (const auto& [l, val] : phi.components()) {
      if (l > k) continue;  // no admissible window
      r.add_term(key.word.head, k - l, key.upow, val.one * f);
    }
  }
  return r;
}

UChain cap_B11(const Cochain& phi, const UChain& x, const AnFamily& fam) {
  require_compatible(x, fam);
  require_unit_valued(phi);
  // Every rotation placement produces 1|...|phi(...)|... with the unit value
  // of phi sitting in a tail slot; all such words are degenerate in the
  // reduced complex, so the action vanishes identically here.
  return like(x);
}

UChain cochain_insertion(const Cochain& phi, const UChain& x, const AnFamily& fam) {
  require_compatible(x, fam);
  require_unit_valued(phi);
  UChain r = like(x);
  for (const auto& [key, f] : x.terms()) {
    if (key.word.head == Head::One) continue;  // reduced cochain vanishes on unit inputs
    const int k = key.word.tail;
    for (const auto& [l, val] : phi.components()) {
      if (l < 1 || l - 1 > k) continue;
      r.add_term(Head::One, k - l + 1, key.upow, Scalar(l) * (val.one * f));
    }
  }
  return r;
}

UChain shift_operator_T(const UChain& x, const AnFamily& fam) {
  require_compatible(x, fam);
  if (!fam.versal()) {  // no deformation directions: T vanishes
    UChain zero(x.nvars(), x.tcap(), x.bar_cap());
    zero.set_u_valid_hi(UChain::sat_add(x.u_valid_hi(), 1));
    zero.set_t_valid_hi(UChain::sat_add(x.t_valid_hi(), 1));
    return zero;
  }
  UChain r(x.nvars(), x.tcap(), x.bar_cap());
  // T raises every t-degree by one at fixed u-power, so both exactness
  // bounds move up by one (the slanted one comes back down under the 1/u
  // that always accompanies T in the trivialization exponential).
  r.set_u_valid_hi(UChain::sat_add(x.u_valid_hi(), 1));
  r.set_t_valid_hi(UChain::sat_add(x.t_valid_hi(), 1));
  const int n = fam.n();
  for (const auto& [key, f] : x.terms()) {
    const int k = key.word.tail;
    for (int i = 0; i <= std::min(n - 1, k); ++i) {
      TSeries ti = TSeries::variable(n, x.tcap(), i);
      r.add_term(key.word.head, k - i, key.upow, ti * f);
    }
  }
  return r;
}

UChain trivialization_exp(const UChain& x, const AnFamily& fam, int sign) {
  require_compatible(x, fam);
  if (sign != 1 && sign != -1) throw UsageError("trivialization_exp: sign must be +-1");
  UChain acc = x;
  UChain pow = x;
  Scalar coeff(1);
  // Each application of T raises t-order by at least one, so the series
  // stops after tcap-1 steps.
  for (int rdeg = 1; rdeg < x.tcap(); ++rdeg) {
    pow = shift_operator_T(pow, fam).shift_u(-1);
    if (pow.is_zero()) break;
    coeff *= Scalar(sign, rdeg);  // sign^r / r!
    acc += coeff * pow;
  }
  return acc;
}

}  // namespace angw
