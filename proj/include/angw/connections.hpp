#pragma once

#include <optional>
#include <string>

#include "angw/splitting.hpp"

namespace angw {

/// Vector field on the deformation base: components along d/dt_j.
struct BaseVectorField {
  std::map<int, TSeries> coefficients;

  TSeries at(int j, int nvars, int tcap) const {
    auto it = coefficients.find(j);
    return it == coefficients.end() ? TSeries(nvars, tcap) : it->second;
  }
};

/// Pass/fail record of an identity sweep.
struct CheckReport {
  std::string identity;
  std::string range;
  bool pass = true;
  std::string counterexample;

  std::string to_json_string() const;
};

/// u-direction connection
///   d/du + Gamma/2u + B^{1|1}(kappa;-)/2u + b^{1|1}(kappa;-)/2u^2
/// with kappa the Euler-scaling cochain of the family.  Order-two pole:
/// the validity window moves down by two.
UChain u_connection(const UChain& x, const AnFamily& fam);

/// u * (u-direction connection): the logarithmic form used by the
/// good-splitting and homogeneity checks.
UChain u_log_connection(const UChain& x, const AnFamily& fam);

/// Base-direction connection on cyclic chains:
///   v - u^{-1} b^{1|1}(KS(v);-) - B^{1|1}(KS(v);-),
/// first-order pole at u = 0.
UChain ggm_connection(const BaseVectorField& v, const UChain& x, const AnFamily& fam);
UChain ggm_connection_dt(int j, const UChain& x, const AnFamily& fam);

/// The Euler vector field E = sum_j (1 - j/(n+1)) t_j d/dt_j.
BaseVectorField euler_field(int n, int tcap);

/// Scaling commutator identity
///   [2u d/du + Gamma + (t d/dt at t=1), b+uB] = b+uB
/// checked exactly on every basis word with tail <= tail_cap and u-powers
/// in a small window; the scaling derivative acts as the head-wrap
/// insertion of the Euler cochain.
CheckReport check_u_commutator(const AnFamily& fam, int tail_cap);

/// Good-splitting check: u*connection preserves the span of u^{<=-1} s_j,
/// and the distinguished lift is compatible with it:
///   (u-log connection)(s_{n-1}) - r s_{n-1} lies in u^{-1} Im(s),
/// with r extracted from the decomposition.
struct GoodSplittingReport {
  bool preserved = true;      // all u^m s_j, m <= 0, decompose into the span
  bool omega_compatible = true;
  Scalar r;                   // extracted scalar for the distinguished lift
  std::vector<Scalar> r_by_index;  // eigenvalue extracted per s_j
  std::string detail;
};

GoodSplittingReport check_good_splitting(const SplittingBasis& basis, const AnFamily& fam);

/// Applies exp(-sum t_i b_i / u) — the differential-module trivialization.
UChain trivialization_apply(const UChain& x, const AnFamily& fam);
/// Its inverse exp(+sum t_i b_i / u).
UChain trivialization_unapply(const UChain& x, const AnFamily& fam);

/// Homogeneity operator check: on a weight-homogeneous closed chain,
/// (u-log connection + GGM along the Euler field) + wt/2 decomposes to
/// zero against the splitting basis.
CheckReport check_homogeneity_identity(const UChain& x, const SplittingBasis& basis,
                                       const AnFamily& fam, const WeightTable& wt);

/// Ambiguity rank of the weight-preserving lift of [eps|eps^k] at u-order
/// l: the dimension of the space of weight-homogeneous odd cycles of
/// weight wt_k + 2l in the truncated fiber complex.  Zero for l >= 1 is
/// what makes the lift unique.
int lift_ambiguity_rank(int n, int k, int l, int tail_cap);

}  // namespace angw
