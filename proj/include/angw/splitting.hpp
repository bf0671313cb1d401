#pragma once

#include <utility>
#include <vector>

#include "angw/complex_ops.hpp"

namespace angw {

/// Product coefficient of the weight-preserving lift:
///   c_{k,0} = 1,  c_{k,l} = prod_{j=0}^{l-1} (k+1+j(n+1)).
Scalar splitting_coeff(int k, int l, int n);

/// The weight-preserving lift of the homology class [eps|eps^j]:
///   s_j = sum_{l>=0} (-1)^l c_{j,l} eps|eps^{j+(n+1)l} u^l,
/// truncated at u^{u_cap} (u_valid_hi = u_cap).  Closed under b + uB and
/// weight-homogeneous of weight (2j+1-n)/(n+1).
UChain splitting_s(int j, int n, int u_cap, int bar_cap, int tcap);

/// The n lifts s_0..s_{n-1} bundled as the splitting of the Hodge
/// filtration (the basis every periodic class is decomposed against).
struct SplittingBasis {
  int n = 0;
  int u_cap = 0;
  std::vector<UChain> s;
};

SplittingBasis make_splitting_basis(int n, int u_cap, int bar_cap, int tcap);

/// Mukai pairing on canonical (u-free, eps-head) representatives:
///   <eps|eps^i, eps|eps^j> = 1 iff i+j = n-1, else 0,
/// extended R-bilinearly.  Inputs carrying unit-head words or u-powers are
/// rejected; reduce them first.
TSeries mukai_pairing(const UChain& x, const UChain& y, const AnFamily& fam);

/// Higher residue pairing <alpha u^i, beta u^j> = (-1)^i <alpha,beta> u^{i+j}
/// on termwise-canonical chains; u-sesquilinear extension of the Mukai
/// pairing, a chain map for b + uB.  Over the family it is evaluated in
/// the trivialized frame (the parallel transport of the fiber pairing,
/// flat for the base-direction connection); at t = 0 this is the identity.
ULaurent hres_pairing(const UChain& x, const UChain& y, const AnFamily& fam);

/// Coproduct on the homology basis: eps|eps^k -> sum_{i+j=k} (i-part, j-part).
std::vector<std::pair<BarWord, BarWord>> coproduct(const BarWord& w);

/// Strips the unit-head part of a cycle (unit-head words are exactly the
/// boundaries of this complex), leaving the eps-head canonical
/// representative.  For u-free inputs closedness is verified first.
UChain canonical_representative(const UChain& x, const AnFamily& fam);

/// Result of decomposing a closed chain against a splitting basis:
///   input = sum coords[(j,m)] * (transport of u^m s_j) + (b+uB)(witness)
/// exactly at truncation (through the validity window), where "transport"
/// is the trivialization frame map (the identity at t = 0, so fiber chains
/// decompose literally against u^m s_j).  Coordinates vanish exactly when
/// the class vanishes, which is what the identity checks consume.
struct ClassCoords {
  std::map<std::pair<int, int>, TSeries> coords;  // (j, u-power m) -> coefficient
  UChain witness;

  TSeries at(int j, int m, int nvars, int tcap) const {
    auto it = coords.find({j, m});
    return it == coords.end() ? TSeries(nvars, tcap) : it->second;
  }
  bool coords_zero() const { return coords.empty(); }
  std::string to_json_string() const;
};

/// Exact decomposition by sparse reduction, pivoting on lowest
/// (u-power, tail, head): unit-head terms are absorbed into the witness via
/// the triangular boundary ladder, eps-head leads in the homology range
/// become coordinates.  Throws UsageError if the input is not closed /
/// not in the span, TruncationError if the ladder leaves bar_cap.
ClassCoords decompose_class(const UChain& x, const SplittingBasis& basis, const AnFamily& fam);

/// Hochschild homology of the central fiber by kernel/image linear algebra
/// on the truncated complex (tails <= tail_cap; classes are reliable in the
/// stable range tail <= tail_cap - n).
struct HomologyReport {
  int odd_dim = 0;
  int even_dim_stable = 0;           // even classes in the stable range
  std::vector<int> odd_basis_tails;  // tails of the eps-head kernel basis
  bool basis_is_standard = false;    // kernel basis == {eps|eps^j : j < n}
};

HomologyReport hochschild_homology(int n, int tail_cap);

/// Corrected cycle basis of the family's Hochschild homology mod t^tcap:
/// kappa_j = eps|eps^j + O(t), constructed by the triangular elimination
/// that also witnesses freeness of rank n.
std::vector<UChain> family_homology_basis(const AnFamily& fam, int bar_cap);

}  // namespace angw
