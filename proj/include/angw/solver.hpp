#pragma once

#include "angw/connections.hpp"

namespace angw {

/// State of the order-by-order primitive-form recursion.
///
/// zeta is the distinguished closed lift of the fiber class: it restricts
/// to s_{n-1} at t = 0, has only nonnegative u-powers, and is
/// weight-homogeneous of weight (n-1)/(n+1).  J[m] holds the coefficient
/// of s_j (index j) of the depth-m principal part J_{-m} of the
/// trivialized expansion
///   exp(-sum t_i b_i / u) zeta  =  s_{n-1} + sum_{m>=1} u^{-m} J_{-m}.
struct SolverState {
  int n = 0;
  int order = 0;  // t-degrees < order are computed
  int u_cap = 0;
  int bar_cap = 0;
  AnFamily fam{1, 1};
  SplittingBasis basis;
  UChain zeta;
  std::map<int, std::vector<TSeries>> J;  // depth m >= 1 -> s-coordinates
  Scalar r;  // homogeneity constant -(n-1)/(2(n+1))

  TSeries j_coord(int depth, int j) const;
};

/// Runs the recursion: at each t-order the principal parts are forced by
/// cancelling every negative u-power of the trivialized expansion exactly,
/// depth by depth; a kill condition landing outside the homology basis
/// range means no weight-homogeneous lift exists and raises an error
/// naming the offending stratum.
SolverState solve_primitive_form(int n, int order, int u_cap, int bar_cap = -1);

/// Potential data in flat coordinates.
struct PotentialSeries {
  std::map<int, TSeries> derivs;  // l -> dF/dtau_l as a series in tau
  std::map<int, TSeries> coords;  // k -> tau_k as a series in t
};

/// Reads flat coordinates off the depth-1 principal part:
/// J_{-1} = sum_i tau_i s_{n-1-i}, so tau_i(t) = (coefficient of s_{n-1-i}).
std::map<int, TSeries> flat_coordinates(const SolverState& st);

/// Inverts a coordinate change tau_k(t) = -t_k + O(t^2) by fixed-point
/// substitution, returning t_k as a series in the new variables.
std::vector<TSeries> invert_coordinates(int n, int cap, const std::map<int, TSeries>& tau);

/// Re-expresses the depth-2 coordinates in flat coordinates by exact
/// series inversion: dF/dtau_l = J_{-2}^l(tau) (the metric is the identity
/// in this indexing).
PotentialSeries potential_derivatives(const SolverState& st);

/// tau-derivative of the genus-zero potential at tau = 0.
///   2 indices: the flat metric delta_{i+j=n-1};
///   3 or 4 indices: the corresponding derivative of dF/dtau.
Scalar correlator(const SolverState& st, const PotentialSeries& pot,
                  const std::vector<int>& indices);

/// Assembles F itself from its derivatives (degree-d part is
/// (1/d) sum_l tau_l dF/dtau_l restricted to degree d; constant and linear
/// parts vanish).  Requires the mixed-partial symmetry that
/// potential_derivatives enforces.
TSeries assemble_potential(const SolverState& st, const PotentialSeries& pot);

/// Euler dimension constraint E(F) = (3 - (n-1)/(n+1)) F on the truncated
/// potential; also verifies that the Euler field is diagonal in flat
/// coordinates with the expected charges.
CheckReport check_dimension_axiom(const SolverState& st, const PotentialSeries& pot);

/// Associativity (WDVV) residuals of the third derivatives with respect to
/// the flat metric, at truncation order.
CheckReport check_wdvv(const SolverState& st, const PotentialSeries& pot);
CheckReport check_wdvv_potential(int n, int order, const std::map<int, TSeries>& derivs);

/// Independent reconstruction of every four-point value from the metric,
/// the three-point constants and the single seed <1,1,n-1,n-1> = 1, by
/// propagating the linearized associativity relations (with the dimension
/// axiom pinning the support); the solver's quartic data must agree.
CheckReport check_four_point_reconstruction(const SolverState& st, const PotentialSeries& pot);

/// The four defining conditions of the distinguished lift, each checked
/// independently at truncation:
///   P1 invertibility of the Kodaira-Spencer period matrix,
///   P2 pairings of first covariant derivatives land in R,
///   P3 pairings of second against first land in R + uR,
///   P4 homogeneity with constant r.
struct PrimitiveAxiomReport {
  bool p1 = false, p2 = false, p3 = false, p4 = false;
  Scalar r;
  std::string detail;
  bool all() const { return p1 && p2 && p3 && p4; }
};

PrimitiveAxiomReport check_primitive_axioms(const SolverState& st);

/// Index side of the monomial correspondence eps|eps^i <-> x^{n-1-i}.
int phi_iso(int i, int n);

}  // namespace angw
