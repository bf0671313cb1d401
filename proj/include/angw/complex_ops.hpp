#pragma once

#include "angw/family.hpp"

namespace angw {

// Chain-level operators on the reduced cyclic complex of the family.
//
// Convention: heads are unshifted, tail slots are shifted (so eps has
// shifted degree 0 and no Koszul signs appear on eps-words); the global
// signs below are pinned by the operator identities exercised in the test
// suite (b^2 = 0, (b+uB)^2 = 0, closedness of the weight-preserving lifts,
// the scaling commutator identity, and the connection/trivialization
// intertwining relations).

/// Reduced Hochschild differential of the (weakly curved) family:
///   b(1|eps^k)  = 0
///   b(eps|eps^k) = sum_m m * mu_m * 1|eps^{k-m+1}   over arities m >= 1
/// (the m placements of the head inside a mu_m window each contribute the
/// structure constant; curvature insertions land in tail slots and vanish
/// in the reduced complex).
UChain hoch_b(const UChain& x, const AnFamily& fam);

/// Connes cyclic differential:
///   B(1|eps^k) = 0,   B(eps|eps^m) = (m+1) * 1|eps^{m+1}.
UChain connes_B(const UChain& x);

/// b + uB.
UChain cyclic_differential(const UChain& x, const AnFamily& fam);

/// Gamma(a_0|a_1|...|a_k) = -k * a_0|a_1|...|a_k.
UChain gamma_op(const UChain& x);

/// Cap action of a cochain on chains (the Hochschild-type component).
/// For the unit-valued reduced cochains of this engine every surviving
/// placement funnels through a strict-unit mu_2, and the action collapses
/// to the weighted tail shift
///   phi cap (h|eps^k) = sum_l phi_l * h|eps^{k-l},
/// with coefficient exactly one per arity (certified by the Cartan-type
/// and Gauss-Manin identities in the tests).
UChain cap_b11(const Cochain& phi, const UChain& x, const AnFamily& fam);

/// Cap action of a cochain on chains (the cyclic-type component).  A
/// rotation placement puts the unit at the head and the cochain value in a
/// tail slot, so for unit-valued cochains every term is degenerate in the
/// reduced complex: the operator is identically zero there.  Non-unit
/// values would contribute and are rejected as out of scope.
UChain cap_B11(const Cochain& phi, const UChain& x, const AnFamily& fam);

/// Head-wrap insertion of a cochain: the derivative of b along the family
/// direction classified by phi,
///   iota(phi)(eps|eps^k) = sum_l l * phi_l * 1|eps^{k-l+1},
/// zero on unit heads.  This is what "t d/dt at t = 1" contributes in the
/// scaling commutator identity.
UChain cochain_insertion(const Cochain& phi, const UChain& x, const AnFamily& fam);

/// sum_i t_i * b^{1|1}([eps^i -> 1]): the tail-shift operator of the
/// trivialization exponential.
UChain shift_operator_T(const UChain& x, const AnFamily& fam);

/// exp(sign * T / u) applied to x, T as above.  The series terminates
/// because T raises t-order.
UChain trivialization_exp(const UChain& x, const AnFamily& fam, int sign);

}  // namespace angw
