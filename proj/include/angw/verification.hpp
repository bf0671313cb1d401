#pragma once

#include <string>
#include <vector>

#include "angw/costello.hpp"
#include "angw/solver.hpp"

namespace angw {

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// One function per acceptance criterion, parameterized by the level n (and
// truncation order where relevant) so that both the CLI `verify`
// subcommand and the acceptance suite drive the same code.
namespace checks {

VerifyItem hh_dimension(int n);                       // homology rank/parity/basis
VerifyItem mukai_table(int n);                        // delta pairing table
VerifyItem coproduct_formula(int n);                  // term-exact coproduct, k <= 2n
VerifyItem splitting_properties(int n, int order);    // closedness, homogeneity, hres constants
VerifyItem splitting_uniqueness(int n, int order);    // zero ambiguity rank per u-order
VerifyItem costello_values(int n);                    // (0,3) and (1,1) tables
VerifyItem commutator_identity(int n);                // scaling commutator, tails <= 3(n+1)
VerifyItem differential_squares(int n, int order);    // b^2 = 0 and (b+uB)^2 = 0, full family
VerifyItem good_splitting(int n, int order);          // span preservation + extracted r
VerifyItem solver_j_terms(int n, int order);          // displayed principal parts, orders 1..3
VerifyItem flat_coordinates_match(int n, int order);  // quadratic coordinate change
VerifyItem correlator_values(int n, int order);       // 2/3/4-point endpoints
VerifyItem dimension_and_wdvv(int n, int order);      // Euler constraint + associativity
VerifyItem primitive_axioms(int n, int order);        // P1-P4
VerifyItem stability(int n, int order);               // cap-independence of solver output

}  // namespace checks

/// Everything above for one configuration, in criterion order.
std::vector<VerifyItem> verify_config(int n, int order, int u_cap, int bar_cap);

}  // namespace angw
