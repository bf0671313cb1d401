#pragma once

#include <vector>

#include "angw/splitting.hpp"

namespace angw {

// Low-genus categorical field-theory invariants of the central fiber,
// evaluated through the pairing/coproduct composites they reduce to.

/// Genus-zero three-point invariant on the homology basis indices;
/// equals 1 iff i+j+k = 2n-2.  Evaluated as the one-insertion sum
///   (1/2) sum_{s+t=k} (d_{j+s=n-1} d_{i+t=n-1} + d_{j+t=n-1} d_{i+s=n-1}).
Scalar inv_03(int i, int j, int k, int n);

/// Genus-one one-point invariant with gravitational descendant u^l:
/// 0 for l = 0; for l = 1 it is (1/24) * (Mukai pairing o coproduct),
/// i.e. n/24 at k = n-1 and 0 otherwise.  l >= 2 is rejected.
Scalar inv_11(int k, int l, int n);

/// The order-lambda bookkeeping behind the one-insertion computation:
/// the coproduct pair list {(i,j) : i+j = k} with coefficient 1/2, and the
/// Mukai correction term, which vanishes identically because the shifted
/// index i+n+1+j = k+n+1 can never hit n-1.
struct LambdaExpansion {
  std::vector<std::pair<int, int>> pairs;
  Scalar pair_coefficient;  // 1/2
  Scalar correction;        // always 0; computed, not assumed
};

LambdaExpansion lambda_expansion(int k, int n);

/// A query against the invariant tables: genus-zero three-point (three
/// class indices, no descendant) or genus-one one-point (one index,
/// descendant power 0 or 1).
struct InvariantQuery {
  enum class Marking { ZeroThree, OneOne };
  Marking marking = Marking::ZeroThree;
  std::vector<int> inputs;
  int descendant = 0;
};

Scalar evaluate(const InvariantQuery& q, int n);

}  // namespace angw
