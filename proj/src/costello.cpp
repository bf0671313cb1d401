#include "angw/costello.hpp"

namespace angw {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 0 || i > n - 1) throw UsageError(std::string(what) + ": index out of range");
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

LambdaExpansion lambda_expansion(int k, int n) {
  check_index(k, n, "lambda_expansion");
  LambdaExpansion e;
  e.pair_coefficient = Scalar(1, 2);
  e.correction = Scalar(0);
  for (int i = 0; i <= k; ++i) {
    int j = k - i;
    e.pairs.push_back({i, j});
    // The lift of eps|eps^i differs from u^{-1}(lifted class) by
    // (i+1) eps|eps^{i+n+1} + higher; pairing that against eps|eps^j can
    // only survive at total tail n-1, and i+n+1+j = k+n+1 > n-1.
    if (i + n + 1 + j == n - 1) e.correction += Scalar(i + 1, 2);
  }
  return e;
}

Scalar inv_03(int i, int j, int k, int n) {
  check_index(i, n, "inv_03");
  check_index(j, n, "inv_03");
  check_index(k, n, "inv_03");
  Scalar acc(0);
  for (int s = 0; s <= k; ++s) {
    int t = k - s;
    acc += Scalar(delta(j + s, n - 1) * delta(i + t, n - 1) +
                  delta(j + t, n - 1) * delta(i + s, n - 1));
  }
  return Scalar(1, 2) * acc;
}

Scalar evaluate(const InvariantQuery& q, int n) {
  if (q.marking == InvariantQuery::Marking::ZeroThree) {
    if (q.inputs.size() != 3 || q.descendant != 0)
      throw UsageError("evaluate: a three-point query takes 3 indices and no descendant");
    return inv_03(q.inputs[0], q.inputs[1], q.inputs[2], n);
  }
  if (q.inputs.size() != 1)
    throw UsageError("evaluate: a one-point query takes a single index");
  return inv_11(q.inputs[0], q.descendant, n);
}

Scalar inv_11(int k, int l, int n) {
  check_index(k, n, "inv_11");
  if (l < 0) throw UsageError("inv_11: negative descendant power");
  if (l >= 2)
    throw UnsupportedQueryError("inv_11: descendant powers beyond u^1 are not computed");
  if (l == 0) return Scalar(0);  // the one-point invariant without descendant vanishes
  // Descendant u^1: 1/24 times the Mukai pairing composed with the
  // coproduct of the insertion.
  Scalar acc(0);
  AnFamily fiber(n, 1);
  for (const auto& [left, right] : coproduct(BarWord{Head::Eps, k})) {
    UChain a(n, 1, 2 * n), b(n, 1, 2 * n);
    a.add_term(left, 0, TSeries::constant(n, 1, Scalar(1)));
    b.add_term(right, 0, TSeries::constant(n, 1, Scalar(1)));
    acc += mukai_pairing(a, b, fiber).constant_term();
  }
  return Scalar(1, 24) * acc;
}

}  // namespace angw
