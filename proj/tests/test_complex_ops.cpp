#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angw/complex_ops.hpp"

using namespace angw;

namespace {

UChain word(int n, int tcap, int bar_cap, Head h, int tail, int upow = 0) {
  UChain c(n, tcap, bar_cap);
  c.add_term(h, tail, upow, TSeries::constant(n, tcap, Scalar(1)));
  return c;
}

}  // namespace

TEST_CASE("fiber differential matches the closed-form table") {
  for (int n = 1; n <= 6; ++n) {
    AnFamily fib = make_family(n, 1);
    const int cap = 4 * n + 8;
    for (int k = 0; k <= 3 * n; ++k) {
      UChain be = hoch_b(word(n, 1, cap, Head::Eps, k), fib);
      if (k < n) {
        CHECK(be.is_zero());
      } else {
        UChain want = word(n, 1, cap, Head::One, k - n);
        CHECK(be == want);
      }
      CHECK(hoch_b(word(n, 1, cap, Head::One, k), fib).is_zero());
    }
  }
}

TEST_CASE("family differential carries the parameter terms") {
  // n=2: b(eps|eps^1) = t_1 * 1|eps^1 (curvature insertions are degenerate
  // in the reduced complex, so no t_0 term survives).
  AnFamily fam = make_family(2, 4);
  UChain be = hoch_b(word(2, 4, 20, Head::Eps, 1), fam);
  UChain want(2, 4, 20);
  want.add_term(Head::One, 1, 0, TSeries::variable(2, 4, 1));
  CHECK(be == want);

  // Generic n: b(eps|eps^k) = sum_m m t_m 1|eps^{k-m+1} + [k>=n] 1|eps^{k-n}.
  AnFamily fam4 = make_family(4, 3);
  UChain b5 = hoch_b(word(4, 3, 30, Head::Eps, 5), fam4);
  UChain w5(4, 3, 30);
  for (int m = 1; m <= 3; ++m)
    w5.add_term(Head::One, 5 - m + 1, 0, Scalar(m) * TSeries::variable(4, 3, m));
  w5.add_term(Head::One, 1, 0, TSeries::constant(4, 3, Scalar(1)));
  CHECK(b5 == w5);
}

TEST_CASE("cyclic differential and squares") {
  for (int n = 1; n <= 5; ++n) {
    AnFamily fam = make_family(n, 4);
    const int cap = 4 * (n + 1) + n;
    for (int head = 0; head < 2; ++head)
      for (int k = 0; k + n + 1 <= cap; ++k) {
        UChain w = word(n, 4, cap, head ? Head::Eps : Head::One, k);
        CHECK(hoch_b(hoch_b(w, fam), fam).is_zero());
        CHECK(cyclic_differential(cyclic_differential(w, fam), fam).is_zero());
        UChain bb = connes_B(connes_B(w));
        CHECK(bb.is_zero());
      }
  }
}

TEST_CASE("connes operator and gamma") {
  UChain e2 = word(3, 1, 12, Head::Eps, 2);
  UChain want = Scalar(3) * word(3, 1, 12, Head::One, 3);
  CHECK(connes_B(e2) == want);
  CHECK(connes_B(word(3, 1, 12, Head::One, 5)).is_zero());
  CHECK(connes_B(word(3, 1, 12, Head::Eps, 0)) == word(3, 1, 12, Head::One, 1));

  UChain x = Scalar(2) * word(2, 1, 10, Head::Eps, 1) + word(2, 1, 10, Head::One, 1);
  UChain gx = gamma_op(x);
  UChain gw = Scalar(-2) * word(2, 1, 10, Head::Eps, 1) - word(2, 1, 10, Head::One, 1);
  CHECK(gx == gw);
  CHECK(gamma_op(word(2, 1, 10, Head::Eps, 0)).is_zero());
}

TEST_CASE("differential moves weight by -1 and B by +1") {
  for (int n = 2; n <= 5; ++n) {
    AnFamily fam = make_family(n, 3);
    WeightTable wt(n);
    for (int k = 0; k <= 2 * n + 2; ++k) {
      UChain w = word(n, 3, 3 * n + 6, Head::Eps, k);
      Scalar base = wt.word_weight(BarWord{Head::Eps, k});
      UChain bw = hoch_b(w, fam);
      if (!bw.is_zero()) CHECK(is_weight_homogeneous(bw, base - Scalar(1), wt));
      UChain Bw = connes_B(w);
      if (!Bw.is_zero()) CHECK(is_weight_homogeneous(Bw, base + Scalar(1), wt));
    }
  }
}

TEST_CASE("cap action of unit-valued cochains") {
  AnFamily fam = make_family(3, 4);
  Cochain phi = ks_map(1, fam);
  // Arity beyond the word length gives zero.
  CHECK(cap_b11(phi, word(3, 4, 20, Head::Eps, 0), fam).is_zero());
  // Tail shift with coefficient one.
  CHECK(cap_b11(phi, word(3, 4, 20, Head::Eps, 4), fam) == word(3, 4, 20, Head::Eps, 3));
  CHECK(cap_b11(phi, word(3, 4, 20, Head::One, 4), fam) == word(3, 4, 20, Head::One, 3));

  // The cyclic-type cap of a unit-valued cochain is degenerate.
  CHECK(cap_B11(phi, word(3, 4, 20, Head::Eps, 5), fam).is_zero());
  CHECK(cap_B11(ks_euler_cochain(fam), word(3, 4, 20, Head::Eps, 5), fam).is_zero());

  // Eps-valued cochains are out of scope and must be rejected loudly.
  Cochain bad(3, 4, Parity::Even);
  bad.set_component(1, AlgElement(TSeries(3, 4), TSeries::constant(3, 4, Scalar(1))));
  CHECK_THROWS_AS(cap_b11(bad, word(3, 4, 20, Head::Eps, 3), fam), UnsupportedQueryError);
  CHECK_THROWS_AS(cap_B11(bad, word(3, 4, 20, Head::Eps, 3), fam), UnsupportedQueryError);
}

TEST_CASE("cap action commutes with the differential for cocycles") {
  for (int n = 2; n <= 4; ++n) {
    AnFamily fam = make_family(n, 3);
    for (int j = 0; j < n; ++j) {
      Cochain phi = ks_map(j, fam);
      for (int head = 0; head < 2; ++head)
        for (int k = 0; k <= 2 * n + 2; ++k) {
          UChain w = word(n, 3, 3 * n + 6, head ? Head::Eps : Head::One, k);
          UChain lhs = hoch_b(cap_b11(phi, w, fam), fam);
          UChain rhs = cap_b11(phi, hoch_b(w, fam), fam);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("insertion measures the failure of B to commute with the cap") {
  // [B, b^{1|1}(phi_j)] = -iota(phi_j) termwise.
  for (int n = 2; n <= 4; ++n) {
    AnFamily fam = make_family(n, 3);
    for (int j = 0; j < n; ++j) {
      Cochain phi = ks_map(j, fam);
      for (int k = 0; k <= 2 * n + 2; ++k) {
        UChain w = word(n, 3, 3 * n + 6, Head::Eps, k);
        UChain lhs = connes_B(cap_b11(phi, w, fam)) - cap_b11(phi, connes_B(w), fam);
        UChain rhs = -cochain_insertion(phi, w, fam);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("trivialization exponential conjugates the family differential to the fiber one") {
  for (int n = 1; n <= 4; ++n) {
    AnFamily fam = make_family(n, 4);
    AnFamily fib = make_central_fiber(n, 4);
    const int cap = 4 * (n + 1) + n;
    for (int head = 0; head < 2; ++head)
      for (int k = 0; k <= 2 * n + 3; ++k)
        for (int p = -1; p <= 1; ++p) {
          UChain w = word(n, 4, cap, head ? Head::Eps : Head::One, k, p);
          UChain lhs = trivialization_exp(cyclic_differential(w, fam), fam, -1);
          UChain rhs = cyclic_differential(trivialization_exp(w, fam, -1), fib);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("trivialization is the identity at t = 0 and inverts exactly") {
  AnFamily fam = make_family(3, 4);
  UChain w = word(3, 4, 25, Head::Eps, 7, 2);
  UChain z = trivialization_exp(w, fam, -1);
  CHECK(trivialization_exp(z, fam, +1) == w);
  AnFamily fib = make_family(3, 1);
  UChain w0 = word(3, 1, 25, Head::Eps, 7, 2);
  CHECK(trivialization_exp(w0, fib, -1) == w0);
  // Single application of -T/u on a tail-7 word has t-order 1 and u >= -1.
  UChain once = shift_operator_T(w, fam).shift_u(-1);
  CHECK(once.u_min() == 1);
  for (const auto& [key, c] : once.terms()) CHECK(c.min_degree() == 1);
}
