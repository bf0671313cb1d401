#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angw/family.hpp"

using namespace angw;

TEST_CASE("family structure constants") {
  AnFamily f2 = make_family(2, 4);
  CHECK(f2.mu_value(0) == TSeries::variable(2, 4, 0));
  CHECK(f2.mu_value(1) == TSeries::variable(2, 4, 1));
  CHECK(f2.mu_value(2).is_zero());
  CHECK(f2.mu_value(3) == TSeries::constant(2, 4, Scalar(1, 3)));

  AnFamily f1 = make_family(1, 4);
  CHECK(f1.mu_value(0) == TSeries::variable(1, 4, 0));
  CHECK(f1.mu_value(1).is_zero());
  CHECK(f1.mu_value(2) == TSeries::constant(1, 4, Scalar(1, 2)));

  // At t = 0 only the top multiplication survives.
  for (int n = 1; n <= 6; ++n) {
    AnFamily fib = make_family(n, 4).central_fiber();
    for (int k = 0; k < n; ++k) CHECK(fib.mu_value(k).is_zero());
    CHECK(fib.mu_value(n + 1) == TSeries::constant(n, 1, Scalar(1, n + 1)));
  }
  CHECK_THROWS_AS(make_family(0, 4), UsageError);
}

TEST_CASE("cyclic pairing table and bilinearity") {
  CHECK(cyclic_pairing({Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}) == Scalar(1));
  CHECK(cyclic_pairing({Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0)}).is_zero());
  CHECK(cyclic_pairing({Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1)}).is_zero());
  // (a*1 + b*eps, eps) = a.
  CHECK(cyclic_pairing({Scalar(5), Scalar(7)}, {Scalar(0), Scalar(1)}) == Scalar(5));
}

TEST_CASE("pairing of structure maps is cyclically invariant on the fiber") {
  for (int n = 1; n <= 4; ++n) {
    AnFamily fib = make_family(n, 1);
    for (int len = 2; len <= n + 3; ++len) {
      for (unsigned mask = 0; mask < (1u << len); ++mask) {
        std::vector<bool> word(len);
        for (int i = 0; i < len; ++i) word[i] = (mask >> i) & 1;
        auto value = [&](const std::vector<bool>& w) {
          std::vector<bool> inputs(w.begin(), w.end() - 1);
          AlgElement m = mu_eval(fib, inputs);
          std::pair<Scalar, Scalar> last{w.back() ? Scalar(0) : Scalar(1),
                                         w.back() ? Scalar(1) : Scalar(0)};
          return cyclic_pairing({m.one.constant_term(), m.eps.constant_term()}, last);
        };
        Scalar base = value(word);
        std::vector<bool> rot(word);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        CHECK(value(rot) == base);
      }
    }
  }
}

TEST_CASE("kodaira-spencer cochains") {
  AnFamily fam = make_family(3, 4);
  Cochain k0 = ks_map(0, fam);
  CHECK(k0.one_value(0) == TSeries::constant(3, 4, Scalar(1)));
  CHECK(k0.one_value(1).is_zero());
  Cochain k2 = ks_map(2, fam);
  CHECK(k2.one_value(2) == TSeries::constant(3, 4, Scalar(1)));
  CHECK(k2.parity() == Parity::Even);
  CHECK_THROWS_AS(ks_map(3, fam), UsageError);

  // Distinct directions have disjoint arity support.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(ks_map(i, fam).one_value(j).is_zero());
}

TEST_CASE("euler-scaling cochain") {
  // At t = 0 only the arity-(n+1) component survives: (2-(n+1))/(n+1).
  AnFamily fib2 = make_family(2, 1);
  Cochain e2 = ks_euler_cochain(fib2);
  CHECK(e2.one_value(3) == TSeries::constant(2, 1, Scalar(-1, 3)));
  CHECK(e2.one_value(0).is_zero());

  // Arity 2 always carries the factor 2-2 = 0.
  AnFamily fam4 = make_family(4, 4);
  CHECK(ks_euler_cochain(fam4).one_value(2).is_zero());

  // n=3, arity 1: (2-1) t_1.
  AnFamily fam3 = make_family(3, 4);
  CHECK(ks_euler_cochain(fam3).one_value(1) == TSeries::variable(3, 4, 1));
}

TEST_CASE("weight table and term weights") {
  for (int n = 2; n <= 6; ++n) {
    WeightTable wt(n);
    // eps|eps^{n-1} is the distinguished weight (n-1)/(n+1).
    CHECK(wt.word_weight(BarWord{Head::Eps, n - 1}) == Scalar(n - 1, n + 1));
    CHECK(wt.word_weight(BarWord{Head::One, 0}).is_zero());
    // The telescoping along a lift ladder keeps the weight fixed.
    for (int l = 0; l <= 4; ++l) {
      Scalar w = weight_of(BarWord{Head::Eps, n - 1 + (n + 1) * l}, l, Expo(n, 0), wt);
      CHECK(w == Scalar(n - 1, n + 1));
    }
    // t-exponents contribute their chain-side weights.
    Expo e(n, 0);
    e[1] = 2;
    CHECK(weight_of(BarWord{Head::One, 0}, 0, e, wt) == Scalar(2) * wt.t_chain_weight(1));
  }
}

TEST_CASE("family structure maps are graded of weight 2-k") {
  for (int n = 1; n <= 6; ++n) {
    AnFamily fam = make_family(n, 3);
    WeightTable wt(n);
    for (const auto& [k, coeff] : fam.mu()) {
      // weight(value) + parameter weight - k * wt(eps) == 2 - k
      Scalar param(0);
      if (k <= n - 1) param = wt.t_parameter_weight(k);
      Scalar lhs = param - Scalar(k) * wt.eps_weight();
      CHECK(lhs == Scalar(2 - k));
      (void)coeff;
    }
  }
}

TEST_CASE("weight decomposition splits chains by weight") {
  const int n = 2;
  WeightTable wt(n);
  UChain x(n, 3, 20);
  x.add_term(Head::Eps, 1, 0, TSeries::constant(n, 3, Scalar(1)));
  x.add_term(Head::Eps, 4, 1, TSeries::constant(n, 3, Scalar(-2)));  // same weight as above
  x.add_term(Head::One, 2, 0, TSeries::constant(n, 3, Scalar(5)));
  auto strata = weight_decomposition(x, wt);
  CHECK(strata.size() == 2);
  CHECK(is_weight_homogeneous(strata.begin()->second, strata.begin()->first, wt));
}
