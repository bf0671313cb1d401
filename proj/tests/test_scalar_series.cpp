#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angw/splitting.hpp"
#include "angw/tseries.hpp"

using namespace angw;

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a(2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK((a + Scalar(1, 2)).is_one());
  CHECK((Scalar(1, 3) * Scalar(3)).is_one());
  CHECK(Scalar::from_string("-6/8").to_string() == "-3/4");
  CHECK(Scalar::from_string("7").is_integer());
  CHECK_THROWS_AS(Scalar(1, 0), UsageError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), UsageError);
  CHECK(Scalar(-5, 10) < Scalar(0));
  CHECK((-Scalar(3, 7)).to_string() == "-3/7");
}

namespace {

// Deterministic small series generator for the ring-axiom sweep.
TSeries pseudo_series(int nvars, int cap, unsigned seed) {
  TSeries s(nvars, cap);
  unsigned state = seed * 2654435761u + 1;
  for (int trial = 0; trial < 6; ++trial) {
    Expo e(nvars, 0);
    int budget = cap - 1;
    for (int j = 0; j < nvars; ++j) {
      state = state * 1664525u + 1013904223u;
      int d = static_cast<int>(state >> 28) % (budget + 1);
      e[j] = d;
      budget -= d;
    }
    state = state * 1664525u + 1013904223u;
    long num = static_cast<long>(state % 11) - 5;
    state = state * 1664525u + 1013904223u;
    long den = 1 + static_cast<long>(state % 4);
    s.add_term(e, Scalar(num, den));
  }
  return s;
}

}  // namespace

TEST_CASE("series ring axioms hold exactly on sampled instances") {
  const int nvars = 3, cap = 4;
  for (unsigned seed = 0; seed < 12; ++seed) {
    TSeries a = pseudo_series(nvars, cap, 3 * seed);
    TSeries b = pseudo_series(nvars, cap, 3 * seed + 1);
    TSeries c = pseudo_series(nvars, cap, 3 * seed + 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a - a == TSeries(nvars, cap));
  }
}

TEST_CASE("series multiplication examples") {
  // (1 + t0)(1 - t0) at cap 3.
  TSeries one = TSeries::constant(1, 3, Scalar(1));
  TSeries t0 = TSeries::variable(1, 3, 0);
  TSeries prod = (one + t0) * (one - t0);
  TSeries want = one - t0 * t0;
  CHECK(prod == want);

  // t0 * t1 at total-degree cap 2 truncates to zero.
  TSeries a = TSeries::variable(2, 2, 0);
  TSeries b = TSeries::variable(2, 2, 1);
  CHECK((a * b).is_zero());

  // Multiplication by 1 is the identity.
  TSeries p = TSeries::constant(1, 4, Scalar(1)) + TSeries::variable(1, 4, 0) +
              TSeries::variable(1, 4, 0) * TSeries::variable(1, 4, 0);
  CHECK(p * TSeries::constant(1, 4, Scalar(1)) == p);

  CHECK_THROWS_AS(TSeries(2, 3) * TSeries(2, 4), UsageError);
  CHECK_THROWS_AS(TSeries(2, 3) * TSeries(3, 3), UsageError);
}

TEST_CASE("series calculus helpers") {
  const int n = 2, cap = 5;
  TSeries t0 = TSeries::variable(n, cap, 0), t1 = TSeries::variable(n, cap, 1);
  TSeries f = t0 * t0 * t1 + Scalar(3) * t1;
  CHECK(f.derivative(0) == Scalar(2) * (t0 * t1));
  CHECK(f.derivative(1) == t0 * t0 + TSeries::constant(n, cap, Scalar(3)));
  CHECK(f.homogeneous_part(3) == t0 * t0 * t1);
  CHECK(f.homogeneous_part(2).is_zero());

  // Substitution: f(t0 -> t1, t1 -> t0^2) stays exact.
  std::vector<TSeries> g = {t1, t0 * t0};
  CHECK(f.substitute(g) == t1 * t1 * (t0 * t0) + Scalar(3) * (t0 * t0));

  // Weighted scaling acts per monomial.
  TSeries e = f.weighted_scale({Scalar(1), Scalar(1, 2)});
  CHECK(e == Scalar(5, 2) * (t0 * t0 * t1) + Scalar(3, 2) * t1);
}

TEST_CASE("lift product coefficients") {
  // c_{k,0} = 1 for every k and level.
  CHECK(splitting_coeff(0, 0, 5).is_one());
  CHECK(splitting_coeff(3, 0, 7).is_one());
  // (k=1, l=2, n=2): (1+1)(1+1+3) = 10.
  CHECK(splitting_coeff(1, 2, 2) == Scalar(10));
  // (k=n-1, l=1) = n.
  for (int n = 1; n <= 8; ++n) CHECK(splitting_coeff(n - 1, 1, n) == Scalar(n));
  // Recursion c_{k,l+1} = c_{k,l} (k+1+l(n+1)).
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < 6; ++l)
        CHECK(splitting_coeff(k, l + 1, n) ==
              splitting_coeff(k, l, n) * Scalar(k + 1 + l * (n + 1)));
  CHECK_THROWS_AS(splitting_coeff(5, 0, 3), UsageError);
}

TEST_CASE("laurent container tracks constancy") {
  ULaurent u(2, 3);
  u.add(0, TSeries::constant(2, 3, Scalar(1)));
  CHECK(u.constant_in_u());
  u.add(2, TSeries::variable(2, 3, 0));
  CHECK(!u.constant_in_u());
  CHECK(u.at(2) == TSeries::variable(2, 3, 0));
  CHECK(u.at(5).is_zero());
}
