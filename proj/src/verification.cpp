#include "angw/verification.hpp"

#include <sstream>

namespace angw {
namespace checks {

namespace {

UChain basis_word(int n, int tcap, int bar_cap, Head h, int tail, int upow = 0) {
  UChain c(n, tcap, bar_cap);
  c.add_term(h, tail, upow, TSeries::constant(n, tcap, Scalar(1)));
  return c;
}

VerifyItem fail(std::string name, std::string detail) {
  return VerifyItem{std::move(name), false, std::move(detail)};
}
VerifyItem ok(std::string name) { return VerifyItem{std::move(name), true, ""}; }

int auto_bar_cap(int n, int order, int u_cap) { return (n + 1) * (order + u_cap + 1) + n; }

}  // namespace

VerifyItem hh_dimension(int n) {
  const std::string name = "hh_dimension(n=" + std::to_string(n) + ")";
  HomologyReport rep = hochschild_homology(n, 3 * n + 2);
  if (rep.odd_dim != n) return fail(name, "odd rank " + std::to_string(rep.odd_dim));
  if (rep.even_dim_stable != 0)
    return fail(name, "even classes in stable range: " + std::to_string(rep.even_dim_stable));
  if (!rep.basis_is_standard) return fail(name, "kernel basis is not {eps|eps^j, j < n}");
  return ok(name);
}

VerifyItem mukai_table(int n) {
  const std::string name = "mukai_table(n=" + std::to_string(n) + ")";
  AnFamily fiber(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UChain a = basis_word(n, 1, 2 * n, Head::Eps, i);
      UChain b = basis_word(n, 1, 2 * n, Head::Eps, j);
      Scalar got = mukai_pairing(a, b, fiber).constant_term();
      Scalar want(i + j == n - 1 ? 1 : 0);
      if (got != want)
        return fail(name, "(" + std::to_string(i) + "," + std::to_string(j) + ") -> " +
                              got.to_string());
    }
  return ok(name);
}

VerifyItem coproduct_formula(int n) {
  const std::string name = "coproduct_formula(n=" + std::to_string(n) + ")";
  for (int k = 0; k <= 2 * n; ++k) {
    auto terms = coproduct(BarWord{Head::Eps, k});
    if (static_cast<int>(terms.size()) != k + 1)
      return fail(name, "k=" + std::to_string(k) + ": " + std::to_string(terms.size()) + " terms");
    for (int i = 0; i <= k; ++i) {
      if (terms[i].first.tail != i || terms[i].second.tail != k - i ||
          terms[i].first.head != Head::Eps || terms[i].second.head != Head::Eps)
        return fail(name, "k=" + std::to_string(k) + ", slot " + std::to_string(i));
    }
  }
  return ok(name);
}

VerifyItem splitting_properties(int n, int order) {
  const std::string name = "splitting_properties(n=" + std::to_string(n) + ")";
  const int u_cap = order + 2;
  const int bar_cap = auto_bar_cap(n, order, u_cap);
  AnFamily fiber(n, 1);
  SplittingBasis basis = make_splitting_basis(n, u_cap, bar_cap, 1);
  WeightTable wt(n);
  for (int j = 0; j < n; ++j) {
    if (!cyclic_differential(basis.s[j], fiber).is_zero())
      return fail(name, "s_" + std::to_string(j) + " is not closed through u^" +
                            std::to_string(u_cap));
    Scalar w = wt.word_weight(BarWord{Head::Eps, j});
    if (!is_weight_homogeneous(basis.s[j], w, wt))
      return fail(name, "s_" + std::to_string(j) + " is not weight-homogeneous");
    if (!(basis.s[j].u_slice(0).begin()->first == BarWord{Head::Eps, j}))
      return fail(name, "s_" + std::to_string(j) + " mod u is not eps|eps^" + std::to_string(j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ULaurent p = hres_pairing(basis.s[i], basis.s[j], fiber);
      if (!p.constant_in_u())
        return fail(name, "hres(s_i, s_j) not constant in u at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      Scalar got = p.at(0).constant_term();
      if (got != Scalar(i + j == n - 1 ? 1 : 0))
        return fail(name, "hres(s_i, s_j) wrong at (" + std::to_string(i) + "," +
                              std::to_string(j) + "): " + got.to_string());
    }
  return ok(name);
}

VerifyItem splitting_uniqueness(int n, int order) {
  const std::string name = "splitting_uniqueness(n=" + std::to_string(n) + ")";
  const int u_cap = order + 2;
  for (int k = 0; k < n; ++k)
    for (int l = 1; l <= u_cap; ++l) {
      int rank = lift_ambiguity_rank(n, k, l, (n + 1) * (u_cap + 2));
      if (rank != 0)
        return fail(name, "ambiguity rank " + std::to_string(rank) + " at k=" +
                              std::to_string(k) + ", u-order " + std::to_string(l));
    }
  return ok(name);
}

VerifyItem costello_values(int n) {
  const std::string name = "costello_values(n=" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar want(i + j + k == 2 * n - 2 ? 1 : 0);
        if (inv_03(i, j, k, n) != want)
          return fail(name, "inv_03(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
      }
  for (int k = 0; k < n; ++k) {
    if (inv_11(k, 0, n) != Scalar(0)) return fail(name, "inv_11(k,0) nonzero at k=" + std::to_string(k));
    Scalar want = (k == n - 1) ? Scalar(n, 24) : Scalar(0);
    if (inv_11(k, 1, n) != want) return fail(name, "inv_11(k,1) wrong at k=" + std::to_string(k));
    LambdaExpansion le = lambda_expansion(k, n);
    if (static_cast<int>(le.pairs.size()) != k + 1 || !le.correction.is_zero())
      return fail(name, "one-insertion bookkeeping wrong at k=" + std::to_string(k));
  }
  return ok(name);
}

VerifyItem commutator_identity(int n) {
  const std::string name = "commutator_identity(n=" + std::to_string(n) + ")";
  AnFamily fiber(n, 1);
  CheckReport rep = check_u_commutator(fiber, 3 * (n + 1));
  if (!rep.pass) return fail(name, rep.counterexample);
  return ok(name);
}

VerifyItem differential_squares(int n, int order) {
  const std::string name = "differential_squares(n=" + std::to_string(n) + ")";
  const int u_cap = order + 2;
  const int bar_cap = auto_bar_cap(n, order, u_cap);
  AnFamily fam(n, order);
  for (int head = 0; head < 2; ++head)
    for (int k = 0; k + (n + 1) <= bar_cap; ++k) {
      UChain w = basis_word(n, order, bar_cap, head == 0 ? Head::One : Head::Eps, k);
      if (!hoch_b(hoch_b(w, fam), fam).is_zero())
        return fail(name, "b^2 != 0 on " + word_string(w.terms().begin()->first.word));
      if (!cyclic_differential(cyclic_differential(w, fam), fam).is_zero())
        return fail(name, "(b+uB)^2 != 0 on " + word_string(w.terms().begin()->first.word));
    }
  return ok(name);
}

VerifyItem good_splitting(int n, int order) {
  const std::string name = "good_splitting(n=" + std::to_string(n) + ")";
  const int u_cap = order + 2;
  const int bar_cap = auto_bar_cap(n, order, u_cap);
  AnFamily fiber(n, 1);
  SplittingBasis basis = make_splitting_basis(n, u_cap, bar_cap, 1);
  GoodSplittingReport rep = check_good_splitting(basis, fiber);
  if (!rep.preserved || !rep.omega_compatible) return fail(name, rep.detail);
  Scalar want = -Scalar(n - 1, 2 * (n + 1));
  if (rep.r != want)
    return fail(name, "extracted r = " + rep.r.to_string() + ", expected " + want.to_string());
  return ok(name);
}

namespace {

// The displayed principal parts of the trivialized expansion, by depth and
// t-order, as s-coordinate series.
TSeries expected_j_coord(int n, int order, int depth, int t_order, int l) {
  TSeries r(n, order);
  auto tvar = [&](int i) { return TSeries::variable(n, order, i); };
  if (depth == 1 && t_order == 1) {
    // -sum_i t_i s_{n-1-i}
    int i = n - 1 - l;
    if (i >= 0 && i <= n - 1) r += Scalar(-1) * tvar(i);
  } else if (depth == 2 && t_order == 2) {
    // (1/2) sum_{i+j<=n-1} t_i t_j s_{n-1-i-j}
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; j <= n - 1; ++j)
        if (i + j == n - 1 - l) r += Scalar(1, 2) * (tvar(i) * tvar(j));
  } else if (depth == 1 && t_order == 2) {
    // sum_{i+j>=n+1} (j - n/2) t_i t_j s_{2n-i-j}
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; j <= n - 1; ++j)
        if (i + j == 2 * n - l && i + j >= n + 1)
          r += (Scalar(j) - Scalar(n, 2)) * (tvar(i) * tvar(j));
  } else if (depth == 2 && t_order == 3) {
    // sum_{i+j+k>=n+1} (n/6 - k/2) t_i t_j t_k s_{2n-i-j-k}
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; j <= n - 1; ++j)
        for (int k = 0; k <= n - 1; ++k)
          if (i + j + k == 2 * n - l && i + j + k >= n + 1)
            r += (Scalar(n, 6) - Scalar(k, 2)) * (tvar(i) * (tvar(j) * tvar(k)));
  }
  return r;
}

}  // namespace

VerifyItem solver_j_terms(int n, int order) {
  const std::string name = "solver_j_terms(n=" + std::to_string(n) + ")";
  if (order < 4) return fail(name, "needs order >= 4");
  SolverState st = solve_primitive_form(n, order, order + 2);
  struct Case {
    int depth, t_order;
  } cases[] = {{1, 1}, {2, 2}, {1, 2}, {2, 3}};
  for (const auto& c : cases)
    for (int l = 0; l < n; ++l) {
      TSeries got = st.j_coord(c.depth, l).homogeneous_part(c.t_order);
      TSeries want = expected_j_coord(n, order, c.depth, c.t_order, l);
      if (!(got == want)) {
        std::ostringstream os;
        os << "J_{-" << c.depth << "} order " << c.t_order << " coordinate of s_" << l
           << ": got " << got.to_string() << ", want " << want.to_string();
        return fail(name, os.str());
      }
    }
  return ok(name);
}

VerifyItem flat_coordinates_match(int n, int order) {
  const std::string name = "flat_coordinates(n=" + std::to_string(n) + ")";
  SolverState st = solve_primitive_form(n, order, order + 2);
  std::map<int, TSeries> tau = flat_coordinates(st);
  for (int k = 0; k < n; ++k) {
    TSeries want(n, order);
    want += Scalar(-1) * TSeries::variable(n, order, k);
    for (int j = k + 2; j <= n - 1; ++j) {
      int i = n + 1 + k - j;
      if (i < 0 || i > n - 1) continue;
      want += (Scalar(j) - Scalar(n, 2)) *
              (TSeries::variable(n, order, i) * TSeries::variable(n, order, j));
    }
    TSeries got = tau.at(k).homogeneous_part(1) + tau.at(k).homogeneous_part(2);
    if (!(got == want))
      return fail(name, "tau_" + std::to_string(k) + " = " + got.to_string() + ", want " +
                            want.to_string());
  }
  return ok(name);
}

VerifyItem correlator_values(int n, int order) {
  const std::string name = "correlators(n=" + std::to_string(n) + ")";
  if (n < 2) return fail(name, "needs n >= 2");
  SolverState st = solve_primitive_form(n, order, order + 2);
  PotentialSeries pot = potential_derivatives(st);

  // Two-point: the metric computed from the higher residue pairing of the
  // covariant derivatives, pulled back to flat coordinates, must be the
  // constant delta pairing (exact through degree order-2).
  std::vector<UChain> grad;
  for (int j = 0; j < n; ++j)
    grad.push_back(ggm_connection_dt(j, st.zeta, st.fam).shift_u(1));
  std::vector<std::vector<TSeries>> g(n, std::vector<TSeries>(n, TSeries(n, order)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ULaurent p = hres_pairing(grad[i], grad[j], st.fam);
      g[i][j] = p.at(0);
    }
  std::vector<TSeries> tinv = invert_coordinates(n, order, pot.coords);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      TSeries acc(n, order);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          TSeries term = tinv[i].derivative(a) * tinv[j].derivative(b) * g[i][j].substitute(tinv);
          acc += term;
        }
      TSeries want = TSeries::constant(n, order, Scalar(a + b == n - 1 ? 1 : 0));
      TSeries diff = acc - want;
      for (int d = 0; d <= order - 2; ++d)
        if (!diff.homogeneous_part(d).is_zero())
          return fail(name, "flat metric (" + std::to_string(a) + "," + std::to_string(b) +
                                ") = " + acc.to_string());
      if (correlator(st, pot, {a, b}) != want.constant_term())
        return fail(name, "two-point table mismatch");
    }

  // Three-point: tau-derivatives against the one-insertion invariants.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar got = correlator(st, pot, {i, j, k});
        Scalar want = inv_03(phi_iso(i, n), phi_iso(j, n), phi_iso(k, n), n);
        if (got != want)
          return fail(name, "three-point (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") = " + got.to_string());
      }

  // Four-point endpoint.
  Scalar four = correlator(st, pot, {1, 1, n - 1, n - 1});
  if (four != Scalar(1)) return fail(name, "four-point = " + four.to_string());
  return ok(name);
}

VerifyItem dimension_and_wdvv(int n, int order) {
  const std::string name = "dimension_and_wdvv(n=" + std::to_string(n) + ")";
  SolverState st = solve_primitive_form(n, order, order + 2);
  PotentialSeries pot = potential_derivatives(st);
  CheckReport dim = check_dimension_axiom(st, pot);
  if (!dim.pass) return fail(name, "dimension: " + dim.counterexample);
  CheckReport wdvv = check_wdvv(st, pot);
  if (!wdvv.pass) return fail(name, "wdvv: " + wdvv.counterexample);
  if (n >= 2) {
    CheckReport rec = check_four_point_reconstruction(st, pot);
    if (!rec.pass) return fail(name, "reconstruction: " + rec.counterexample);
  }
  return ok(name);
}

VerifyItem primitive_axioms(int n, int order) {
  const std::string name = "primitive_axioms(n=" + std::to_string(n) + ")";
  SolverState st = solve_primitive_form(n, order, order + 2);
  PrimitiveAxiomReport rep = check_primitive_axioms(st);
  if (!rep.all()) return fail(name, rep.detail);
  Scalar want = -Scalar(n - 1, 2 * (n + 1));
  if (rep.r != want) return fail(name, "homogeneity constant " + rep.r.to_string());
  return ok(name);
}

VerifyItem stability(int n, int order) {
  const std::string name = "stability(n=" + std::to_string(n) + ")";
  SolverState a = solve_primitive_form(n, order, order + 2);
  // Raising bar_cap alone by n+1 must change nothing.
  {
    SolverState a2 = solve_primitive_form(n, order, order + 2,
                                          auto_bar_cap(n, order, order + 2) + (n + 1));
    for (int depth = 1; depth < order; ++depth)
      for (int l = 0; l < n; ++l)
        if (!(a.j_coord(depth, l) == a2.j_coord(depth, l)))
          return fail(name, "principal parts moved under a bar_cap increase");
  }
  // Raise u_cap by n+1 and bar_cap accordingly (the auto cap for the
  // larger u_cap, which exceeds the old one by well over n+1).
  SolverState b = solve_primitive_form(n, order, order + 2 + (n + 1));
  for (int depth = 1; depth < order; ++depth)
    for (int l = 0; l < n; ++l)
      if (!(a.j_coord(depth, l) == b.j_coord(depth, l)))
        return fail(name, "J_{-" + std::to_string(depth) + "} coordinate of s_" +
                              std::to_string(l) + " moved under cap increase");
  PotentialSeries pa = potential_derivatives(a);
  PotentialSeries pb = potential_derivatives(b);
  for (int k = 0; k < n; ++k) {
    if (!(pa.coords.at(k) == pb.coords.at(k))) return fail(name, "flat coordinates moved");
    if (!(pa.derivs.at(k) == pb.derivs.at(k))) return fail(name, "potential derivatives moved");
  }
  if (n >= 2 && correlator(a, pa, {1, 1, n - 1, n - 1}) != correlator(b, pb, {1, 1, n - 1, n - 1}))
    return fail(name, "four-point moved");
  return ok(name);
}

}  // namespace checks

std::vector<VerifyItem> verify_config(int n, int order, int u_cap, int bar_cap) {
  (void)u_cap;
  (void)bar_cap;
  std::vector<VerifyItem> items;
  items.push_back(checks::hh_dimension(n));
  items.push_back(checks::mukai_table(n));
  items.push_back(checks::coproduct_formula(n));
  items.push_back(checks::splitting_properties(n, order));
  items.push_back(checks::splitting_uniqueness(n, order));
  items.push_back(checks::costello_values(n));
  items.push_back(checks::commutator_identity(n));
  items.push_back(checks::differential_squares(n, order));
  items.push_back(checks::good_splitting(n, order));
  if (order >= 4) {
    items.push_back(checks::solver_j_terms(n, order));
    items.push_back(checks::flat_coordinates_match(n, order));
    if (n >= 2) items.push_back(checks::correlator_values(n, order));
    items.push_back(checks::dimension_and_wdvv(n, order));
    items.push_back(checks::primitive_axioms(n, order));
    items.push_back(checks::stability(n, order));
  }
  return items;
}

}  // namespace angw
