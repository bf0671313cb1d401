#include "angw/solver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "angw/linalg.hpp"

namespace angw {

TSeries SolverState::j_coord(int depth, int j) const {
  auto it = J.find(depth);
  if (it == J.end() || j < 0 || j >= n) return TSeries(n, order);
  return it->second[j];
}

int phi_iso(int i, int n) {
  if (i < 0 || i > n - 1) throw UsageError("phi_iso: index out of range");
  return n - 1 - i;
}

SolverState solve_primitive_form(int n, int order, int u_cap, int bar_cap) {
  if (order < 1) throw UsageError("solve_primitive_form: order must be >= 1");
  if (bar_cap < 0) bar_cap = (n + 1) * (order + u_cap + 1) + n;

  SolverState st;
  st.n = n;
  st.order = order;
  st.u_cap = u_cap;
  st.bar_cap = bar_cap;
  st.fam = make_family(n, order);
  st.basis = make_splitting_basis(n, u_cap, bar_cap, order);
  st.r = -Scalar(n - 1, 2 * (n + 1));
  WeightTable wt(n);

  // Trivialized picture: zeta = exp(+T/u) (s_{n-1} + sum_m u^{-m} J_{-m}),
  // with the principal parts J_{-m} in the span of the s_j.  Order by
  // order in t, every negative u-power of the candidate must cancel
  // exactly; each kill condition has a unique solution because the
  // residual lead sits on a homology basis word.
  std::vector<UChain> y_parts;   // t-homogeneous parts of the bracketed sum
  std::vector<UChain> z_parts;   // t-homogeneous parts of zeta
  y_parts.push_back(st.basis.s[n - 1]);
  z_parts.push_back(st.basis.s[n - 1]);
  for (int m = 1; m < order; ++m) st.J[m] = std::vector<TSeries>(n, TSeries(n, order));

  auto shift_T = [&](const UChain& c) {  // (T/u) c
    return shift_operator_T(c, st.fam).shift_u(-1);
  };

  for (int k = 1; k < order; ++k) {
    // Known part: sum_{r=1..k} (T/u)^r / r! applied to the order-(k-r) data.
    UChain work(n, order, bar_cap);
    for (int r = 1; r <= k; ++r) {
      UChain pow = y_parts[k - r];
      Scalar factorial(1);
      for (int s = 1; s <= r; ++s) {
        pow = shift_T(pow);
        factorial *= Scalar(s);
      }
      work += (Scalar(1) / factorial) * pow;
    }

    UChain y_k(n, order, bar_cap);
    for (int m = k; m >= 1; --m) {
      std::map<BarWord, TSeries> slice = work.u_slice(-m);
      UChain correction(n, order, bar_cap);
      for (const auto& [w, coef] : slice) {
        if (w.head == Head::One || w.tail > n - 1) {
          std::ostringstream os;
          os << "solve_primitive_form: no homogeneous lift at order " << k << ": residual lead "
             << word_string(w) << " u^" << -m << " of weight "
             << weight_of(w, -m, Expo(n, 0), wt).to_string()
             << " is outside the homology basis";
          throw UsageError(os.str());
        }
        st.J[m][w.tail] += -coef;
        correction += (-coef) * st.basis.s[w.tail].shift_u(-m);
      }
      work += correction;
      y_k += correction;
    }
    for (const auto& [key, c] : work.terms()) {
      (void)c;
      if (key.upow < 0)
        throw UsageError("solve_primitive_form: negative u-power survived the kill sweep");
    }
    y_parts.push_back(y_k);
    z_parts.push_back(work);
  }

  UChain zeta(n, order, bar_cap);
  for (const auto& part : z_parts) zeta += part;
  st.zeta = zeta;
  return st;
}

std::map<int, TSeries> flat_coordinates(const SolverState& st) {
  if (st.order < 2)
    throw UsageError("flat_coordinates: solve to order >= 2 first");
  std::map<int, TSeries> tau;
  for (int i = 0; i < st.n; ++i) tau[i] = st.j_coord(1, st.n - 1 - i);
  return tau;
}

std::vector<TSeries> invert_coordinates(int n, int cap, const std::map<int, TSeries>& tau) {
  // Split off the linear part and check the normalization.
  std::vector<TSeries> q(n, TSeries(n, cap));  // tau_k + t_k, degree >= 2
  for (int k = 0; k < n; ++k) {
    TSeries lin = tau.at(k) + TSeries::variable(n, cap, k);
    for (const auto& [e, c] : lin.terms()) {
      (void)c;
      if (total_degree(e) < 2)
        throw std::logic_error("flat coordinate inversion: leading coefficient is not -1");
    }
    q[k] = lin;
  }
  std::vector<TSeries> t(n, TSeries(n, cap));
  for (int k = 0; k < n; ++k) t[k] = -TSeries::variable(n, cap, k);
  for (int pass = 0; pass < cap; ++pass) {
    std::vector<TSeries> next(n, TSeries(n, cap));
    for (int k = 0; k < n; ++k) next[k] = -TSeries::variable(n, cap, k) + q[k].substitute(t);
    t = next;
  }
  return t;
}

PotentialSeries potential_derivatives(const SolverState& st) {
  if (st.order < 3)
    throw UsageError("potential_derivatives: solve to order >= 3 first");
  PotentialSeries pot;
  pot.coords = flat_coordinates(st);
  std::vector<TSeries> t_of_tau = invert_coordinates(st.n, st.order, pot.coords);
  // Sanity: the composition tau(t(tau)) must be the identity at truncation.
  for (int k = 0; k < st.n; ++k) {
    TSeries back = pot.coords.at(k).substitute(t_of_tau);
    if (!(back == TSeries::variable(st.n, st.order, k)))
      throw std::logic_error("flat coordinate inversion failed the round trip");
  }
  for (int l = 0; l < st.n; ++l) pot.derivs[l] = st.j_coord(2, l).substitute(t_of_tau);
  // Mixed-partial symmetry of the gradient (integrability of F).
  for (int l = 0; l < st.n; ++l)
    for (int m = l + 1; m < st.n; ++m)
      if (!(pot.derivs[l].derivative(m) == pot.derivs[m].derivative(l)))
        throw std::logic_error("potential derivatives are not integrable");
  return pot;
}

Scalar correlator(const SolverState& st, const PotentialSeries& pot,
                  const std::vector<int>& indices) {
  for (int i : indices)
    if (i < 0 || i > st.n - 1) throw UsageError("correlator: index out of range");
  if (indices.size() == 2) return Scalar(indices[0] + indices[1] == st.n - 1 ? 1 : 0);
  if (indices.size() == 3 || indices.size() == 4) {
    if (st.order < static_cast<int>(indices.size()))
      throw UsageError("correlator: solved order insufficient for this correlator");
    TSeries d = pot.derivs.at(indices.back());
    for (size_t a = 0; a + 1 < indices.size(); ++a) d = d.derivative(indices[a]);
    return d.constant_term();
  }
  throw UsageError("correlator: 2, 3 or 4 insertions");
}

TSeries assemble_potential(const SolverState& st, const PotentialSeries& pot) {
  const int cap = st.order + 1;
  TSeries f(st.n, cap);
  TSeries g(st.n, cap);
  for (int l = 0; l < st.n; ++l)
    g += TSeries::variable(st.n, cap, l) * pot.derivs.at(l).with_cap(cap);
  for (int d = 2; d < cap; ++d) f += (Scalar(1) / Scalar(d)) * g.homogeneous_part(d);
  return f;
}

CheckReport check_dimension_axiom(const SolverState& st, const PotentialSeries& pot) {
  CheckReport rep;
  rep.identity = "E(F) = (3 - (n-1)/(n+1)) F";
  rep.range = "n=" + std::to_string(st.n) + ", t-degrees < " + std::to_string(st.order + 1);
  const int n = st.n;
  std::vector<Scalar> charges;  // Euler charge of tau_k (and of t_k)
  for (int k = 0; k < n; ++k) charges.push_back(Scalar(1) - Scalar(k, n + 1));
  // The Euler field is diagonal in flat coordinates: E(tau_k) equals its
  // charge times tau_k as a t-series.  Verified, not assumed.
  for (int k = 0; k < n; ++k) {
    TSeries etau = pot.coords.at(k).weighted_scale(charges);
    if (!(etau == charges[k] * pot.coords.at(k))) {
      rep.pass = false;
      rep.counterexample = "E(tau_" + std::to_string(k) + ") is not diagonal";
      return rep;
    }
  }
  TSeries f = assemble_potential(st, pot);
  TSeries lhs = f.weighted_scale(charges);
  Scalar factor = Scalar(3) - Scalar(st.n - 1, st.n + 1);
  TSeries residual = lhs - factor * f;
  if (!residual.is_zero()) {
    rep.pass = false;
    rep.counterexample = residual.to_string();
  }
  return rep;
}

CheckReport check_wdvv_potential(int n, int order, const std::map<int, TSeries>& derivs) {
  CheckReport rep;
  rep.identity = "WDVV associativity residuals";
  // Third derivatives are exact through t-degree order-3; the residual is
  // compared in that range.
  const int exact_deg = order - 3;
  rep.range = "n=" + std::to_string(n) + ", residual degrees <= " + std::to_string(exact_deg);
  std::vector<std::vector<std::vector<TSeries>>> f3(
      n, std::vector<std::vector<TSeries>>(n, std::vector<TSeries>(n)));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) f3[a][b][c] = derivs.at(c).derivative(a).derivative(b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          TSeries res(n, order);
          for (int e = 0; e < n; ++e) {
            int edual = n - 1 - e;  // flat metric pairs e with n-1-e
            res += f3[a][b][e] * f3[edual][c][d] - f3[a][d][e] * f3[edual][c][b];
          }
          TSeries clipped(n, order);
          for (int deg = 0; deg <= exact_deg; ++deg) clipped += res.homogeneous_part(deg);
          if (!clipped.is_zero()) {
            rep.pass = false;
            std::ostringstream os;
            os << "(" << a << "," << b << "," << c << "," << d << "): " << clipped.to_string();
            rep.counterexample = os.str();
            return rep;
          }
        }
  return rep;
}

CheckReport check_wdvv(const SolverState& st, const PotentialSeries& pot) {
  return check_wdvv_potential(st.n, st.order, pot.derivs);
}

namespace {

std::array<int, 4> quad_key(int a, int b, int c, int d) {
  std::array<int, 4> k{a, b, c, d};
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

CheckReport check_four_point_reconstruction(const SolverState& st, const PotentialSeries& pot) {
  CheckReport rep;
  rep.identity = "four-point values reconstructed from 2-, 3-point data and the seed";
  rep.range = "n=" + std::to_string(st.n);
  const int n = st.n;
  if (st.order < 4 || n < 2) {
    rep.pass = false;
    rep.counterexample = "needs order >= 4 and n >= 2";
    return rep;
  }
  auto c3 = [&](int i, int j, int k) { return i + j + k == n - 1 ? Scalar(1) : Scalar(0); };

  // The solver's quartic data.
  std::map<std::array<int, 4>, Scalar> actual;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c)
        for (int d = c; d < n; ++d) {
          TSeries x = pot.derivs.at(d).derivative(a).derivative(b).derivative(c);
          actual[quad_key(a, b, c, d)] = x.constant_term();
        }

  // Seeds: the Euler constraint restricts the support to index sum 2n, a
  // unit insertion differentiates the constant metric to zero, and the
  // one distinguished value is 1.
  std::map<std::array<int, 4>, Scalar> known;
  for (const auto& [k, v] : actual) {
    (void)v;
    if (k[0] + k[1] + k[2] + k[3] != 2 * n || k[0] == 0) known[k] = Scalar(0);
  }
  known[quad_key(1, 1, n - 1, n - 1)] = Scalar(1);

  // Linearized associativity: for all (a,b,c,d,x),
  //   sum_e [ Q_{abex} C(e',c,d) + C(a,b,e) Q_{e'cdx}
  //         - Q_{adex} C(e',c,b) - C(a,d,e) Q_{e'cbx} ] = 0,  e' = n-1-e.
  // Propagate values through relations with a single unknown.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int x = 0; x < n; ++x) {
              std::map<std::array<int, 4>, Scalar> lhs;
              auto add = [&](std::array<int, 4> k, const Scalar& s) {
                if (s.is_zero()) return;
                auto [it, fresh] = lhs.try_emplace(k, s);
                if (!fresh) it->second += s;
              };
              for (int e = 0; e < n; ++e) {
                int ed = n - 1 - e;
                add(quad_key(a, b, e, x), c3(ed, c, d));
                add(quad_key(ed, c, d, x), c3(a, b, e));
                add(quad_key(a, d, e, x), -c3(ed, c, b));
                add(quad_key(ed, c, b, x), -c3(a, d, e));
              }
              Scalar constant(0);
              std::array<int, 4> open{};
              Scalar open_coeff(0);
              int unknowns = 0;
              for (const auto& [k, s] : lhs) {
                auto it = known.find(k);
                if (it != known.end()) {
                  constant += s * it->second;
                } else {
                  ++unknowns;
                  open = k;
                  open_coeff = s;
                }
              }
              if (unknowns == 1 && !open_coeff.is_zero()) {
                known[open] = -constant / open_coeff;
                progress = true;
              }
            }
  }

  for (const auto& [k, v] : actual) {
    auto it = known.find(k);
    if (it == known.end()) {
      rep.pass = false;
      rep.counterexample = "value not determined by the relations";
      return rep;
    }
    if (it->second != v) {
      rep.pass = false;
      rep.counterexample = "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                           std::to_string(k[2]) + "," + std::to_string(k[3]) +
                           "): reconstructed " + it->second.to_string() + ", solver " +
                           v.to_string();
      return rep;
    }
  }
  return rep;
}

PrimitiveAxiomReport check_primitive_axioms(const SolverState& st) {
  PrimitiveAxiomReport rep;
  rep.r = st.r;
  const int n = st.n;
  const AnFamily& fam = st.fam;
  std::vector<UChain> grad;  // u * GGM_j zeta
  for (int j = 0; j < n; ++j)
    grad.push_back(ggm_connection_dt(j, st.zeta, fam).shift_u(1));

  // P1: the period matrix of u^0-coordinates is invertible over the local
  // ring iff its constant-term matrix is invertible over the field.
  {
    QMatrix m0(n, n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      ClassCoords cc = decompose_class(grad[j], st.basis, fam);
      for (const auto& [im, c] : cc.coords) {
        if (im.second == 0)
          m0.at(im.first, j) = c.constant_term();
        else if (im.second > 0 && !c.is_zero())
          ok = false;  // positive filtration leakage would break primitivity
      }
    }
    rep.p1 = ok && !m0.determinant().is_zero();
    if (!rep.p1) rep.detail += "P1: period matrix not invertible at t=0; ";
  }

  // P2: pairings of first covariant derivatives stay in R.
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        ULaurent p = hres_pairing(grad[i], grad[j], fam);
        for (const auto& [pw, c] : p.terms)
          if (pw != 0 && !c.is_zero()) ok = false;
      }
    rep.p2 = ok;
    if (!ok) rep.detail += "P2: pairing leaves R; ";
  }

  // P3: second-against-first pairings stay in R + uR.
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        UChain second = ggm_connection_dt(i, grad[j], fam).shift_u(1);
        for (int k = 0; k < n && ok; ++k) {
          ULaurent p = hres_pairing(second, grad[k], fam);
          for (const auto& [pw, c] : p.terms)
            if ((pw < 0 || pw > 1) && !c.is_zero()) ok = false;
        }
      }
    rep.p3 = ok;
    if (!ok) rep.detail += "P3: pairing leaves R + uR; ";
  }

  // P4: homogeneity with the stated constant.
  {
    UChain lhs = u_log_connection(st.zeta, fam) +
                 ggm_connection(euler_field(n, st.order), st.zeta, fam);
    lhs -= st.r * st.zeta;
    ClassCoords cc = decompose_class(lhs, st.basis, fam);
    rep.p4 = cc.coords_zero();
    if (!rep.p4) rep.detail += "P4: homogeneity defect " + cc.to_json_string() + "; ";
  }
  return rep;
}

}  // namespace angw
