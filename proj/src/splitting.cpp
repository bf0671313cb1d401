#include "angw/splitting.hpp"

#include <sstream>

#include "angw/linalg.hpp"

namespace angw {

Scalar splitting_coeff(int k, int l, int n) {
  if (k < 0 || k > n - 1) throw UsageError("splitting_coeff: index out of range");
  if (l < 0) throw UsageError("splitting_coeff: negative u-order");
  Scalar c(1);
  for (int j = 0; j < l; ++j) c *= Scalar(k + 1 + j * (n + 1));
  return c;
}

UChain splitting_s(int j, int n, int u_cap, int bar_cap, int tcap) {
  if (j < 0 || j > n - 1) throw UsageError("splitting_s: index out of range");
  if (bar_cap < j + (n + 1) * u_cap)
    throw TruncationError("splitting_s: bar_cap too small for requested u_cap");
  UChain s(n, tcap, bar_cap);
  s.set_u_valid_hi(u_cap);
  for (int l = 0; l <= u_cap; ++l) {
    Scalar c = splitting_coeff(j, l, n);
    if (l % 2 == 1) c = -c;
    s.add_term(Head::Eps, j + (n + 1) * l, l, TSeries::constant(n, tcap, c));
  }
  return s;
}

SplittingBasis make_splitting_basis(int n, int u_cap, int bar_cap, int tcap) {
  SplittingBasis b;
  b.n = n;
  b.u_cap = u_cap;
  for (int j = 0; j < n; ++j) b.s.push_back(splitting_s(j, n, u_cap, bar_cap, tcap));
  return b;
}

namespace {

void require_representative(const UChain& x, bool allow_u) {
  for (const auto& [k, c] : x.terms()) {
    (void)c;
    if (k.word.head == Head::One)
      throw UsageError("pairing: input carries unit-head words; reduce to representatives first");
    if (!allow_u && k.upow != 0)
      throw UsageError("pairing: input must be u-free");
  }
}

}  // namespace

TSeries mukai_pairing(const UChain& x, const UChain& y, const AnFamily& fam) {
  require_representative(x, false);
  require_representative(y, false);
  const int n = fam.n();
  TSeries r(x.nvars(), x.tcap());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      if (kx.word.tail + ky.word.tail == n - 1) r += cx * cy;
  return r;
}

ULaurent hres_pairing(const UChain& x, const UChain& y, const AnFamily& fam) {
  require_representative(x, true);
  require_representative(y, true);
  const int n = fam.n();
  // Over the family the pairing is the parallel transport of the fiber
  // one: evaluate both sides in the trivialized frame, where the delta
  // table applies verbatim.  This is what makes the pairing flat for the
  // base-direction connection, and it restricts to the stated table at
  // t = 0 (where the frame map is the identity).
  UChain zx = trivialization_exp(x, fam, -1);
  UChain zy = trivialization_exp(y, fam, -1);
  ULaurent r(x.nvars(), x.tcap());
  // Exactness of the u^p coefficient needs every contributing pair
  // (a, p-a); with both factors complete below their validity bounds this
  // holds through min(x_hi + y_min, y_hi + x_min).
  if (!zx.is_zero() && !zy.is_zero()) {
    r.valid_hi = std::min(UChain::sat_add(zx.u_valid_hi(), zy.slant_min()),
                          UChain::sat_add(zy.u_valid_hi(), zx.slant_min()));
    r.t_valid_hi = std::min(zx.t_valid_hi(), zy.t_valid_hi());
  }
  for (const auto& [kx, cx] : zx.terms())
    for (const auto& [ky, cy] : zy.terms()) {
      if (kx.word.tail + ky.word.tail != n - 1) continue;
      Scalar sgn((kx.upow % 2 + 2) % 2 == 1 ? -1 : 1);
      r.add(kx.upow + ky.upow, sgn * (cx * cy));
    }
  return r;
}

std::vector<std::pair<BarWord, BarWord>> coproduct(const BarWord& w) {
  if (w.head == Head::One) throw UsageError("coproduct: defined on the eps-head basis");
  std::vector<std::pair<BarWord, BarWord>> out;
  for (int i = 0; i <= w.tail; ++i)
    out.push_back({BarWord{Head::Eps, i}, BarWord{Head::Eps, w.tail - i}});
  return out;
}

UChain canonical_representative(const UChain& x, const AnFamily& fam) {
  bool ufree = true;
  for (const auto& [k, c] : x.terms()) {
    (void)c;
    if (k.upow != 0) ufree = false;
  }
  if (ufree && !hoch_b(x, fam).is_zero())
    throw UsageError("canonical_representative: input is not a cycle");
  UChain r(x.nvars(), x.tcap(), x.bar_cap());
  r.set_u_valid_hi(x.u_valid_hi());
  r.set_t_valid_hi(x.t_valid_hi());
  for (const auto& [k, c] : x.terms())
    if (k.word.head == Head::Eps) r.add_term(k, c);
  return r;
}

std::string ClassCoords::to_json_string() const {
  std::ostringstream os;
  os << "{\"coords\": [";
  bool first = true;
  for (const auto& [jm, c] : coords) {
    if (!first) os << ", ";
    first = false;
    os << "[" << jm.first << ", " << jm.second << ", \"" << c.to_string() << "\"]";
  }
  os << "], \"witness_terms\": " << witness.terms().size() << "}";
  return os.str();
}

ClassCoords decompose_class(const UChain& x, const SplittingBasis& basis, const AnFamily& fam) {
  const int n = fam.n();
  // Family chains are reduced in the trivialized frame, where the
  // differential is the fiber one and the closed chains are R[[u]]-spanned
  // by the basis ladders; at t = 0 the frame map is the identity.  A
  // coordinate therefore multiplies the parallel transport of u^m s_j, and
  // the witness is transported back to the family frame.
  AnFamily fiber = make_central_fiber(fam.n(), fam.tcap());
  UChain residual = trivialization_exp(x, fam, -1);
  ClassCoords out;
  UChain witness0(x.nvars(), x.tcap(), x.bar_cap());
  witness0.set_u_valid_hi(residual.u_valid_hi());
  witness0.set_t_valid_hi(residual.t_valid_hi());

  // Sparse reduction pivoting on lowest (u-power, tail, head).  Unit-head
  // terms are boundaries: (b+uB)(eps|eps^{k+n} u^p) = 1|eps^k u^p plus a
  // next-level term, a ladder that strictly raises (u, tail), so the sweep
  // terminates.  Eps-head terms in the homology range are coordinate leads;
  // out-of-range eps leads mean the input was not closed-in-span.
  int guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 200000) throw TruncationError("decompose_class: reduction did not terminate");
    ChainKey key = residual.terms().begin()->first;
    TSeries coef = residual.terms().begin()->second;
    if (key.word.head == Head::Eps) {
      int j = key.word.tail;
      if (j > n - 1) {
        throw UsageError("decompose_class: input not closed or outside the span (lead " +
                         word_string(key.word) + " at u^" + std::to_string(key.upow) + ")");
      }
      auto [it, fresh] = out.coords.try_emplace({j, key.upow}, coef);
      if (!fresh) it->second += coef;
      residual -= coef * basis.s[j].shift_u(key.upow);
    } else {
      BarWord gen{Head::Eps, key.word.tail + n};
      if (gen.tail > x.bar_cap())
        throw TruncationError("decompose_class: witness ladder exceeds bar_cap");
      UChain e(x.nvars(), x.tcap(), x.bar_cap());
      e.set_u_valid_hi(residual.u_valid_hi());
      e.set_t_valid_hi(residual.t_valid_hi());
      e.add_term(gen, key.upow, coef);
      witness0 += e;
      residual -= cyclic_differential(e, fiber);
    }
  }
  out.witness = trivialization_exp(witness0, fam, +1);
  for (auto it = out.coords.begin(); it != out.coords.end();)
    it = it->second.is_zero() ? out.coords.erase(it) : std::next(it);
  return out;
}

HomologyReport hochschild_homology(int n, int tail_cap) {
  // Kernel/image elimination on the central-fiber complex with tails
  // <= tail_cap.  Odd part: b maps eps|eps^k (k >= n) injectively onto
  // distinct unit words, so the kernel is exactly the short words; the
  // computation below establishes that by rank, not by assumption.
  AnFamily fiber(n, 1);
  const int odd_count = tail_cap + 1;
  const int even_count = tail_cap + 1;
  QMatrix m(even_count, odd_count);
  for (int k = 0; k <= tail_cap; ++k) {
    UChain e(n, 1, tail_cap);
    e.add_term(Head::Eps, k, 0, TSeries::constant(n, 1, Scalar(1)));
    UChain be = hoch_b(e, fiber);
    for (const auto& [key, c] : be.terms())
      m.at(key.word.tail, k) = c.constant_term();
  }
  HomologyReport rep;
  auto kernel = m.kernel_basis();
  rep.odd_dim = static_cast<int>(kernel.size());
  rep.basis_is_standard = true;
  for (const auto& v : kernel) {
    int lead = -1;
    for (int k = 0; k <= tail_cap; ++k)
      if (!v[k].is_zero()) {
        if (lead < 0)
          lead = k;
        else
          rep.basis_is_standard = false;  // more than one word in a kernel vector
      }
    rep.odd_basis_tails.push_back(lead);
    if (lead >= n) rep.basis_is_standard = false;
  }
  // Even part: every unit word is a cycle; count those in the stable range
  // that are not boundaries (the rank of b restricted to targets there).
  int stable = tail_cap - n;
  QMatrix mb(stable + 1, odd_count);
  for (int k = 0; k <= tail_cap; ++k) {
    UChain e(n, 1, tail_cap);
    e.add_term(Head::Eps, k, 0, TSeries::constant(n, 1, Scalar(1)));
    UChain be = hoch_b(e, fiber);
    for (const auto& [key, c] : be.terms())
      if (key.word.tail <= stable) mb.at(key.word.tail, k) = c.constant_term();
  }
  rep.even_dim_stable = (stable + 1) - mb.rank();
  return rep;
}

std::vector<UChain> family_homology_basis(const AnFamily& fam, int bar_cap) {
  const int n = fam.n();
  std::vector<UChain> basis;
  for (int j = 0; j < n; ++j) {
    UChain kappa(n, fam.tcap(), bar_cap);
    kappa.add_term(Head::Eps, j, 0, TSeries::constant(n, fam.tcap(), Scalar(1)));
    // Kill the unit-head image order by order: b(eps|eps^k) has unit lead
    // 1|eps^{k-n} plus higher-t terms, so each correction is forced.
    for (int guard = 0; guard < 100000; ++guard) {
      UChain bk = hoch_b(kappa, fam);
      if (bk.is_zero()) break;
      ChainKey lead = bk.terms().begin()->first;
      TSeries c = bk.terms().begin()->second;
      BarWord gen{Head::Eps, lead.word.tail + n};
      if (gen.tail > bar_cap)
        throw TruncationError("family_homology_basis: correction exceeds bar_cap");
      UChain e(n, fam.tcap(), bar_cap);
      e.add_term(gen, lead.upow, c);
      kappa -= e;
    }
    if (!hoch_b(kappa, fam).is_zero())
      throw TruncationError("family_homology_basis: correction did not converge");
    basis.push_back(kappa);
  }
  return basis;
}

}  // namespace angw
