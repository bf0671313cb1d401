#pragma once

#include <map>
#include <optional>
#include <vector>

#include "angw/chains.hpp"

namespace angw {

/// Element of the rank-2 module A (x) R: a 1-component and an eps-component.
struct AlgElement {
  TSeries one;
  TSeries eps;

  AlgElement() = default;
  AlgElement(TSeries o, TSeries e) : one(std::move(o)), eps(std::move(e)) {}
  bool is_zero() const { return one.is_zero() && eps.is_zero(); }
};

enum class Parity { Even, Odd };

/// Reduced Hochschild cochain of the family, stored through its values on
/// eps^{(x)k} (inputs containing the strict unit evaluate to zero).  Every
/// cochain this engine constructs is unit-valued (eps-component zero); the
/// chain-level operators reject anything else.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int nvars, int tcap, Parity p) : nvars_(nvars), tcap_(tcap), parity_(p) {}

  int nvars() const { return nvars_; }
  int tcap() const { return tcap_; }
  Parity parity() const { return parity_; }
  const std::map<int, AlgElement>& components() const { return comps_; }

  void set_component(int arity, AlgElement v) {
    if (arity < 0) throw UsageError("Cochain: negative arity");
    if (v.is_zero())
      comps_.erase(arity);
    else
      comps_[arity] = std::move(v);
  }

  /// Coefficient of the unit in the value on eps^{(x)arity}.
  TSeries one_value(int arity) const {
    auto it = comps_.find(arity);
    return it == comps_.end() ? TSeries(nvars_, tcap_) : it->second.one;
  }
  bool unit_valued() const {
    for (const auto& [a, v] : comps_) {
      (void)a;
      if (!v.eps.is_zero()) return false;
    }
    return true;
  }

 private:
  int nvars_ = 0;
  int tcap_ = 0;
  Parity parity_ = Parity::Even;
  std::map<int, AlgElement> comps_;
};

/// The versal family of minimal A-infinity structures on span(1, eps):
///   mu_k(eps^{(x)k}) = t_k * 1       for 0 <= k <= n-1,
///   mu_{n+1}(eps^{(x)n+1}) = 1/(n+1) * 1,
/// all other structure maps zero apart from the strict unit.  At t = 0 it
/// is the minimal model of the x^{n+1}/(n+1) matrix-factorization category.
class AnFamily {
 public:
  AnFamily(int n, int tcap);
  AnFamily(int n, int tcap, bool fiber_only);

  int n() const { return n_; }
  int tcap() const { return tcap_; }

  /// True when the structure maps actually carry the deformation
  /// parameters; the central fiber held in a larger ring reports false and
  /// has vanishing Kodaira-Spencer directions (so the trivialization
  /// transport degenerates to the identity).
  bool versal() const { return versal_; }

  /// Nonzero structure constants: arity -> coefficient of 1 on eps^{(x)k}.
  const std::map<int, TSeries>& mu() const { return mu_; }
  TSeries mu_value(int arity) const {
    auto it = mu_.find(arity);
    return it == mu_.end() ? TSeries(n_, tcap_) : it->second;
  }

  /// The same family in the t = 0 ring (tcap 1), i.e. the central fiber.
  AnFamily central_fiber() const { return AnFamily(n_, 1); }

 private:
  int n_;
  int tcap_;
  bool versal_ = true;
  std::map<int, TSeries> mu_;
};

inline AnFamily make_family(int n, int tcap) { return AnFamily(n, tcap); }

/// The t = 0 structure maps carried in a ring of the given truncation
/// order (only mu_{n+1} survives).
inline AnFamily make_central_fiber(int n, int tcap) { return AnFamily(n, tcap, true); }

/// Rational weight bookkeeping:
///   wt(eps) = (n-1)/(n+1), wt(1) = 0, wt(u) = -2,
///   the chain-side parameter weight wt(t_j) = 2j/(n+1) - 2.
/// Under these, the Hochschild differential has weight -1 and the cyclic
/// differential weight +1; the structure map mu_k has weight 2-k when the
/// parameter inside mu carries the dual weight 2 - 2j/(n+1).
struct WeightTable {
  int n;

  explicit WeightTable(int n_in) : n(n_in) {}

  Scalar eps_weight() const { return Scalar(n - 1, n + 1); }
  Scalar word_weight(const BarWord& w) const {
    if (w.head == Head::One) return Scalar(2 * w.tail, n + 1);
    return Scalar(2 * w.tail + 1 - n, n + 1);
  }
  Scalar u_weight() const { return Scalar(-2); }
  Scalar t_chain_weight(int j) const { return Scalar(2 * j, n + 1) - Scalar(2); }
  Scalar t_parameter_weight(int j) const { return Scalar(2) - Scalar(2 * j, n + 1); }
};

/// Weight of a single chain term: word weight - 2 * (u-power) + the
/// chain-side weights of the t-exponents.
Scalar weight_of(const BarWord& w, int upow, const Expo& t_expo, const WeightTable& wt);

/// Splits a chain into weight-homogeneous pieces.
std::map<Scalar, UChain> weight_decomposition(const UChain& x, const WeightTable& wt);

/// True if every term has the given weight.
bool is_weight_homogeneous(const UChain& x, const Scalar& w, const WeightTable& wt);

/// The odd cyclic inner product on A_n: <1, eps> = <eps, 1> = 1,
/// <1,1> = <eps,eps> = 0, extended bilinearly.
Scalar cyclic_pairing(const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b);

/// Kodaira-Spencer cochain of the base direction d/dt_j: [eps^j -> 1].
Cochain ks_map(int j, const AnFamily& fam);

/// The Euler-scaling Kodaira-Spencer cochain sum_k (2-k) mu_k, i.e. the
/// t-derivative of the unit-rescaling deformation at scale 1.
Cochain ks_euler_cochain(const AnFamily& fam);

/// Evaluates mu_{len-1} on a word over {1, eps} on the central fiber,
/// with the strict-unit conventions hard-coded; used by the cyclic
/// invariance checks.  Word entries: false = unit, true = eps.
AlgElement mu_eval(const AnFamily& fam, const std::vector<bool>& inputs);

}  // namespace angw
