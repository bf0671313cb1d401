#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "angw/tseries.hpp"

namespace angw {

enum class Head : int { One = 0, Eps = 1 };

/// Basis element a_0|eps^k of the reduced bar complex: a head generator
/// (the unit or eps) followed by k tensor factors of eps.  Tail slots never
/// contain the unit.
struct BarWord {
  Head head = Head::Eps;
  int tail = 0;

  bool odd() const { return head == Head::Eps; }  // 1|eps^k even, eps|eps^k odd

  friend auto operator<=>(const BarWord&, const BarWord&) = default;
};

/// Key of a chain term: bar word at a u-power.  Ordered by (u, tail, head),
/// the order used by the debug dump and by the decomposition pivoting.
struct ChainKey {
  int upow = 0;
  BarWord word;

  friend auto operator<=>(const ChainKey& a, const ChainKey& b) {
    if (auto c = a.upow <=> b.upow; c != 0) return c;
    if (auto c = a.word.tail <=> b.word.tail; c != 0) return c;
    return static_cast<int>(a.word.head) <=> static_cast<int>(b.word.head);
  }
  friend bool operator==(const ChainKey&, const ChainKey&) = default;
};

/// Sparse chain of the (negative/periodic) cyclic complex of the family:
/// a finite sum of bar words times integer u-powers with TSeries
/// coefficients.
///
/// bar_cap is a hard storage bound: an operator that would produce a
/// nonzero coefficient on a longer word aborts with TruncationError
/// instead of dropping data.
///
/// Two exactness bounds accompany the data and are propagated by every
/// operation; terms outside them are trimmed as unknown rather than kept
/// as garbage:
///   - u_valid_hi bounds a slanted window: the coefficient monomial of
///     t-degree d at u-power p is exact whenever p + d <= u_valid_hi
///     (truncation of the splitting series in u; the trivialization
///     exponential preserves the bound, each application of its tail
///     shift raising t-degree and lowering u-power together);
///   - t_valid_hi bounds the exact t-degrees (m-adic truncation; a
///     t-derivative loses the top degree, a multiplication by a series of
///     positive order wins it back).
class UChain {
 public:
  static constexpr int kExactEverywhere = ULaurent::kExactEverywhere;

  UChain() : nvars_(0), tcap_(0), bar_cap_(0) {}
  UChain(int nvars, int tcap, int bar_cap)
      : nvars_(nvars), tcap_(tcap), bar_cap_(bar_cap), t_valid_hi_(tcap - 1) {}

  int nvars() const { return nvars_; }
  int tcap() const { return tcap_; }
  int bar_cap() const { return bar_cap_; }
  int u_valid_hi() const { return u_valid_hi_; }
  int t_valid_hi() const { return t_valid_hi_; }

  void set_u_valid_hi(int h) {
    u_valid_hi_ = h;
    trim_invalid();
  }
  void set_t_valid_hi(int h) {
    t_valid_hi_ = h;
    trim_invalid();
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<ChainKey, TSeries>& terms() const { return terms_; }

  /// Lowest / highest u-powers actually present (0 if empty).
  int u_min() const { return terms_.empty() ? 0 : terms_.begin()->first.upow; }
  int u_max() const { return terms_.empty() ? 0 : terms_.rbegin()->first.upow; }
  std::pair<int, int> u_window() const { return {u_min(), u_valid_hi_}; }

  /// Minimum of (u-power + t-degree) over the stored terms: the low edge
  /// of the slanted window, used when windows combine under pairings.
  int slant_min() const {
    int m = kExactEverywhere;
    for (const auto& [k, v] : terms_) m = std::min(m, k.upow + v.min_degree());
    return terms_.empty() ? 0 : m;
  }

  TSeries coefficient(const ChainKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? TSeries(nvars_, tcap_) : it->second;
  }

  void add_term(const ChainKey& k, const TSeries& c) {
    if (c.is_zero()) return;
    TSeries kept = c;
    long room = static_cast<long>(t_valid_hi_);
    if (u_valid_hi_ < kExactEverywhere)
      room = std::min(room, static_cast<long>(u_valid_hi_) - k.upow);
    if (room < 0) return;
    if (room < tcap_ - 1) {
      kept = c.clipped_to_degree(static_cast<int>(room));
      if (kept.is_zero()) return;
    }
    if (k.word.tail < 0) throw UsageError("UChain: negative tail");
    if (k.word.tail > bar_cap_)
      throw TruncationError("UChain: word tail " + std::to_string(k.word.tail) +
                            " exceeds bar_cap " + std::to_string(bar_cap_));
    auto [it, fresh] = terms_.try_emplace(k, kept);
    if (!fresh) {
      it->second += kept;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(Head h, int tail, int upow, const TSeries& c) {
    add_term(ChainKey{upow, BarWord{h, tail}}, c);
  }
  void add_term(const BarWord& w, int upow, const TSeries& c) {
    add_term(ChainKey{upow, w}, c);
  }

  UChain& operator+=(const UChain& o) {
    check_ring(o);
    int h = std::min(u_valid_hi_, o.u_valid_hi_);
    int th = std::min(t_valid_hi_, o.t_valid_hi_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    u_valid_hi_ = h;
    set_t_valid_hi(th);
    return *this;
  }
  UChain& operator-=(const UChain& o) {
    check_ring(o);
    int h = std::min(u_valid_hi_, o.u_valid_hi_);
    int th = std::min(t_valid_hi_, o.t_valid_hi_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    u_valid_hi_ = h;
    set_t_valid_hi(th);
    return *this;
  }
  friend UChain operator+(UChain a, const UChain& b) { return a += b; }
  friend UChain operator-(UChain a, const UChain& b) { return a -= b; }
  UChain operator-() const {
    UChain r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend UChain operator*(const Scalar& c, const UChain& x) {
    UChain r(x);
    if (c.is_zero()) {
      r.terms_.clear();
      return r;
    }
    for (auto& [k, v] : r.terms_) v = c * v;
    return r;
  }
  friend UChain operator*(const TSeries& c, const UChain& x) {
    UChain r(x.nvars_, x.tcap_, x.bar_cap_);
    // A multiplier of pure t-degree >= d shifts both exactness bounds up by d.
    int gain = c.is_zero() ? 0 : c.min_degree();
    r.u_valid_hi_ = sat_add(x.u_valid_hi_, gain);
    r.t_valid_hi_ = sat_add(x.t_valid_hi_, gain);
    for (const auto& [k, v] : x.terms_) r.add_term(k, c * v);
    return r;
  }

  /// Multiplication by u^m (shifts the slanted bound along).
  UChain shift_u(int m) const {
    UChain r(nvars_, tcap_, bar_cap_);
    r.u_valid_hi_ = sat_add(u_valid_hi_, m);
    r.t_valid_hi_ = t_valid_hi_;
    for (const auto& [k, v] : terms_) r.add_term(ChainKey{k.upow + m, k.word}, v);
    return r;
  }

  /// d/du: u^p -> p u^{p-1}.
  UChain d_du() const {
    UChain r(nvars_, tcap_, bar_cap_);
    r.u_valid_hi_ = sat_add(u_valid_hi_, -1);
    r.t_valid_hi_ = t_valid_hi_;
    for (const auto& [k, v] : terms_)
      r.add_term(ChainKey{k.upow - 1, k.word}, Scalar(k.upow) * v);
    return r;
  }

  /// Coefficient-wise d/dt_j (loses the top exact t-degree, and with it
  /// one step of the slanted window).
  UChain d_dt(int j) const {
    UChain r(nvars_, tcap_, bar_cap_);
    r.u_valid_hi_ = sat_add(u_valid_hi_, -1);
    r.t_valid_hi_ = sat_add(t_valid_hi_, -1);
    for (const auto& [k, v] : terms_) r.add_term(k, v.derivative(j));
    return r;
  }

  /// The sub-chain at one u-power, keyed by bar word.
  std::map<BarWord, TSeries> u_slice(int upow) const {
    std::map<BarWord, TSeries> r;
    auto it = terms_.lower_bound(ChainKey{upow, BarWord{Head::One, 0}});
    for (; it != terms_.end() && it->first.upow == upow; ++it)
      r.emplace(it->first.word, it->second);
    return r;
  }

  /// Keeps only the t-degree-d part of every coefficient.
  UChain t_order_part(int d) const {
    UChain r(nvars_, tcap_, bar_cap_);
    r.u_valid_hi_ = u_valid_hi_;
    for (const auto& [k, v] : terms_) r.add_term(k, v.homogeneous_part(d));
    return r;
  }

  friend bool operator==(const UChain& a, const UChain& b) {
    return a.nvars_ == b.nvars_ && a.tcap_ == b.tcap_ && a.terms_ == b.terms_;
  }

  /// Debug dump: one line "head|eps^k u^p : series" per term, sorted by
  /// (u-power, tail, head).
  std::string dump() const;

  static int sat_add(int a, int b) {
    if (a >= kExactEverywhere) return kExactEverywhere;
    return a + b;
  }

 private:
  void check_ring(const UChain& o) const {
    if (nvars_ != o.nvars_ || tcap_ != o.tcap_ || bar_cap_ != o.bar_cap_)
      throw UsageError("UChain: mixed rings (nvars, tcap or bar_cap differ)");
  }
  void trim_invalid() {
    if (u_valid_hi_ >= kExactEverywhere && t_valid_hi_ >= kExactEverywhere) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
      long room = static_cast<long>(t_valid_hi_);
      if (u_valid_hi_ < kExactEverywhere)
        room = std::min(room, static_cast<long>(u_valid_hi_) - it->first.upow);
      if (room >= tcap_ - 1) {
        ++it;
      } else if (room < 0) {
        it = terms_.erase(it);
      } else {
        it->second = it->second.clipped_to_degree(static_cast<int>(room));
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
      }
    }
  }

  int nvars_, tcap_, bar_cap_;
  int u_valid_hi_ = kExactEverywhere;
  int t_valid_hi_ = kExactEverywhere;
  std::map<ChainKey, TSeries> terms_;
};

std::string word_string(const BarWord& w);

}  // namespace angw
