#pragma once

#include <map>
#include <string>
#include <vector>

#include "angw/scalar.hpp"

namespace angw {

/// Exponent tuple (e_0, ..., e_{n-1}) of a monomial in the deformation
/// parameters t_0..t_{n-1}.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Truncated multivariate power series over Scalar: the quotient
/// K[[t_0..t_{n-1}]] / (total degree >= cap).  Ring operations drop
/// everything of total degree >= cap; no zero coefficients are stored.
///
/// Two series interoperate only if they share nvars and cap; mixing rings
/// is a usage error, re-truncation is explicit via with_cap().
class TSeries {
 public:
  TSeries() : nvars_(0), cap_(0) {}
  TSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
    if (nvars < 0 || cap < 0) throw UsageError("TSeries: bad ring parameters");
  }

  static TSeries constant(int nvars, int cap, const Scalar& c) {
    TSeries s(nvars, cap);
    s.add_term(Expo(nvars, 0), c);
    return s;
  }
  static TSeries variable(int nvars, int cap, int j) {
    if (j < 0 || j >= nvars) throw UsageError("TSeries: variable index out of range");
    TSeries s(nvars, cap);
    Expo e(nvars, 0);
    e[j] = 1;
    s.add_term(e, Scalar(1));
    return s;
  }

  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  Scalar coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar constant_term() const { return coefficient(Expo(nvars_, 0)); }

  /// Adds c * t^e, silently truncating degrees >= cap (that is the ring).
  void add_term(const Expo& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_) throw UsageError("TSeries: exponent arity mismatch");
    if (c.is_zero() || total_degree(e) >= cap_) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TSeries& operator+=(const TSeries& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  TSeries operator-() const {
    TSeries r(nvars_, cap_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    a.check_ring(b);
    TSeries r(a.nvars_, a.cap_);
    for (const auto& [ea, ca] : a.terms_) {
      int da = total_degree(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) >= a.cap_) continue;
        Expo e(ea);
        for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

  friend TSeries operator*(const Scalar& c, const TSeries& a) {
    TSeries r(a.nvars_, a.cap_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
    return r;
  }
  TSeries& operator*=(const Scalar& c) { return *this = c * *this; }

  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.nvars_ == b.nvars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  TSeries derivative(int j) const {
    if (j < 0 || j >= nvars_) throw UsageError("TSeries: derivative index out of range");
    // The derivative lives in the same truncated ring; the lost top-degree
    // information is the caller's concern (degree < cap-1 is exact).
    TSeries r(nvars_, cap_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Expo d(e);
      d[j] -= 1;
      r.add_term(d, Scalar(e[j]) * c);
    }
    return r;
  }

  /// Substitutes g_j for the j-th variable.  All g_j must share a ring;
  /// the result lives in that ring.
  TSeries substitute(const std::vector<TSeries>& g) const {
    if (static_cast<int>(g.size()) != nvars_) throw UsageError("TSeries: substitute arity mismatch");
    int rn = nvars_ ? g[0].nvars() : nvars_;
    int rc = nvars_ ? g[0].cap() : cap_;
    TSeries r(rn, rc);
    // Cache powers of each g_j up to the degrees that actually occur.
    std::vector<std::vector<TSeries>> pw(nvars_);
    for (int j = 0; j < nvars_; ++j) pw[j].push_back(TSeries::constant(rn, rc, Scalar(1)));
    for (const auto& [e, c] : terms_) {
      TSeries m = TSeries::constant(rn, rc, c);
      for (int j = 0; j < nvars_; ++j) {
        while (static_cast<int>(pw[j].size()) <= e[j]) pw[j].push_back(pw[j].back() * g[j]);
        if (e[j] > 0) m = m * pw[j][e[j]];
      }
      r += m;
    }
    return r;
  }

  TSeries homogeneous_part(int d) const {
    TSeries r(nvars_, cap_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  /// Drops every monomial of total degree > d.
  TSeries clipped_to_degree(int d) const {
    TSeries r(nvars_, cap_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= d) r.terms_.emplace(e, c);
    return r;
  }

  int min_degree() const {  // degree of the lowest term; cap if zero
    int d = cap_;
    for (const auto& [e, c] : terms_) {
      (void)c;
      d = std::min(d, total_degree(e));
    }
    return d;
  }

  /// Same coefficients reinterpreted in a ring with a different cap.
  /// Widening asserts nothing about the dropped degrees; callers use it
  /// only where the series is known to be polynomial in the wider range.
  TSeries with_cap(int new_cap) const {
    TSeries r(nvars_, new_cap);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  /// Per-monomial scaling t^a -> (sum_j a_j w_j) t^a: the action of the
  /// diagonal derivation sum_j w_j t_j d/dt_j.
  TSeries weighted_scale(const std::vector<Scalar>& w) const {
    if (static_cast<int>(w.size()) != nvars_) throw UsageError("TSeries: weight arity mismatch");
    TSeries r(nvars_, cap_);
    for (const auto& [e, c] : terms_) {
      Scalar s(0);
      for (int j = 0; j < nvars_; ++j)
        if (e[j]) s += Scalar(e[j]) * w[j];
      r.add_term(e, s * c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check_ring(const TSeries& o) const {
    if (nvars_ != o.nvars_ || cap_ != o.cap_)
      throw UsageError("TSeries: mixed rings (nvars or cap differ)");
  }

  int nvars_;
  int cap_;
  std::map<Expo, Scalar> terms_;
};

/// Finite Laurent object in the circle parameter u with TSeries
/// coefficients.  valid_hi bounds the slanted exactness window inherited
/// from the chains being paired: a monomial of t-degree d at u-power p is
/// exact when p + d <= valid_hi.
struct ULaurent {
  int nvars = 0;
  int tcap = 0;
  int valid_hi = kExactEverywhere;    // slanted: u-power + t-degree
  int t_valid_hi = kExactEverywhere;  // plain t-degree bound
  std::map<int, TSeries> terms;

  static constexpr int kExactEverywhere = 1 << 28;

  ULaurent() = default;
  ULaurent(int n, int c) : nvars(n), tcap(c) {}

  bool is_zero() const { return terms.empty(); }

  void add(int upow, const TSeries& c) {
    if (c.is_zero()) return;
    TSeries kept = c;
    long room = static_cast<long>(t_valid_hi);
    if (valid_hi < kExactEverywhere)
      room = std::min(room, static_cast<long>(valid_hi) - upow);
    if (room < 0) return;
    if (room < tcap - 1) {
      kept = c.clipped_to_degree(static_cast<int>(room));
      if (kept.is_zero()) return;
    }
    auto [it, fresh] = terms.try_emplace(upow, kept);
    if (!fresh) {
      it->second += kept;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  TSeries at(int upow) const {
    auto it = terms.find(upow);
    return it == terms.end() ? TSeries(nvars, tcap) : it->second;
  }

  /// True when the only (in-window) term is the u^0 one.
  bool constant_in_u() const {
    for (const auto& [p, c] : terms)
      if (p != 0 && !c.is_zero()) return false;
    return true;
  }

  std::string to_string() const;
};

std::string exponent_string(const Expo& e);

}  // namespace angw
