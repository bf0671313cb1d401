#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace angw {

/// Raised on malformed requests (bad indices, mismatched rings, bad flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would lose in-window data to a truncation cap.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for queries the engine deliberately does not answer.
struct UnsupportedQueryError : UsageError {
  using UsageError::UsageError;
};

/// Exact rational number. Always in lowest terms, denominator > 0.
/// All arithmetic in the engine goes through this type; there is no
/// floating point anywhere.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit by design
  Scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw UsageError("Scalar: zero denominator");
    v_.canonicalize();
  }
  explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q".
  static Scalar from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("Scalar: cannot parse '" + s + "'");
    q.canonicalize();
    return Scalar(q);
  }

  std::string to_string() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw UsageError("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

}  // namespace angw
