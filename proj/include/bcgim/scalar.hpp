#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace bcgim {

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both components are GMP rationals, kept canonical (lowest terms,
/// positive denominator) by mpq_class after every operation.
class Scalar {
public:
  Scalar() = default;
  Scalar(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class a, mpq_class b = 0);

  static Scalar sqrt2() { return Scalar(0, 1); }
  static Scalar rational(long num, long den = 1);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  /// Galois conjugate a - b*sqrt(2).
  Scalar conjugate() const { return Scalar(a_, -b_); }
  /// Field norm a^2 - 2b^2.
  mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// Sign of the real number a + b*sqrt(2): -1, 0 or +1.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Canonical text: "a", "b√2", "a+b√2" or "a-b√2" with reduced fractions.
  std::string str() const;

private:
  mpq_class a_{0};
  mpq_class b_{0};
};

}  // namespace bcgim
