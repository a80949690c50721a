#include "bcgim/scalar.hpp"

#include <stdexcept>

namespace bcgim {

Scalar::Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar::rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q, 0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
  mpq_class n = norm();  // nonzero since sqrt(2) is irrational
  return Scalar(a_ / n, -b_ / n);
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2b^2.
  int c = cmp(a_ * a_, 2 * b_ * b_);
  return c > 0 ? sa : sb;
}

std::string Scalar::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string root;
  if (b_ == 1) {
    root = "√2";
  } else if (b_ == -1) {
    root = "-√2";
  } else {
    root = b_.get_str() + "√2";
  }
  if (sgn(a_) == 0) return root;
  if (sgn(b_) > 0) return a_.get_str() + "+" + root;
  return a_.get_str() + root;
}

}  // namespace bcgim
