#pragma once

#include <iosfwd>

namespace fracfreq {

/// A point sigma + j*omega of the s-plane. Both parts are finite; the
/// constructor throws DomainError otherwise.
class Complex {
 public:
  Complex() = default;
  Complex(double re, double im);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_ == 0.0 && im_ == 0.0; }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

Complex add(const Complex& a, const Complex& b);
Complex mul(const Complex& a, const Complex& b);

/// Quotient by the conjugate method. Throws DomainError when b is zero.
Complex div(const Complex& a, const Complex& b);

/// |s| = sqrt(re^2 + im^2), computed without intermediate overflow.
double magnitude(const Complex& s);

/// Principal argument in (-pi, pi]. The negative real axis maps to +pi
/// regardless of the sign of a zero imaginary part. Throws DomainError for 0.
double argument(const Complex& s);

}  // namespace fracfreq
