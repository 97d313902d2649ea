#include "fracfreq/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fracfreq/error.hpp"

namespace fracfreq {

Complex::Complex(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("complex value has a non-finite part");
  }
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.re() << (std::signbit(z.im()) ? "-" : "+")
            << std::abs(z.im()) << "j";
}

Complex add(const Complex& a, const Complex& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}

Complex mul(const Complex& a, const Complex& b) {
  return {a.re() * b.re() - a.im() * b.im(),
          a.re() * b.im() + b.re() * a.im()};
}

Complex div(const Complex& a, const Complex& b) {
  if (b.is_zero()) {
    throw DomainError("division by zero complex value");
  }
  // Scale the divisor first so |b|^2 neither overflows nor underflows.
  const double scale = std::max(std::abs(b.re()), std::abs(b.im()));
  const double br = b.re() / scale;
  const double bi = b.im() / scale;
  const double denom = br * br + bi * bi;
  const double re = (a.re() * br + a.im() * bi) / denom / scale;
  const double im = (a.im() * br - a.re() * bi) / denom / scale;
  return {re, im};
}

double magnitude(const Complex& s) { return std::hypot(s.re(), s.im()); }

double argument(const Complex& s) {
  if (s.is_zero()) {
    throw DomainError("argument of zero is undefined");
  }
  const double theta = std::atan2(s.im(), s.re());
  // atan2(-0.0, x<0) is -pi; fold it onto the closed end of (-pi, pi].
  return theta == -std::numbers::pi ? std::numbers::pi : theta;
}

}  // namespace fracfreq
