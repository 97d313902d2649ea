#pragma once

// Test-only reference values. Everything here goes through std::complex and
// libm's cpow/clog, which shares no code with the library's polar routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fracfreq/complex.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx to_std(const fracfreq::Complex& z) { return {z.re(), z.im()}; }

/// Principal power exp(alpha * Log s).
inline cplx pow(cplx s, double alpha) { return std::pow(s, alpha); }

/// Repeated multiplication, s^n for integer n >= 1.
inline cplx int_pow(cplx s, int n) {
  cplx acc = s;
  for (int i = 1; i < n; ++i) acc *= s;
  return acc;
}

/// a (j omega)^alpha + b
inline cplx affine(double a, double b, double omega, double alpha) {
  return a * pow(cplx{0.0, omega}, alpha) + b;
}

/// The Case II magnitude with an omega^2 cross term instead of omega^alpha:
/// sqrt(b^2 + a^2 omega^(2 alpha) + 2 a b omega^2 cos(alpha pi / 2)).
inline double affine_mag_omega_squared(double a, double b, double omega,
                                       double alpha) {
  const double pi = std::acos(-1.0);
  return std::sqrt(b * b + a * a * std::pow(omega, 2 * alpha) +
                   2 * a * b * omega * omega * std::cos(alpha * pi / 2));
}

/// |x - y| within tol absolutely or relative to the larger magnitude.
inline bool near(double x, double y, double tol) {
  const double diff = std::abs(x - y);
  return diff <= tol || diff <= tol * std::max(std::abs(x), std::abs(y));
}

inline bool near(cplx x, cplx y, double tol) {
  return near(x.real(), y.real(), tol) && near(x.imag(), y.imag(), tol);
}

inline bool near(const fracfreq::Complex& x, cplx y, double tol) {
  return near(to_std(x), y, tol);
}

/// Relative comparison of complex values by modulus of the difference.
inline bool near_rel(cplx x, cplx y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

/// Angle difference reduced to (-pi, pi].
inline double angle_diff(double x, double y) {
  const double pi = std::acos(-1.0);
  double d = std::remainder(x - y, 2 * pi);
  if (d == -pi) d = pi;
  return d;
}

/// n log-spaced points in [lo, hi], endpoints included.
inline std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / (n - 1)));
  }
  return out;
}

/// Random nonzero complex value with modulus log-uniform in [rmin, rmax].
inline cplx random_nonzero(std::mt19937_64& rng, double rmin = 1e-3,
                           double rmax = 1e3) {
  const double pi = std::acos(-1.0);
  std::uniform_real_distribution<double> logr(std::log(rmin), std::log(rmax));
  std::uniform_real_distribution<double> phi(-pi, pi);
  return std::polar(std::exp(logr(rng)), phi(rng));
}

}  // namespace oracle
