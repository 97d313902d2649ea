#include "fracfreq/roots.hpp"

#include <cmath>
#include <numbers>

#include "fracfreq/error.hpp"

namespace fracfreq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex cis_scaled(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

PolarForm to_polar(const Complex& s) { return {magnitude(s), argument(s)}; }

Complex from_polar(const PolarForm& p) { return cis_scaled(p.r, p.phi); }

std::vector<Complex> nth_roots(const Complex& s, int n) {
  if (n < 1) {
    throw DomainError("root order must be at least 1");
  }
  if (s.is_zero()) {
    throw DomainError("roots of zero have no defined argument");
  }
  const PolarForm polar = to_polar(s);
  const double root_r = std::pow(polar.r, 1.0 / n);

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  // k = n would repeat k = 0, so the enumeration stops at n - 1.
  for (int k = 0; k < n; ++k) {
    roots.push_back(cis_scaled(root_r, (polar.phi + kTwoPi * k) / n));
  }
  return roots;
}

int branch_count(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("fractional order must lie in (0, 1]");
  }
  const double inv = 1.0 / alpha;
  const double nearest = std::round(inv);
  if (std::abs(inv - nearest) <= 1e-9 * nearest) {
    return static_cast<int>(nearest);
  }
  return static_cast<int>(std::ceil(inv));
}

Complex pow_branch(const Complex& s, double alpha, BranchIndex k) {
  const int branches = branch_count(alpha);
  if (k.k < 0 || k.k >= branches) {
    throw DomainError("branch index " + std::to_string(k.k) +
                      " outside [0, " + std::to_string(branches - 1) + "]");
  }
  if (s.is_zero()) {
    throw DomainError("fractional power of zero has no defined argument");
  }
  const PolarForm polar = to_polar(s);
  return cis_scaled(std::pow(polar.r, alpha),
                    alpha * (polar.phi + kTwoPi * k.k));
}

Complex principal_pow(const Complex& s, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("exponent must be a finite nonnegative number");
  }
  if (alpha == 0.0) {
    return {1.0, 0.0};
  }
  if (s.is_zero()) {
    throw DomainError("fractional power of zero has no defined argument");
  }
  const PolarForm polar = to_polar(s);
  return cis_scaled(std::pow(polar.r, alpha), alpha * polar.phi);
}

}  // namespace fracfreq
