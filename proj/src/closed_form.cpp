#include "fracfreq/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "fracfreq/error.hpp"

namespace fracfreq {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void validate(const CaseIParams& p) {
  if (!positive_finite(p.omega)) {
    throw DomainError("omega must be positive");
  }
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
    throw DomainError("alpha must lie in the open interval (0, 1)");
  }
}

void validate(const CaseIIParams& p) {
  validate(CaseIParams{p.omega, p.alpha});
  if (!positive_finite(p.a) || !positive_finite(p.b)) {
    throw DomainError("a and b must be positive");
  }
}

double half_angle(double alpha) { return alpha * std::numbers::pi / 2.0; }

}  // namespace

Complex jomega_pow(const CaseIParams& p) {
  validate(p);
  const double mag = std::pow(p.omega, p.alpha);
  const double theta = half_angle(p.alpha);
  return {mag * std::cos(theta), mag * std::sin(theta)};
}

double jomega_pow_mag(const CaseIParams& p) {
  validate(p);
  return std::pow(p.omega, p.alpha);
}

double jomega_pow_arg(const CaseIParams& p) {
  validate(p);
  return half_angle(p.alpha);
}

Complex affine_jomega(const CaseIIParams& p) {
  validate(p);
  const double scaled = p.a * std::pow(p.omega, p.alpha);
  const double theta = half_angle(p.alpha);
  return {p.b + scaled * std::cos(theta), scaled * std::sin(theta)};
}

double affine_mag(const CaseIIParams& p) {
  validate(p);
  const double w_alpha = std::pow(p.omega, p.alpha);
  return std::sqrt(p.b * p.b + p.a * p.a * std::pow(p.omega, 2.0 * p.alpha) +
                   2.0 * p.a * p.b * w_alpha * std::cos(half_angle(p.alpha)));
}

double affine_arg(const CaseIIParams& p) {
  validate(p);
  const double scaled = p.a * std::pow(p.omega, p.alpha);
  const double theta = half_angle(p.alpha);
  return std::atan(scaled * std::sin(theta) /
                   (p.b + scaled * std::cos(theta)));
}

}  // namespace fracfreq
