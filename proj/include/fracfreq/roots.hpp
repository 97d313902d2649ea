#pragma once

#include <vector>

#include "fracfreq/complex.hpp"

namespace fracfreq {

struct BranchIndex {
  int k = 0;
};

/// Modulus/argument pair with phi in (-pi, pi].
struct PolarForm {
  double r = 0.0;
  double phi = 0.0;
};

PolarForm to_polar(const Complex& s);
Complex from_polar(const PolarForm& p);

/// All n distinct n-th roots of s by de Moivre's formula, ordered by
/// branch index k = 0..n-1. Index 0 is the principal root.
std::vector<Complex> nth_roots(const Complex& s, int n);

/// Number of branches enumerated for s^alpha: ceil(1/alpha), with 1/alpha
/// snapped to the nearest integer when alpha is a reciprocal integer up to
/// rounding (so 1.0/3 yields 3 branches, not 4).
int branch_count(double alpha);

/// Branch k of s^alpha for alpha in (0, 1]:
///   |s|^alpha * [cos(alpha (arg s + 2 k pi)) + j sin(alpha (arg s + 2 k pi))]
Complex pow_branch(const Complex& s, double alpha, BranchIndex k);

/// Principal power |s|^alpha * cis(alpha arg s) for any alpha >= 0.
/// Serves as the reference oracle for the closed-form results.
/// alpha == 0 yields exactly 1.
Complex principal_pow(const Complex& s, double alpha);

}  // namespace fracfreq
