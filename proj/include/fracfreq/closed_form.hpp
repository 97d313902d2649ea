#pragma once

#include "fracfreq/complex.hpp"

namespace fracfreq {

/// (j omega)^alpha with omega > 0 and 0 < alpha < 1.
struct CaseIParams {
  double omega = 1.0;
  double alpha = 0.5;
};

/// a (j omega)^alpha + b with a, b, omega > 0 and 0 < alpha < 1.
struct CaseIIParams {
  double a = 1.0;
  double b = 1.0;
  double omega = 1.0;
  double alpha = 0.5;
};

// Every function below validates its parameters strictly and throws
// DomainError on violation. Only the principal branch is produced.

/// omega^alpha * [cos(alpha pi/2) + j sin(alpha pi/2)]
Complex jomega_pow(const CaseIParams& p);
/// omega^alpha
double jomega_pow_mag(const CaseIParams& p);
/// alpha pi / 2, independent of omega
double jomega_pow_arg(const CaseIParams& p);

/// (b + a omega^alpha cos(alpha pi/2)) + j a omega^alpha sin(alpha pi/2)
Complex affine_jomega(const CaseIIParams& p);

/// sqrt(b^2 + a^2 omega^(2 alpha) + 2 a b omega^alpha cos(alpha pi/2)).
///
/// The cross term carries omega^alpha, which is what expanding
/// Re^2 + Im^2 of affine_jomega gives. An omega^2 cross term only agrees
/// at omega == 1.
double affine_mag(const CaseIIParams& p);

/// atan(a omega^alpha sin(alpha pi/2) / (b + a omega^alpha cos(alpha pi/2))),
/// always in (0, pi/2).
double affine_arg(const CaseIIParams& p);

}  // namespace fracfreq
