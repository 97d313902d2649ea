#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracfreq/complex.hpp"

namespace fracfreq {

/// coeff * s^exponent
struct FracTerm {
  double coeff = 1.0;
  double exponent = 0.0;

  friend bool operator==(const FracTerm&, const FracTerm&) = default;
};

/// Sum of terms, normalized: strictly decreasing exponents, no zero
/// coefficients, at least one term.
class FracPoly {
 public:
  /// Merges equal exponents, drops zero coefficients and sorts by
  /// descending exponent. Throws DomainError if nothing is left or if an
  /// exponent is negative or non-finite.
  explicit FracPoly(std::vector<FracTerm> terms);

  const std::vector<FracTerm>& terms() const noexcept { return terms_; }

  /// True for the constant polynomial 1.
  bool is_unit() const noexcept;

  friend bool operator==(const FracPoly&, const FracPoly&) = default;

 private:
  std::vector<FracTerm> terms_;
};

/// numerator(s) / denominator(s)
struct FracTF {
  FracPoly numerator;
  FracPoly denominator;

  friend bool operator==(const FracTF&, const FracTF&) = default;
};

/// Parses an expression such as "10000/s^0.5" or
/// "(3*s^0.5+2)/(s^1.2+4*s^0.7+1)".
///
///   tf     := poly [ "/" poly ]
///   poly   := "(" poly ")" | term { ("+"|"-") term }
///   term   := ["+"|"-"] factor { "*" factor }
///   factor := number | "s" [ "^" number ]
///
/// Numbers are unsigned decimals with an optional exponent suffix (1e4).
/// Factors multiply: numbers scale the coefficient, powers of s add their
/// exponents. Throws ParseError carrying the character offset.
FracTF parse_tf(std::string_view text);

/// Canonical form accepted by parse_tf; parse_tf(pretty_print(tf)) == tf.
std::string pretty_print(const FracTF& tf);
std::string pretty_print(const FracPoly& p);

/// Sum of coeff * (j omega)^exponent. Throws DomainError for omega <= 0.
Complex eval_poly(const FracPoly& p, double omega);

/// H(j omega). Throws EvaluationError (carrying omega) when the denominator
/// vanishes or an intermediate value leaves the finite range, and
/// DomainError for omega <= 0.
Complex eval_tf(const FracTF& tf, double omega);

}  // namespace fracfreq
