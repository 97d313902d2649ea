#pragma once

#include <string>
#include <vector>

#include "fracfreq/tf_model.hpp"

namespace fracfreq {

/// Logarithmic angular-frequency grid from omega_min to omega_max, both
/// included.
struct FrequencyGrid {
  double omega_min = 1e-2;
  double omega_max = 1e2;
  int points_per_decade = 20;

  /// Throws DomainError unless 0 < omega_min < omega_max (both finite) and
  /// points_per_decade >= 1.
  void validate() const;

  /// Number of log intervals: decades * points_per_decade when that is an
  /// integer (to 1e-9), otherwise rounded up so the spacing stays uniform.
  int intervals() const;

  /// intervals() + 1 ascending frequencies; the first and last are exactly
  /// omega_min and omega_max.
  std::vector<double> points() const;
};

struct ResponsePoint {
  double omega = 0.0;
  double mag_linear = 0.0;
  double mag_db = 0.0;
  double phase_rad = 0.0;
  double phase_deg = 0.0;

  friend bool operator==(const ResponsePoint&, const ResponsePoint&) = default;
};

ResponsePoint make_point(double omega, const Complex& h);

/// Serial reference sweep. Throws EvaluationError at the first failing
/// frequency.
std::vector<ResponsePoint> sweep_serial(const FracTF& tf,
                                        const FrequencyGrid& grid);

/// OpenMP sweep. Produces the same points, bit for bit, as sweep_serial;
/// on failure reports the lowest failing frequency.
std::vector<ResponsePoint> sweep(const FracTF& tf, const FrequencyGrid& grid);

enum class OutputFormat { csv, json };

/// CSV with header `omega,mag_linear,mag_db,phase_rad,phase_deg`, or a JSON
/// array of objects with those keys.
std::string emit(const std::vector<ResponsePoint>& points, OutputFormat format);

}  // namespace fracfreq
