#include "fracfreq/response.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "fracfreq/error.hpp"

namespace fracfreq {

void FrequencyGrid::validate() const {
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max) ||
      !(omega_min > 0.0) || !(omega_min < omega_max)) {
    throw DomainError("frequency grid needs 0 < omega_min < omega_max");
  }
  if (points_per_decade < 1) {
    throw DomainError("points per decade must be at least 1");
  }
}

int FrequencyGrid::intervals() const {
  validate();
  const double span =
      (std::log10(omega_max) - std::log10(omega_min)) * points_per_decade;
  const double nearest = std::round(span);
  if (std::abs(span - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    return std::max(1, static_cast<int>(nearest));
  }
  return static_cast<int>(std::ceil(span));
}

std::vector<double> FrequencyGrid::points() const {
  const int n = intervals();
  const double lo = std::log10(omega_min);
  const double hi = std::log10(omega_max);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out.front() = omega_min;
  for (int i = 1; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = std::pow(10.0, lo + (hi - lo) * i / n);
  }
  out.back() = omega_max;
  return out;
}

ResponsePoint make_point(double omega, const Complex& h) {
  ResponsePoint p;
  p.omega = omega;
  p.mag_linear = magnitude(h);
  p.mag_db = 20.0 * std::log10(p.mag_linear);
  p.phase_rad = argument(h);
  p.phase_deg = p.phase_rad * 180.0 / std::numbers::pi;
  return p;
}

namespace {

ResponsePoint evaluate_point(const FracTF& tf, double omega) {
  const Complex h = eval_tf(tf, omega);
  if (h.is_zero()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "response is zero at omega=%.17g", omega);
    throw EvaluationError(buf, omega);
  }
  return make_point(omega, h);
}

}  // namespace

std::vector<ResponsePoint> sweep_serial(const FracTF& tf,
                                        const FrequencyGrid& grid) {
  const std::vector<double> omegas = grid.points();
  std::vector<ResponsePoint> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    out.push_back(evaluate_point(tf, w));
  }
  return out;
}

std::vector<ResponsePoint> sweep(const FracTF& tf, const FrequencyGrid& grid) {
  const std::vector<double> omegas = grid.points();
  const auto n = static_cast<std::ptrdiff_t>(omegas.size());
  std::vector<ResponsePoint> out(omegas.size());
  std::vector<unsigned char> failed(omegas.size(), 0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = evaluate_point(tf, omegas[i]);
    } catch (const std::exception&) {
      failed[i] = 1;
    }
  }

  // Re-raise the lowest failing frequency so the report matches the serial
  // sweep.
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (failed[i]) {
      evaluate_point(tf, omegas[i]);
    }
  }
  return out;
}

namespace {

void append_csv_number(std::string& out, double v) {
  char buf[40];
  // Adding +0.0 turns a negative zero into a positive one.
  std::snprintf(buf, sizeof buf, "%.16e", v + 0.0);
  out += buf;
}

}  // namespace

std::string emit(const std::vector<ResponsePoint>& points, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResponsePoint& p : points) {
      arr.push_back({{"omega", p.omega},
                     {"mag_linear", p.mag_linear},
                     {"mag_db", p.mag_db},
                     {"phase_rad", p.phase_rad},
                     {"phase_deg", p.phase_deg}});
    }
    return arr.dump(2) + "\n";
  }

  std::string out = "omega,mag_linear,mag_db,phase_rad,phase_deg\n";
  for (const ResponsePoint& p : points) {
    append_csv_number(out, p.omega);
    out += ',';
    append_csv_number(out, p.mag_linear);
    out += ',';
    append_csv_number(out, p.mag_db);
    out += ',';
    append_csv_number(out, p.phase_rad);
    out += ',';
    append_csv_number(out, p.phase_deg);
    out += '\n';
  }
  return out;
}

}  // namespace fracfreq
