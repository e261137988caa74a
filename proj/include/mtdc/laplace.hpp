#pragma once

#include <stdexcept>
#include <vector>

#include "mtdc/sdomain.hpp"
#include "mtdc/trace.hpp"

namespace mtdc {

// Thrown when the two independent inversion methods disagree beyond
// tolerance; carries both results so callers can inspect them.
class numerical_instability_error : public std::runtime_error {
 public:
  numerical_instability_error(std::string msg, Trace primary, Trace alternate,
                              double discrepancy)
      : std::runtime_error(std::move(msg)),
        primary_result(std::move(primary)),
        alternate_result(std::move(alternate)),
        max_rel_discrepancy(discrepancy) {}
  Trace primary_result;
  Trace alternate_result;
  double max_rel_discrepancy;
};

struct InversionResult {
  Trace primary;               // real-axis summation method
  Trace alternate;             // deformed-contour method
  double max_rel_discrepancy;  // max_t |a-b| / max_t |a|
};

// Real-axis summation method (Gaver / Stehfest), order n terms (even).
// Evaluates F at real s only. t values must be > 0 and strictly increasing.
Trace invert_real_axis(const SFunction& F, const std::vector<double>& t_grid,
                       int order = 14);

// Deformed-contour method (fixed Talbot), m contour nodes.
Trace invert_contour(const SFunction& F, const std::vector<double>& t_grid,
                     int nodes = 32);

// Runs both methods, reports both plus their waveform-norm relative
// discrepancy. Throws numerical_instability_error when the discrepancy
// exceeds `tolerance` (and the waveforms are not jointly negligible).
InversionResult invert_laplace(const SFunction& F, const std::vector<double>& t_grid,
                               double tolerance = 5e-3);

// Uniform grid helper: n points covering [t_from, t_to].
std::vector<double> time_grid(double t_from, double t_to, std::size_t n);

}  // namespace mtdc
