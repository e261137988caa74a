#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtdc {

// Uniformly sampled time series of one electrical quantity.
struct Trace {
  std::string name;
  std::string unit;   // SI base symbol: "V", "A", "s", ...
  double t0 = 0.0;    // time of samples[0], seconds
  double dt = 1.0;    // sample spacing, seconds
  std::vector<double> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  double back_time() const { return empty() ? t0 : time_at(size() - 1); }

  // First sample index at or after time t (clamped to [0, size-1]).
  std::size_t index_at_or_after(double t) const {
    if (empty()) throw std::logic_error("index_at_or_after on empty trace");
    if (t <= t0) return 0;
    double k = std::ceil((t - t0) / dt - 1e-9);
    auto i = static_cast<std::size_t>(k < 0 ? 0 : k);
    return i >= size() ? size() - 1 : i;
  }
};

// Largest |x| over sample range [from, to] (inclusive, clamped).
double max_abs(const Trace& tr, std::size_t from, std::size_t to);
inline double max_abs(const Trace& tr) {
  return tr.empty() ? 0.0 : max_abs(tr, 0, tr.size() - 1);
}

// Signed value of largest magnitude over sample range [from, to].
double signed_extremum(const Trace& tr, std::size_t from, std::size_t to);

// Element-wise difference a - b (traces must share t0/dt/length).
Trace subtract(const Trace& a, const Trace& b, const std::string& name);

// Keep every stride-th sample starting at index 0.
Trace decimate(const Trace& tr, std::size_t stride);

}  // namespace mtdc
