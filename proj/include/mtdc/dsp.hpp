#pragma once

#include <cstdint>
#include <deque>

#include "mtdc/trace.hpp"

namespace mtdc {

// Adds zero-mean white Gaussian noise scaled to the requested SNR, with the
// signal power measured over samples [power_from, power_to] (clamped).
// snr_db = +infinity returns the trace unchanged. Deterministic for a fixed
// seed (own Box-Muller over mt19937_64, stable across platforms). Throws
// std::invalid_argument when the window has zero power and snr_db is finite.
Trace inject_wgn(const Trace& tr, double snr_db, std::uint64_t seed,
                 std::size_t power_from, std::size_t power_to);
Trace inject_wgn(const Trace& tr, double snr_db, std::uint64_t seed);

// Derives a decorrelated per-channel seed from one user-facing seed so that
// multi-channel noise streams never share an engine state.
std::uint64_t channel_seed(std::uint64_t base_seed, std::uint64_t channel);

// Causal moving average; the first (window-1) outputs average the partial
// prefix. Length preserving.
Trace rolling_mean(const Trace& tr, int window);

// |x(t) - x(t - delta_window)| per sample; inside the first window the
// reference is x(0). Throws std::invalid_argument when the window is
// shorter than one sample.
Trace windowed_delta(const Trace& tr, double delta_window);

// Two-point finite-difference derivative estimate (diagnostics only).
Trace finite_difference(const Trace& tr);

// Streaming building blocks (bounded memory, one sample at a time).
class StreamingMean {
 public:
  explicit StreamingMean(int window);
  double push(double x);

 private:
  std::size_t window_;
  double sum_ = 0.0;
  std::deque<double> buf_;
};

class StreamingDelta {
 public:
  explicit StreamingDelta(std::size_t lag_samples);
  double push(double x);  // |x - x_lagged|, prefix references the first sample

 private:
  std::size_t lag_;
  std::deque<double> buf_;
};

}  // namespace mtdc
