#include "mtdc/dsp.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace mtdc {

namespace {

// Gaussian deviates via Box-Muller on the raw 64-bit engine output.  The
// standard-library normal_distribution is not byte-identical across
// implementations, and reproducibility of noisy runs is part of the module
// contract, so the mapping from seed to sample stream is fixed here.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  double uniform01() {
    // 53-bit mantissa draw in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

Trace inject_wgn(const Trace& tr, double snr_db, std::uint64_t seed,
                 std::size_t power_from, std::size_t power_to) {
  if (tr.samples.empty()) throw std::invalid_argument("inject_wgn: empty trace");
  if (std::isinf(snr_db) && snr_db > 0.0) return tr;  // infinite SNR: identity
  if (!std::isfinite(snr_db))
    throw std::invalid_argument("inject_wgn: SNR must be finite or +infinity");

  // Reference signal power over [power_from, power_to); degenerate windows
  // fall back to the whole trace.
  std::size_t first = power_from;
  std::size_t last = std::min(power_to, tr.samples.size());
  if (first >= last) {
    first = 0;
    last = tr.samples.size();
  }
  double power = 0.0;
  for (std::size_t i = first; i < last; ++i) power += tr.samples[i] * tr.samples[i];
  power /= static_cast<double>(last - first);
  if (power <= 0.0)
    throw std::invalid_argument(
        "inject_wgn: reference window has zero signal power");

  const double noise_power = power / std::pow(10.0, snr_db / 10.0);
  const double sigma = std::sqrt(noise_power);

  GaussianStream gauss(seed);
  Trace out = tr;
  for (double& v : out.samples) v += sigma * gauss.next();
  return out;
}

Trace inject_wgn(const Trace& tr, double snr_db, std::uint64_t seed) {
  return inject_wgn(tr, snr_db, seed, 0, tr.samples.size());
}

std::uint64_t channel_seed(std::uint64_t base_seed, std::uint64_t channel) {
  // splitmix64 finalizer: decorrelates per-channel streams drawn from one
  // user-facing seed without coupling consecutive engines.
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (channel + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

StreamingMean::StreamingMean(int window) {
  if (window < 1) throw std::invalid_argument("rolling_mean: window must be >= 1");
  window_ = static_cast<std::size_t>(window);
}

double StreamingMean::push(double x) {
  buf_.push_back(x);
  sum_ += x;
  if (buf_.size() > window_) {
    sum_ -= buf_.front();
    buf_.pop_front();
  }
  return sum_ / static_cast<double>(buf_.size());
}

StreamingDelta::StreamingDelta(std::size_t lag_samples) : lag_(lag_samples) {
  if (lag_ == 0) throw std::invalid_argument("windowed_delta: lag must be >= 1");
}

double StreamingDelta::push(double x) {
  buf_.push_back(x);
  if (buf_.size() > lag_ + 1) buf_.pop_front();
  return std::abs(x - buf_.front());
}

Trace rolling_mean(const Trace& tr, int window) {
  StreamingMean filter(window);
  Trace out = tr;
  for (double& v : out.samples) v = filter.push(v);
  return out;
}

Trace windowed_delta(const Trace& tr, double delta_window) {
  if (tr.dt <= 0.0) throw std::invalid_argument("windowed_delta: trace dt must be > 0");
  const auto lag = static_cast<std::size_t>(std::llround(delta_window / tr.dt));
  if (lag == 0)
    throw std::invalid_argument(
        "windowed_delta: window is shorter than one sample interval");
  StreamingDelta filter(lag);
  Trace out = tr;
  out.name = tr.name + "_delta";
  for (double& v : out.samples) v = filter.push(v);
  return out;
}

Trace finite_difference(const Trace& tr) {
  if (tr.dt <= 0.0)
    throw std::invalid_argument("finite_difference: trace dt must be > 0");
  Trace out = tr;
  out.name = tr.name + "_ddt";
  out.unit = tr.unit + "/s";
  for (std::size_t i = tr.samples.size(); i-- > 1;)
    out.samples[i] = (tr.samples[i] - tr.samples[i - 1]) / tr.dt;
  if (!out.samples.empty()) out.samples[0] = 0.0;
  return out;
}

}  // namespace mtdc
