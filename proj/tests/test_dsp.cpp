#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mtdc/dsp.hpp"

using namespace mtdc;

namespace {

Trace ramp_trace(std::size_t n, double slope, double dt = 1e-5) {
  Trace tr{"ramp", "A", 0.0, dt, {}};
  tr.samples.resize(n);
  for (std::size_t k = 0; k < n; ++k) tr.samples[k] = slope * static_cast<double>(k);
  return tr;
}

Trace constant_trace(std::size_t n, double value, double dt = 1e-5) {
  Trace tr{"const", "V", 0.0, dt, std::vector<double>(n, value)};
  return tr;
}

}  // namespace

TEST_CASE("infinite snr leaves the samples untouched") {
  const Trace tr = ramp_trace(100, 2.0);
  const Trace out = inject_wgn(tr, std::numeric_limits<double>::infinity(), 7);
  CHECK(out.samples == tr.samples);
}

TEST_CASE("noise injection is deterministic in the seed") {
  const Trace tr = constant_trace(256, 5.0);
  const Trace a = inject_wgn(tr, 30.0, 42);
  const Trace b = inject_wgn(tr, 30.0, 42);
  CHECK(a.samples == b.samples);  // byte-identical replay

  const Trace c = inject_wgn(tr, 30.0, 43);
  CHECK(a.samples != c.samples);

  // Every sample is actually perturbed at a finite snr.
  bool any_changed = false;
  for (std::size_t i = 0; i < tr.size(); ++i)
    if (a.samples[i] != tr.samples[i]) any_changed = true;
  CHECK(any_changed);
}

TEST_CASE("channel sub-seeds decorrelate parallel streams") {
  CHECK(channel_seed(5, 0) != channel_seed(5, 1));
  CHECK(channel_seed(5, 0) != channel_seed(6, 0));
  CHECK(channel_seed(5, 2) == channel_seed(5, 2));

  const Trace tr = constant_trace(128, 1.0);
  const Trace a = inject_wgn(tr, 20.0, channel_seed(9, 0));
  const Trace b = inject_wgn(tr, 20.0, channel_seed(9, 1));
  CHECK(a.samples != b.samples);
}

TEST_CASE("the injected noise level follows the snr definition") {
  // 0 dB on a constant-2 signal: noise variance equals the signal power 4.
  const std::size_t n = 40000;
  const Trace tr = constant_trace(n, 2.0);
  const Trace out = inject_wgn(tr, 0.0, 1234);
  double mean = 0.0;
  for (double v : out.samples) mean += v - 2.0;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : out.samples) var += (v - 2.0 - mean) * (v - 2.0 - mean);
  var /= static_cast<double>(n - 1);
  CHECK(std::fabs(mean) < 0.05);            // zero-mean
  CHECK(var == doctest::Approx(4.0).epsilon(0.06));

  // 20 dB: noise power is one hundredth of the signal power.
  const Trace quiet = inject_wgn(tr, 20.0, 1234);
  double var20 = 0.0;
  for (double v : quiet.samples) var20 += (v - 2.0) * (v - 2.0);
  var20 /= static_cast<double>(n - 1);
  CHECK(var20 == doctest::Approx(0.04).epsilon(0.06));
}

TEST_CASE("the reference power window controls the scaling") {
  // Signal: zero for the first half, level 3 afterwards. Referencing the
  // active half must give the same noise level as a fully active trace.
  Trace tr = constant_trace(2000, 0.0);
  for (std::size_t i = 1000; i < 2000; ++i) tr.samples[i] = 3.0;
  const Trace out = inject_wgn(tr, 0.0, 77, 1000, 2000);
  double var = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) var += out.samples[i] * out.samples[i];
  var /= 999.0;
  CHECK(var == doctest::Approx(9.0).epsilon(0.2));

  // A degenerate window falls back to the whole trace instead of throwing.
  CHECK_NOTHROW(inject_wgn(tr, 10.0, 1, 500, 500));

  // An all-zero reference cannot define an snr.
  const Trace zeros = constant_trace(100, 0.0);
  CHECK_THROWS_AS(inject_wgn(zeros, 10.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(inject_wgn(tr, 10.0, 1, 0, 1000), std::invalid_argument);

  // Negative-infinite or nan snr is rejected, empty traces are rejected.
  CHECK_THROWS_AS(inject_wgn(tr, -std::numeric_limits<double>::infinity(), 1),
                  std::invalid_argument);
  const Trace empty{"e", "V", 0.0, 1e-5, {}};
  CHECK_THROWS_AS(inject_wgn(empty, 10.0, 1), std::invalid_argument);
}

TEST_CASE("rolling mean averages a causal window with a partial prefix") {
  Trace tr = ramp_trace(4, 1.0);  // 0 1 2 3
  const Trace w2 = rolling_mean(tr, 2);
  CHECK(w2.samples[0] == doctest::Approx(0.0));
  CHECK(w2.samples[1] == doctest::Approx(0.5));
  CHECK(w2.samples[2] == doctest::Approx(1.5));
  CHECK(w2.samples[3] == doctest::Approx(2.5));

  const Trace w3 = rolling_mean(tr, 3);
  CHECK(w3.samples[0] == doctest::Approx(0.0));
  CHECK(w3.samples[1] == doctest::Approx(0.5));
  CHECK(w3.samples[2] == doctest::Approx(1.0));
  CHECK(w3.samples[3] == doctest::Approx(2.0));

  // window 1 is the identity; a constant trace is invariant for any window.
  CHECK(rolling_mean(tr, 1).samples == tr.samples);
  const Trace c = constant_trace(16, 7.5);
  CHECK(rolling_mean(c, 5).samples == c.samples);

  CHECK_THROWS_AS(rolling_mean(tr, 0), std::invalid_argument);
  CHECK_THROWS_AS(rolling_mean(tr, -3), std::invalid_argument);
}

TEST_CASE("windowed delta measures change over the lag with a prefix reference") {
  // dt = 1e-5, window 5e-5 -> lag of 5 samples; on a ramp of slope 2 per
  // sample the delta saturates at 2 * 5 = 10.
  const Trace tr = ramp_trace(12, 2.0);
  const Trace d = windowed_delta(tr, 5e-5);
  REQUIRE(d.size() == tr.size());
  const double expected[] = {0, 2, 4, 6, 8, 10, 10, 10, 10, 10, 10, 10};
  for (std::size_t i = 0; i < d.size(); ++i)
    CHECK(d.samples[i] == doctest::Approx(expected[i]));

  // The delta is a magnitude: a falling ramp gives the same values.
  const Trace neg = ramp_trace(12, -2.0);
  const Trace dn = windowed_delta(neg, 5e-5);
  for (std::size_t i = 0; i < dn.size(); ++i)
    CHECK(dn.samples[i] == doctest::Approx(expected[i]));

  CHECK_THROWS_AS(windowed_delta(tr, 1e-9), std::invalid_argument);  // < one sample
  Trace bad = tr;
  bad.dt = 0.0;
  CHECK_THROWS_AS(windowed_delta(bad, 1e-5), std::invalid_argument);
}

TEST_CASE("streaming blocks agree with their batch counterparts") {
  const Trace tr = ramp_trace(64, 0.37);
  Trace noisy = inject_wgn(tr, 10.0, 5);

  StreamingMean mean(7);
  const Trace batch_mean = rolling_mean(noisy, 7);
  for (std::size_t i = 0; i < noisy.size(); ++i)
    CHECK(mean.push(noisy.samples[i]) == doctest::Approx(batch_mean.samples[i]));

  StreamingDelta delta(9);
  const Trace batch_delta = windowed_delta(noisy, 9e-5);
  for (std::size_t i = 0; i < noisy.size(); ++i)
    CHECK(delta.push(noisy.samples[i]) == doctest::Approx(batch_delta.samples[i]));

  CHECK_THROWS_AS(StreamingDelta(0), std::invalid_argument);
  CHECK_THROWS_AS(StreamingMean(0), std::invalid_argument);
}

TEST_CASE("the finite-difference derivative reproduces a ramp slope") {
  const Trace tr = ramp_trace(10, 2.0, 0.5);  // slope 4 per second
  const Trace d = finite_difference(tr);
  CHECK(d.samples[0] == doctest::Approx(0.0));  // no left neighbour
  for (std::size_t i = 1; i < d.size(); ++i)
    CHECK(d.samples[i] == doctest::Approx(4.0));
  CHECK(d.unit == "A/s");
}
