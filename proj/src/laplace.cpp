#include "mtdc/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mtdc {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Gaver summation weights for an even number of terms.
std::vector<double> gaver_weights(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("real-axis inversion order must be even and >= 2");
  const int half = order / 2;
  std::vector<double> v(static_cast<std::size_t>(order) + 1, 0.0);
  for (int k = 1; k <= order; ++k) {
    double sum = 0.0;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      double term = std::pow(static_cast<double>(j), half) * factorial(2 * j);
      term /= factorial(half - j) * factorial(j) * factorial(j - 1) *
              factorial(k - j) * factorial(2 * j - k);
      sum += term;
    }
    v[static_cast<std::size_t>(k)] = ((k + half) % 2 == 0 ? 1.0 : -1.0) * sum;
  }
  return v;
}

void check_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("empty time grid");
  double prev = 0.0;
  for (double t : t_grid) {
    if (t <= 0.0) throw std::invalid_argument("inversion times must be > 0");
    if (t <= prev) throw std::invalid_argument("time grid must be strictly increasing");
    prev = t;
  }
}

Trace make_trace(const std::string& name, const std::vector<double>& t_grid,
                 std::vector<double> samples) {
  // The grids used here are uniform; keep (t0, dt) from the first two points.
  Trace tr;
  tr.name = name;
  tr.unit = "V";
  tr.t0 = t_grid.front();
  tr.dt = t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 1.0;
  tr.samples = std::move(samples);
  return tr;
}

}  // namespace

Trace invert_real_axis(const SFunction& F, const std::vector<double>& t_grid, int order) {
  check_grid(t_grid);
  static const double ln2 = std::numbers::ln2;
  const std::vector<double> v = gaver_weights(order);
  std::vector<double> out(t_grid.size(), 0.0);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    const double a = ln2 / t;
    double sum = 0.0;
    for (int k = 1; k <= order; ++k)
      sum += v[static_cast<std::size_t>(k)] * F(Cplx(a * k, 0.0)).real();
    out[i] = a * sum;
  }
  return make_trace("real_axis_inversion", t_grid, std::move(out));
}

Trace invert_contour(const SFunction& F, const std::vector<double>& t_grid, int nodes) {
  check_grid(t_grid);
  if (nodes < 4) throw std::invalid_argument("contour inversion needs >= 4 nodes");
  const double m = static_cast<double>(nodes);
  std::vector<double> out(t_grid.size(), 0.0);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    const double r = 2.0 * m / (5.0 * t);
    double acc = 0.5 * std::exp(r * t) * F(Cplx(r, 0.0)).real();
    for (int k = 1; k < nodes; ++k) {
      const double theta = k * std::numbers::pi / m;
      const double cot = std::cos(theta) / std::sin(theta);
      const Cplx s(r * theta * cot, r * theta);
      const double sigma = theta + (theta * cot - 1.0) * cot;
      const Cplx val = std::exp(s * t) * F(s) * Cplx(1.0, sigma);
      acc += val.real();
    }
    out[i] = acc * r / m;
  }
  return make_trace("contour_inversion", t_grid, std::move(out));
}

InversionResult invert_laplace(const SFunction& F, const std::vector<double>& t_grid,
                               double tolerance) {
  InversionResult res;
  res.primary = invert_real_axis(F, t_grid);
  res.alternate = invert_contour(F, t_grid);
  double max_diff = 0.0, max_mag = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    max_diff = std::max(max_diff,
                        std::fabs(res.primary.samples[i] - res.alternate.samples[i]));
    max_mag = std::max({max_mag, std::fabs(res.primary.samples[i]),
                        std::fabs(res.alternate.samples[i])});
  }
  res.max_rel_discrepancy = max_mag < 1e-300 ? 0.0 : max_diff / max_mag;
  if (res.max_rel_discrepancy > tolerance) {
    std::ostringstream os;
    os << "inverse-Laplace methods disagree: max relative discrepancy "
       << res.max_rel_discrepancy << " exceeds tolerance " << tolerance;
    throw numerical_instability_error(os.str(), res.primary, res.alternate,
                                      res.max_rel_discrepancy);
  }
  return res;
}

std::vector<double> time_grid(double t_from, double t_to, std::size_t n) {
  if (n < 2 || t_to <= t_from || t_from <= 0.0)
    throw std::invalid_argument("bad time grid request");
  std::vector<double> g(n);
  const double step = (t_to - t_from) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = t_from + step * static_cast<double>(i);
  return g;
}

}  // namespace mtdc
