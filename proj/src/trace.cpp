#include "mtdc/trace.hpp"

#include <algorithm>
#include <cmath>

namespace mtdc {

double max_abs(const Trace& tr, std::size_t from, std::size_t to) {
  if (tr.empty()) return 0.0;
  from = std::min(from, tr.size() - 1);
  to = std::min(to, tr.size() - 1);
  double m = 0.0;
  for (std::size_t i = from; i <= to; ++i) m = std::max(m, std::fabs(tr.samples[i]));
  return m;
}

double signed_extremum(const Trace& tr, std::size_t from, std::size_t to) {
  if (tr.empty()) return 0.0;
  from = std::min(from, tr.size() - 1);
  to = std::min(to, tr.size() - 1);
  double best = tr.samples[from];
  for (std::size_t i = from; i <= to; ++i) {
    if (std::fabs(tr.samples[i]) > std::fabs(best)) best = tr.samples[i];
  }
  return best;
}

Trace subtract(const Trace& a, const Trace& b, const std::string& name) {
  if (a.size() != b.size() || a.dt != b.dt || a.t0 != b.t0)
    throw std::invalid_argument("subtract: traces are not aligned");
  Trace out = a;
  out.name = name;
  for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] -= b.samples[i];
  return out;
}

Trace decimate(const Trace& tr, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("decimate: zero stride");
  Trace out;
  out.name = tr.name;
  out.unit = tr.unit;
  out.t0 = tr.t0;
  out.dt = tr.dt * static_cast<double>(stride);
  out.samples.reserve(tr.size() / stride + 1);
  for (std::size_t i = 0; i < tr.size(); i += stride) out.samples.push_back(tr.samples[i]);
  return out;
}

}  // namespace mtdc
