#include "mtdc/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace mtdc {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[40];
  // Shortest round-trip-safe decimal form: %.17g is always exact for double,
  // but prefer fewer digits when they reparse to the same value.
  for (int precision = 9; precision <= 17; precision += 4) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string traces_to_csv(const std::vector<const Trace*>& traces) {
  if (traces.empty()) throw std::invalid_argument("traces_to_csv: no traces");
  const Trace& head = *traces.front();
  for (const Trace* tr : traces) {
    if (tr == nullptr) throw std::invalid_argument("traces_to_csv: null trace");
    if (tr->size() != head.size() || tr->dt != head.dt || tr->t0 != head.t0)
      throw std::invalid_argument("traces_to_csv: traces are not aligned");
  }

  std::string out = "time_s";
  for (const Trace* tr : traces) {
    out += ',';
    out += tr->name;
    if (!tr->unit.empty()) {
      out += '_';
      out += tr->unit;
    }
  }
  out += '\n';
  for (std::size_t i = 0; i < head.size(); ++i) {
    out += format_double(head.time_at(i));
    for (const Trace* tr : traces) {
      out += ',';
      out += format_double(tr->samples[i]);
    }
    out += '\n';
  }
  return out;
}

void write_traces_csv(const std::string& path, const std::vector<const Trace*>& traces) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << traces_to_csv(traces);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace mtdc
