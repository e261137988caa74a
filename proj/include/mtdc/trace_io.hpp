#pragma once

#include <string>
#include <vector>

#include "mtdc/trace.hpp"

namespace mtdc {

// CSV with a shared time column: "time_s,<name>_<unit>,...". All traces must
// share t0, dt and length.
std::string traces_to_csv(const std::vector<const Trace*>& traces);
void write_traces_csv(const std::string& path, const std::vector<const Trace*>& traces);

// Stable numeric formatting used by every report writer (byte-stable output).
std::string format_double(double v);

}  // namespace mtdc
