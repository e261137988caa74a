#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtdc/relay.hpp"
#include "mtdc/system.hpp"

namespace mtdc {

class scenario_parse_error : public std::runtime_error {
 public:
  scenario_parse_error(int line, std::string field, const std::string& what)
      : std::runtime_error("scenario parse error at line " + std::to_string(line) +
                           ", field '" + field + "': " + what),
        line(line),
        field(std::move(field)) {}
  int line;
  std::string field;
};

// Fully validated scenario: system constants, fault, relay and solver
// settings, plus non-fatal warnings (e.g. reactor outside the usual range).
struct Scenario {
  SystemParams system;
  FaultScenario fault;
  RelaySettings relay;
  SimSettings sim;
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 1;
  std::vector<std::string> warnings;
};

// Parses the sectioned key/value scenario format ([system], [topology],
// [fault], [relay], [sim]; "key = value [unit]"). Omitted keys take the
// defaults; an absent or empty [fault] section means no fault. Unit tokens,
// when present, must be the SI base symbol the key expects. Violations throw
// scenario_parse_error carrying line and field.
Scenario load_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// Canonical text form; load_scenario(serialize(sc)) == sc.
std::string serialize(const Scenario& sc);

bool operator==(const Scenario& a, const Scenario& b);

}  // namespace mtdc
