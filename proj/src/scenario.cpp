#include "mtdc/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "mtdc/trace_io.hpp"

namespace mtdc {

namespace {

const char* const kSections[] = {"system", "topology", "fault", "relay", "sim"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct KeyValue {
  int line = 0;
  std::string key;
  std::string value;  // numeric or word token
  std::string unit;   // optional trailing unit token
};

// Accepted unit spellings per physical dimension (SI base form only;
// prefixed spellings such as "mH" or "km" are deliberately rejected).
const std::vector<std::string>& unit_tokens(const std::string& dimension) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"ohm", {"ohm", "Ohm"}},
      {"ohm_per_m", {"ohm/m", "Ohm/m"}},
      {"henry", {"H", "henry"}},
      {"henry_per_m", {"H/m", "henry/m"}},
      {"farad", {"F", "farad"}},
      {"volt", {"V", "volt"}},
      {"ampere", {"A", "ampere"}},
      {"second", {"s", "second"}},
      {"meter", {"m", "meter"}},
      {"hertz", {"Hz", "hertz"}},
      {"decibel", {"dB"}},
      {"", {}},
  };
  return table.at(dimension);
}

void check_unit(const KeyValue& kv, const std::string& dimension) {
  const auto& allowed = unit_tokens(dimension);
  if (kv.unit.empty()) {
    if (allowed.empty()) return;
    return;  // bare SI base value: accepted for every physical key
  }
  if (allowed.empty())
    throw scenario_parse_error(kv.line, kv.key,
                               "dimensionless field must not carry a unit ('" +
                                   kv.unit + "')");
  for (const auto& u : allowed)
    if (kv.unit == u) return;
  throw scenario_parse_error(
      kv.line, kv.key,
      "unit '" + kv.unit + "' is not the SI base form (expected '" + allowed.front() +
          "')");
}

double parse_number(const KeyValue& kv) {
  const std::string v = lower(kv.value);
  if (v == "inf" || v == "infinity" || v == "+inf")
    return std::numeric_limits<double>::infinity();
  const char* begin = kv.value.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw scenario_parse_error(kv.line, kv.key, "not a number: '" + kv.value + "'");
  return x;
}

long long parse_integer(const KeyValue& kv) {
  const double x = parse_number(kv);
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || std::abs(x) > 9.0e18)
    throw scenario_parse_error(kv.line, kv.key, "expected an integer: '" + kv.value + "'");
  return static_cast<long long>(r);
}

bool parse_bool(const KeyValue& kv) {
  const std::string v = lower(kv.value);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw scenario_parse_error(kv.line, kv.key, "expected a boolean: '" + kv.value + "'");
}

double positive(const KeyValue& kv, double x) {
  if (!(x > 0.0)) throw scenario_parse_error(kv.line, kv.key, "must be > 0");
  return x;
}

double non_negative(const KeyValue& kv, double x) {
  if (!(x >= 0.0)) throw scenario_parse_error(kv.line, kv.key, "must be >= 0");
  return x;
}

class Parser {
 public:
  Scenario parse(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    std::string section;
    bool fault_section_seen = false;
    while (std::getline(is, raw)) {
      ++line_no;
      std::string line = raw;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;

      if (line.front() == '[') {
        if (line.back() != ']')
          throw scenario_parse_error(line_no, "", "malformed section header: " + line);
        section = lower(trim(line.substr(1, line.size() - 2)));
        if (std::find(std::begin(kSections), std::end(kSections), section) ==
            std::end(kSections))
          throw scenario_parse_error(line_no, section, "unknown section");
        if (section == "fault") fault_section_seen = true;
        continue;
      }

      auto sep = line.find('=');
      if (sep == std::string::npos) sep = line.find(':');
      if (sep == std::string::npos)
        throw scenario_parse_error(line_no, "", "expected 'key = value': " + line);

      KeyValue kv;
      kv.line = line_no;
      kv.key = lower(trim(line.substr(0, sep)));
      std::string rest = trim(line.substr(sep + 1));
      if (kv.key.empty())
        throw scenario_parse_error(line_no, "", "missing key: " + line);
      if (rest.empty())
        throw scenario_parse_error(line_no, kv.key, "missing value");

      const auto space = rest.find_first_of(" \t");
      if (space == std::string::npos) {
        kv.value = rest;
      } else {
        kv.value = rest.substr(0, space);
        kv.unit = trim(rest.substr(space + 1));
        if (kv.unit.find_first_of(" \t") != std::string::npos)
          throw scenario_parse_error(line_no, kv.key,
                                     "trailing tokens after unit: '" + kv.unit + "'");
      }
      apply(kv);
    }

    (void)fault_section_seen;  // an empty [fault] section simply keeps kind = None
    finalize();
    return sc_;
  }

 private:
  void apply(const KeyValue& kv) {
    SystemParams& sp = sc_.system;
    RelaySettings& rs = sc_.relay;
    SimSettings& sim = sc_.sim;

    // ---- system ----
    if (kv.key == "arm_resistance") {
      check_unit(kv, "ohm");
      sp.mmc.arm_resistance = non_negative(kv, parse_number(kv));
    } else if (kv.key == "arm_inductance") {
      check_unit(kv, "henry");
      sp.mmc.arm_inductance = positive(kv, parse_number(kv));
    } else if (kv.key == "sm_capacitance") {
      check_unit(kv, "farad");
      sp.mmc.sm_capacitance = positive(kv, parse_number(kv));
    } else if (kv.key == "sm_count") {
      check_unit(kv, "");
      const long long n = parse_integer(kv);
      if (n < 1) throw scenario_parse_error(kv.line, kv.key, "must be >= 1");
      sp.mmc.sm_count = static_cast<int>(n);
    } else if (kv.key == "dc_link_voltage") {
      check_unit(kv, "volt");
      sp.mmc.dc_link_voltage = positive(kv, parse_number(kv));
    } else if (kv.key == "line_r_per_m") {
      check_unit(kv, "ohm_per_m");
      sp.line_r_per_m = non_negative(kv, parse_number(kv));
    } else if (kv.key == "line_l_per_m") {
      check_unit(kv, "henry_per_m");
      sp.line_l_per_m = positive(kv, parse_number(kv));
    } else if (kv.key == "line_mutual_ratio") {
      check_unit(kv, "");
      const double x = parse_number(kv);
      if (x < 0.0 || x >= 1.0)
        throw scenario_parse_error(kv.line, kv.key, "must be in [0, 1)");
      sp.line_mutual_ratio = x;
    } else if (kv.key == "clr") {
      check_unit(kv, "henry");
      const double h = positive(kv, parse_number(kv));
      sp.clr = {h, h, h, h};
      note_clr(h);
    } else if (kv.key == "clr12" || kv.key == "clr21" || kv.key == "clr14" ||
               kv.key == "clr23") {
      check_unit(kv, "henry");
      const double h = positive(kv, parse_number(kv));
      if (kv.key == "clr12") sp.clr.clr12 = h;
      if (kv.key == "clr21") sp.clr.clr21 = h;
      if (kv.key == "clr14") sp.clr.clr14 = h;
      if (kv.key == "clr23") sp.clr.clr23 = h;
      note_clr(h);

      // ---- topology ----
    } else if (kv.key == "line12_length" || kv.key == "line14_length" ||
               kv.key == "line23_length") {
      check_unit(kv, "meter");
      const double l = positive(kv, parse_number(kv));
      if (kv.key == "line12_length") sp.line12_length = l;
      if (kv.key == "line14_length") sp.line14_length = l;
      if (kv.key == "line23_length") sp.line23_length = l;
    } else if (kv.key == "c14" || kv.key == "c23") {
      if (lower(kv.value) == "auto") {
        if (!kv.unit.empty())
          throw scenario_parse_error(kv.line, kv.key, "'auto' takes no unit");
        (kv.key == "c14" ? sp.c14 : sp.c23) = -1.0;
      } else {
        check_unit(kv, "farad");
        (kv.key == "c14" ? sp.c14 : sp.c23) = positive(kv, parse_number(kv));
      }

      // ---- fault ----
    } else if (kv.key == "kind") {
      check_unit(kv, "");
      const auto k = fault_kind_from_string(lower(kv.value));
      if (!k)
        throw scenario_parse_error(kv.line, kv.key,
                                   "unknown fault kind: '" + kv.value + "'");
      sc_.fault.kind = *k;
      kind_line_ = kv.line;
    } else if (kv.key == "location_d") {
      check_unit(kv, "");
      const double d = parse_number(kv);
      if (d < 0.0 || d > 1.0)
        throw scenario_parse_error(kv.line, kv.key,
                                   "fraction out of range [0, 1]: " + kv.value);
      sc_.fault.location_d = d;
      location_line_ = kv.line;
    } else if (kv.key == "r_f") {
      check_unit(kv, "ohm");
      sc_.fault.r_f = non_negative(kv, parse_number(kv));
    } else if (kv.key == "t_fault") {
      check_unit(kv, "second");
      sc_.fault.t_fault = non_negative(kv, parse_number(kv));

      // ---- relay ----
    } else if (kv.key == "u_set") {
      check_unit(kv, "volt");
      rs.u_set = positive(kv, parse_number(kv));
    } else if (kv.key == "e_set") {
      check_unit(kv, "volt");
      rs.e_set = non_negative(kv, parse_number(kv));
    } else if (kv.key == "i_set") {
      check_unit(kv, "ampere");
      rs.i_set = positive(kv, parse_number(kv));
    } else if (kv.key == "rolling_window") {
      check_unit(kv, "");
      const long long n = parse_integer(kv);
      if (n < 1) throw scenario_parse_error(kv.line, kv.key, "must be >= 1");
      rs.rolling_window = static_cast<int>(n);
    } else if (kv.key == "delta_window") {
      check_unit(kv, "second");
      rs.delta_window = positive(kv, parse_number(kv));
    } else if (kv.key == "current_delta_window") {
      check_unit(kv, "second");
      rs.current_delta_window = positive(kv, parse_number(kv));
    } else if (kv.key == "polarity_window") {
      check_unit(kv, "second");
      rs.polarity_window = positive(kv, parse_number(kv));
    } else if (kv.key == "sample_rate") {
      check_unit(kv, "hertz");
      rs.sample_rate = positive(kv, parse_number(kv));
    } else if (kv.key == "filter_enabled") {
      check_unit(kv, "");
      rs.filter_enabled = parse_bool(kv);
    } else if (kv.key == "snr_db") {
      check_unit(kv, "decibel");
      sc_.snr_db = parse_number(kv);
    } else if (kv.key == "seed") {
      check_unit(kv, "");
      const long long n = parse_integer(kv);
      if (n < 0) throw scenario_parse_error(kv.line, kv.key, "must be >= 0");
      sc_.seed = static_cast<std::uint64_t>(n);

      // ---- sim ----
    } else if (kv.key == "dt") {
      check_unit(kv, "second");
      sim.dt = positive(kv, parse_number(kv));
    } else if (kv.key == "t_end") {
      check_unit(kv, "second");
      sim.t_end = positive(kv, parse_number(kv));
    } else if (kv.key == "stiff_sources") {
      check_unit(kv, "");
      sim.stiff_sources = parse_bool(kv);
    } else if (kv.key == "ramp_fraction") {
      check_unit(kv, "");
      sim.ramp_fraction = parse_number(kv);
    } else if (kv.key == "ramp_duration") {
      check_unit(kv, "second");
      sim.ramp_duration = non_negative(kv, parse_number(kv));
    } else if (kv.key == "prefault_current") {
      check_unit(kv, "ampere");
      sim.prefault_current = parse_number(kv);
    } else if (kv.key == "ptp_alpha") {
      check_unit(kv, "");
      const double a = parse_number(kv);
      if (!(a > 0.0) || a > 1.0)
        throw scenario_parse_error(kv.line, kv.key, "must be in (0, 1]");
      sim.ptp_alpha = a;

    } else {
      throw scenario_parse_error(kv.line, kv.key, "unknown key");
    }
  }

  void note_clr(double henry) {
    if (henry < 0.09 || henry > 0.17) {
      std::ostringstream os;
      os << "current-limiting reactor " << format_double(henry)
         << " H is outside the validated range [0.09, 0.17] H";
      sc_.warnings.push_back(os.str());
    }
  }

  void finalize() {
    try {
      validate(sc_.fault);
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      const int line = what.find("location_d") != std::string::npos && location_line_
                           ? location_line_
                           : kind_line_;
      throw scenario_parse_error(line, "fault", what);
    }
    if (sc_.sim.t_end <= sc_.fault.t_fault && sc_.fault.kind != FaultKind::None)
      throw scenario_parse_error(kind_line_, "t_fault",
                                 "fault inception is at or after t_end");
    if (!sc_.sim.stiff_sources &&
        (sc_.sim.ramp_fraction != 0.0 || sc_.sim.prefault_current != 0.0))
      throw scenario_parse_error(
          0, "sim", "ramp_fraction/prefault_current require stiff_sources = true");
  }

  Scenario sc_;
  int kind_line_ = 0;
  int location_line_ = 0;
};

}  // namespace

Scenario load_scenario(const std::string& text) {
  Parser p;
  return p.parse(text);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw scenario_parse_error(0, "file", "cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return load_scenario(buf.str());
}

std::string serialize(const Scenario& sc) {
  std::ostringstream os;
  const SystemParams& sp = sc.system;
  const RelaySettings& rs = sc.relay;
  const SimSettings& sim = sc.sim;
  const auto d = [](double v) { return format_double(v); };

  os << "[system]\n";
  os << "arm_resistance = " << d(sp.mmc.arm_resistance) << " ohm\n";
  os << "arm_inductance = " << d(sp.mmc.arm_inductance) << " H\n";
  os << "sm_capacitance = " << d(sp.mmc.sm_capacitance) << " F\n";
  os << "sm_count = " << sp.mmc.sm_count << "\n";
  os << "dc_link_voltage = " << d(sp.mmc.dc_link_voltage) << " V\n";
  os << "line_r_per_m = " << d(sp.line_r_per_m) << " ohm/m\n";
  os << "line_l_per_m = " << d(sp.line_l_per_m) << " H/m\n";
  os << "line_mutual_ratio = " << d(sp.line_mutual_ratio) << "\n";
  os << "clr12 = " << d(sp.clr.clr12) << " H\n";
  os << "clr21 = " << d(sp.clr.clr21) << " H\n";
  os << "clr14 = " << d(sp.clr.clr14) << " H\n";
  os << "clr23 = " << d(sp.clr.clr23) << " H\n";
  os << "\n[topology]\n";
  os << "line12_length = " << d(sp.line12_length) << " m\n";
  os << "line14_length = " << d(sp.line14_length) << " m\n";
  os << "line23_length = " << d(sp.line23_length) << " m\n";
  os << "c14 = " << (sp.c14 < 0.0 ? std::string("auto") : d(sp.c14) + " F") << "\n";
  os << "c23 = " << (sp.c23 < 0.0 ? std::string("auto") : d(sp.c23) + " F") << "\n";
  os << "\n[fault]\n";
  os << "kind = " << to_string(sc.fault.kind) << "\n";
  if (sc.fault.location_d) os << "location_d = " << d(*sc.fault.location_d) << "\n";
  os << "r_f = " << d(sc.fault.r_f) << " ohm\n";
  os << "t_fault = " << d(sc.fault.t_fault) << " s\n";
  os << "\n[relay]\n";
  os << "u_set = " << d(rs.u_set) << " V\n";
  os << "e_set = " << d(rs.e_set) << " V\n";
  os << "i_set = " << d(rs.i_set) << " A\n";
  os << "rolling_window = " << rs.rolling_window << "\n";
  os << "delta_window = " << d(rs.delta_window) << " s\n";
  os << "current_delta_window = " << d(rs.current_delta_window) << " s\n";
  os << "polarity_window = " << d(rs.polarity_window) << " s\n";
  os << "sample_rate = " << d(rs.sample_rate) << " Hz\n";
  os << "filter_enabled = " << (rs.filter_enabled ? "true" : "false") << "\n";
  os << "snr_db = " << d(sc.snr_db) << (std::isfinite(sc.snr_db) ? " dB" : "") << "\n";
  os << "seed = " << sc.seed << "\n";
  os << "\n[sim]\n";
  os << "dt = " << d(sim.dt) << " s\n";
  os << "t_end = " << d(sim.t_end) << " s\n";
  os << "stiff_sources = " << (sim.stiff_sources ? "true" : "false") << "\n";
  os << "ramp_fraction = " << d(sim.ramp_fraction) << "\n";
  os << "ramp_duration = " << d(sim.ramp_duration) << " s\n";
  os << "prefault_current = " << d(sim.prefault_current) << " A\n";
  os << "ptp_alpha = " << d(sim.ptp_alpha) << "\n";
  return os.str();
}

bool operator==(const Scenario& a, const Scenario& b) {
  const auto& am = a.system.mmc;
  const auto& bm = b.system.mmc;
  const auto& ac = a.system.clr;
  const auto& bc = b.system.clr;
  return am.arm_resistance == bm.arm_resistance &&
         am.arm_inductance == bm.arm_inductance &&
         am.sm_capacitance == bm.sm_capacitance && am.sm_count == bm.sm_count &&
         am.dc_link_voltage == bm.dc_link_voltage &&
         ac.clr12 == bc.clr12 && ac.clr21 == bc.clr21 && ac.clr14 == bc.clr14 &&
         ac.clr23 == bc.clr23 &&
         a.system.line_mutual_ratio == b.system.line_mutual_ratio &&
         a.system.line_r_per_m == b.system.line_r_per_m &&
         a.system.line_l_per_m == b.system.line_l_per_m &&
         a.system.line12_length == b.system.line12_length &&
         a.system.line14_length == b.system.line14_length &&
         a.system.line23_length == b.system.line23_length &&
         a.system.c14 == b.system.c14 && a.system.c23 == b.system.c23 &&
         a.fault.kind == b.fault.kind && a.fault.location_d == b.fault.location_d &&
         a.fault.r_f == b.fault.r_f && a.fault.t_fault == b.fault.t_fault &&
         a.relay.u_set == b.relay.u_set && a.relay.e_set == b.relay.e_set &&
         a.relay.i_set == b.relay.i_set &&
         a.relay.rolling_window == b.relay.rolling_window &&
         a.relay.delta_window == b.relay.delta_window &&
         a.relay.current_delta_window == b.relay.current_delta_window &&
         a.relay.polarity_window == b.relay.polarity_window &&
         a.relay.sample_rate == b.relay.sample_rate &&
         a.relay.filter_enabled == b.relay.filter_enabled &&
         a.snr_db == b.snr_db && a.seed == b.seed && a.sim.dt == b.sim.dt &&
         a.sim.t_end == b.sim.t_end && a.sim.stiff_sources == b.sim.stiff_sources &&
         a.sim.ramp_fraction == b.sim.ramp_fraction &&
         a.sim.ramp_duration == b.sim.ramp_duration &&
         a.sim.prefault_current == b.sim.prefault_current &&
         a.sim.ptp_alpha == b.sim.ptp_alpha;
}

}  // namespace mtdc
