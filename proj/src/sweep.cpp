#include "mtdc/sweep.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "mtdc/analytic.hpp"
#include "mtdc/network.hpp"
#include "mtdc/relay.hpp"
#include "mtdc/simulate.hpp"
#include "mtdc/trace_io.hpp"

namespace mtdc {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}
}  // namespace

std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Simulate: return "simulate";
    case SweepMode::Analytic: return "analytic";
    case SweepMode::Both: return "both";
  }
  return "simulate";
}

std::size_t SweepSpec::grid_size() const {
  std::size_t n = 0;
  for (FaultKind k : kinds) {
    const std::size_t d_count = is_internal(k) ? location_d.size() : 1;
    n += d_count * r_f.size() * clr.size() * snr_db.size() * seeds.size();
  }
  return n;
}

Verdict expected_verdict(FaultKind kind) {
  switch (kind) {
    case FaultKind::None: return Verdict::NoFault;
    case FaultKind::InternalPTP: return Verdict::InternalPTP;
    case FaultKind::InternalP_PTG: return Verdict::InternalP_PTG;
    case FaultKind::InternalN_PTG: return Verdict::InternalN_PTG;
    case FaultKind::ExternalForwardPTG:
    case FaultKind::ExternalForwardPTP: return Verdict::ExternalForward;
    case FaultKind::ExternalBackwardPTG:
    case FaultKind::ExternalBackwardPTP: return Verdict::ExternalBackward;
  }
  return Verdict::NoFault;
}

namespace {

void evaluate_point(const SweepSpec& spec, SweepRow& row) {
  Scenario sc = spec.base;
  sc.system.clr = {row.clr, row.clr, row.clr, row.clr};
  sc.fault.kind = row.kind;
  sc.fault.r_f = row.r_f;
  if (is_internal(row.kind))
    sc.fault.location_d = row.location_d;
  else
    sc.fault.location_d.reset();
  sc.snr_db = row.snr_db;
  sc.seed = row.seed;

  row.expected = expected_verdict(row.kind);

  const bool want_sim = spec.mode != SweepMode::Analytic;
  const bool want_analytic = spec.mode != SweepMode::Simulate &&
                             row.kind != FaultKind::None;

  if (!want_sim) {
    row.trigger_peak = kNaN;
    row.trigger_time = kNaN;
    row.dominant_zero = kNaN;
    row.dominant_line = kNaN;
    row.current_delta = kNaN;
    row.decision_time = kNaN;
  }

  bool sim_pass = true;
  if (want_sim) {
    const Topology topo = make_topology(sc.system);
    const NetworkModel net = build_network(topo, sc.fault, sc.sim);
    const StateSpaceModel model = build_state_space(net);
    const MeasurementSet ms = simulate(model, sc.fault, sc.sim);
    const RelayInputs in = condition_measurements(ms, sc.relay, sc.snr_db, sc.seed);
    const RelayDecision d = classify(in, sc.relay);
    row.trigger_peak = d.evidence.trigger_peak;
    row.trigger_time = d.evidence.trigger_time;
    row.dominant_zero = d.evidence.dominant_zero;
    row.dominant_line = d.evidence.dominant_line;
    row.current_delta = d.evidence.current_delta;
    row.decision_time = d.evidence.decision_time;
    row.verdict = d.verdict;
    sim_pass = row.verdict == row.expected;
  }

  bool analytic_pass = true;
  if (want_analytic) {
    const AnalyticParams ap = analytic_params(sc.system, sc.sim.ptp_alpha);
    SignatureSettings ss;
    ss.e_set = sc.relay.e_set;
    ss.window = sc.relay.polarity_window;
    const double d_frac = is_internal(row.kind) ? row.location_d : 0.5;
    const PolaritySignature sig = predict_signature(row.kind, d_frac, row.r_f, ap, ss);
    const PolaritySignature want = canonical_signature(row.kind);
    row.analytic_sign_zero = sig.sign_zero;
    row.analytic_sign_line = sig.sign_line;
    row.expected_sign_zero = want.sign_zero;
    row.expected_sign_line = want.sign_line;
    analytic_pass = sig.sign_zero == want.sign_zero && sig.sign_line == want.sign_line;
  }

  row.pass = sim_pass && analytic_pass;
}

}  // namespace

SweepReport run_sweep(const SweepSpec& spec) {
  SweepReport report;
  for (FaultKind kind : spec.kinds) {
    const std::vector<double> d_values =
        is_internal(kind) ? spec.location_d : std::vector<double>{kNaN};
    for (double d : d_values)
      for (double r_f : spec.r_f)
        for (double clr : spec.clr)
          for (double snr : spec.snr_db)
            for (std::uint64_t seed : spec.seeds) {
              SweepRow row;
              row.kind = kind;
              row.location_d = d;
              row.r_f = r_f;
              row.clr = clr;
              row.snr_db = snr;
              row.seed = seed;
              report.rows.push_back(row);
            }
  }

  const int workers = std::max(1, spec.workers);
  if (workers == 1 || report.rows.size() <= 1) {
    for (SweepRow& row : report.rows) {
      try {
        evaluate_point(spec, row);
      } catch (const std::exception& e) {
        row.pass = false;
        row.error = e.what();
      }
    }
    return report;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.rows.size()) return;
      try {
        evaluate_point(spec, report.rows[i]);
      } catch (const std::exception& e) {
        report.rows[i].pass = false;
        report.rows[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(workers), report.rows.size());
  pool.reserve(n_threads);
  for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return report;
}

std::string report_csv(const SweepReport& report) {
  std::string out =
      "kind,location_d,r_f_ohm,clr_h,snr_db,seed,trigger_peak_v,trigger_time_s,"
      "dominant_zero_v,dominant_line_v,current_delta_a,decision_time_s,verdict,"
      "expected,analytic_sign_zero,analytic_sign_line,expected_sign_zero,"
      "expected_sign_line,pass,error\n";
  for (const SweepRow& r : report.rows) {
    std::ostringstream os;
    os << to_string(r.kind) << ',' << format_double(r.location_d) << ','
       << format_double(r.r_f) << ',' << format_double(r.clr) << ','
       << format_double(r.snr_db) << ',' << r.seed << ','
       << format_double(r.trigger_peak) << ',' << format_double(r.trigger_time) << ','
       << format_double(r.dominant_zero) << ',' << format_double(r.dominant_line) << ','
       << format_double(r.current_delta) << ',' << format_double(r.decision_time) << ','
       << to_string(r.verdict) << ',' << to_string(r.expected) << ','
       << r.analytic_sign_zero << ',' << r.analytic_sign_line << ','
       << r.expected_sign_zero << ',' << r.expected_sign_line << ','
       << (r.pass ? 1 : 0) << ',' << sanitize(r.error) << '\n';
    out += os.str();
  }
  return out;
}

std::string pivot_csv(const SweepReport& report) {
  // Columns: (r_f, clr) in first-appearance order; rows: (kind, d).
  std::vector<std::pair<double, double>> columns;
  std::vector<std::pair<FaultKind, double>> row_keys;
  const auto same = [](double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
  };
  for (const SweepRow& r : report.rows) {
    bool have_col = false;
    for (const auto& c : columns)
      if (c.first == r.r_f && c.second == r.clr) have_col = true;
    if (!have_col) columns.emplace_back(r.r_f, r.clr);
    bool have_row = false;
    for (const auto& k : row_keys)
      if (k.first == r.kind && same(k.second, r.location_d)) have_row = true;
    if (!have_row) row_keys.emplace_back(r.kind, r.location_d);
  }

  std::string out = "kind,location_d";
  for (const auto& c : columns) {
    out += ",rf_" + format_double(c.first) + "_clr_" + format_double(c.second);
  }
  out += '\n';
  for (const auto& key : row_keys) {
    out += to_string(key.first) + "," + format_double(key.second);
    for (const auto& c : columns) {
      const SweepRow* hit = nullptr;
      for (const SweepRow& r : report.rows) {
        if (r.kind == key.first && same(r.location_d, key.second) && r.r_f == c.first &&
            r.clr == c.second) {
          hit = &r;
          break;
        }
      }
      out += ',';
      out += hit ? format_double(hit->trigger_peak) : "";
    }
    out += '\n';
  }
  return out;
}

}  // namespace mtdc
