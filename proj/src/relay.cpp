#include "mtdc/relay.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mtdc/dsp.hpp"
#include "mtdc/modal.hpp"
#include "mtdc/trace_io.hpp"

namespace mtdc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoFault: return "no_fault";
    case Verdict::InternalPTP: return "internal_ptp";
    case Verdict::InternalP_PTG: return "internal_p_ptg";
    case Verdict::InternalN_PTG: return "internal_n_ptg";
    case Verdict::ExternalForward: return "external_forward";
    case Verdict::ExternalBackward: return "external_backward";
  }
  return "no_fault";
}

namespace {

Trace condition_channel(const Trace& tr, const RelaySettings& rs, std::size_t stride,
                        double snr_db, std::uint64_t seed, double t_fault) {
  Trace out = decimate(tr, stride);
  if (std::isfinite(snr_db)) {
    const std::size_t first = out.index_at_or_after(t_fault);
    out = inject_wgn(out, snr_db, seed, first, out.size());
  }
  if (rs.filter_enabled) out = rolling_mean(out, rs.rolling_window);
  return out;
}

}  // namespace

RelayInputs condition_measurements(const MeasurementSet& ms, const RelaySettings& rs,
                                   double snr_db, std::uint64_t seed) {
  if (ms.v_clr_p.empty() || ms.v_clr_n.empty() || ms.i_p.empty() || ms.i_n.empty())
    throw std::invalid_argument("condition_measurements: empty measurement channel");
  if (rs.sample_rate <= 0.0)
    throw std::invalid_argument("condition_measurements: sample rate must be > 0");
  if (ms.dt <= 0.0)
    throw std::invalid_argument("condition_measurements: measurement dt must be > 0");

  auto stride = static_cast<std::size_t>(std::llround(1.0 / (rs.sample_rate * ms.dt)));
  if (stride == 0) stride = 1;  // relay rate above the sim rate: keep all samples

  RelayInputs in;
  in.v_clr_p = condition_channel(ms.v_clr_p, rs, stride, snr_db, channel_seed(seed, 0),
                                 ms.t_fault);
  in.v_clr_n = condition_channel(ms.v_clr_n, rs, stride, snr_db, channel_seed(seed, 1),
                                 ms.t_fault);
  in.i_p = condition_channel(ms.i_p, rs, stride, snr_db, channel_seed(seed, 2), ms.t_fault);
  in.i_n = condition_channel(ms.i_n, rs, stride, snr_db, channel_seed(seed, 3), ms.t_fault);
  return in;
}

RelayDecision classify(const RelayInputs& in, const RelaySettings& rs) {
  if (in.v_clr_p.empty() || in.v_clr_n.empty() || in.i_p.empty() || in.i_n.empty())
    throw std::invalid_argument("classify: empty input channel");

  RelayDecision d;
  RelayEvidence& ev = d.evidence;

  // Step 1: trigger on the windowed delta of the reactor pair difference.
  const Trace pair = subtract(in.v_clr_p, in.v_clr_n, "v_clr_pair");
  const Trace delta = windowed_delta(pair, rs.delta_window);

  std::size_t trigger_idx = delta.size();
  for (std::size_t i = 0; i < delta.size(); ++i) {
    ev.trigger_peak = std::max(ev.trigger_peak, delta.samples[i]);
    if (trigger_idx == delta.size() && delta.samples[i] >= rs.u_set) trigger_idx = i;
  }
  if (trigger_idx == delta.size()) {
    d.verdict = Verdict::NoFault;
    ev.decision_time = delta.back_time();
    return d;
  }
  ev.trigger_time = delta.time_at(trigger_idx);

  // Evidence horizon after the trigger instant.
  const std::size_t last = delta.size() - 1;
  const std::size_t horizon =
      delta.index_at_or_after(ev.trigger_time + rs.polarity_window);
  const std::size_t w_from = trigger_idx;
  const std::size_t w_to = horizon > last ? last : horizon;

  // Step 2: family split on the dominant zero-mode magnitude.
  auto [v_zero, v_line] = [&] {
    auto [line, zero] = phase_to_modal(in.v_clr_p, in.v_clr_n);
    return std::make_pair(std::move(zero), std::move(line));
  }();
  ev.dominant_zero = signed_extremum(v_zero, w_from, w_to);
  ev.dominant_line = signed_extremum(v_line, w_from, w_to);
  const bool pole_to_pole = std::abs(ev.dominant_zero) <= rs.e_set;

  // Step 3: backward rejection on mode polarities.
  if (pole_to_pole) {
    if (ev.dominant_line < 0.0) {
      d.verdict = Verdict::ExternalBackward;
      ev.decision_time = delta.time_at(w_to);
      ev.latency_ms = (ev.decision_time - ev.trigger_time) * 1e3;
      return d;
    }
  } else if (ev.dominant_zero < 0.0 && ev.dominant_line < 0.0) {
    d.verdict = Verdict::ExternalBackward;
    ev.decision_time = delta.time_at(w_to);
    ev.latency_ms = (ev.decision_time - ev.trigger_time) * 1e3;
    return d;
  }

  // Step 4: direction on the faulted-pole current change.
  const bool negative_pole = !pole_to_pole && ev.dominant_zero < 0.0;
  const Trace& i_pole = negative_pole ? in.i_n : in.i_p;
  const Trace di = windowed_delta(i_pole, rs.current_delta_window);
  ev.current_delta = max_abs(di, w_from, w_to);
  if (ev.current_delta < rs.i_set) {
    d.verdict = Verdict::ExternalForward;
    ev.decision_time = delta.time_at(w_to);
    ev.latency_ms = (ev.decision_time - ev.trigger_time) * 1e3;
    return d;
  }

  // Step 5: internal subtype.
  if (pole_to_pole) {
    d.verdict = Verdict::InternalPTP;
  } else if (ev.dominant_zero > 0.0) {
    d.verdict = Verdict::InternalP_PTG;
  } else if (ev.dominant_zero < 0.0) {
    d.verdict = Verdict::InternalN_PTG;
  } else {
    // Exactly zero is only reachable with e_set = 0; resolve deterministically.
    d.verdict = Verdict::InternalP_PTG;
    ev.tie_break_warning = true;
  }
  ev.decision_time = delta.time_at(w_to);
  ev.latency_ms = (ev.decision_time - ev.trigger_time) * 1e3;
  return d;
}

std::string decision_csv_header() {
  return "scenario,verdict,trigger_peak_v,trigger_time_s,dominant_zero_v,"
         "dominant_line_v,current_delta_a,decision_time_s,latency_ms,tie_break";
}

std::string decision_csv_row(const std::string& scenario_id, const RelayDecision& d) {
  const RelayEvidence& ev = d.evidence;
  std::ostringstream os;
  os << scenario_id << ',' << to_string(d.verdict) << ',' << format_double(ev.trigger_peak)
     << ',' << format_double(ev.trigger_time) << ',' << format_double(ev.dominant_zero)
     << ',' << format_double(ev.dominant_line) << ',' << format_double(ev.current_delta)
     << ',' << format_double(ev.decision_time) << ',' << format_double(ev.latency_ms)
     << ',' << (ev.tie_break_warning ? 1 : 0);
  return os.str();
}

std::string decision_text(const std::string& scenario_id, const RelayDecision& d) {
  const RelayEvidence& ev = d.evidence;
  std::ostringstream os;
  os << scenario_id << ": verdict=" << to_string(d.verdict);
  if (std::isnan(ev.trigger_time)) {
    os << " (no trigger, peak |dV|=" << format_double(ev.trigger_peak * 1e-3) << " kV)";
    return os.str();
  }
  os << " trigger=" << format_double(ev.trigger_time * 1e3)
     << " ms, peak |dV|=" << format_double(ev.trigger_peak * 1e-3)
     << " kV, V_zero=" << format_double(ev.dominant_zero * 1e-3)
     << " kV, V_line=" << format_double(ev.dominant_line * 1e-3)
     << " kV, dI=" << format_double(ev.current_delta * 1e-3)
     << " kA, decided at " << format_double(ev.decision_time * 1e3) << " ms";
  if (ev.tie_break_warning) os << " [tie-break]";
  return os.str();
}

}  // namespace mtdc
