#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coexsim/channel.hpp"
#include "coexsim/lte_mac.hpp"
#include "coexsim/topology.hpp"
#include "coexsim/traffic.hpp"
#include "coexsim/wifi_mac.hpp"

namespace coexsim {

using json = nlohmann::ordered_json;

struct PhyConfig {
  double max_spectral_efficiency = 0.0;  // b/s/Hz; 0 disables the cap
};

struct MetricsConfig {
  bool sinr_duration_weighted = false;
};

struct Scenario {
  DeploymentConfig deployment;
  PropagationConfig propagation;
  TrafficConfig traffic;
  LteConfig lte;
  WifiConfig wifi;
  DutyCycleConfig duty;
  PhyConfig phy;
  MetricsConfig metrics;
  double horizon_s = 10.0;
  std::uint64_t seed = 1;
};

// Carries every offending key so a config can be fixed in one pass.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : std::runtime_error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& p) {
    std::ostringstream os;
    os << "invalid scenario:";
    for (const auto& s : p) os << "\n  " << s;
    return os.str();
  }
  std::vector<std::string> problems_;
};

namespace detail {

class Section {
 public:
  Section(const json& j, std::string prefix, std::vector<std::string>& errors)
      : j_(j), prefix_(std::move(prefix)), errors_(errors) {
    if (!j_.is_object()) errors_.push_back(prefix_ + ": expected an object");
  }
  ~Section() {
    if (!j_.is_object()) return;
    for (const auto& [k, v] : j_.items())
      if (!seen_.count(k)) errors_.push_back(key(k) + ": unknown key");
  }

  void number(const char* k, double& out) {
    if (const json* v = find(k)) {
      if (v->is_number()) out = v->get<double>();
      else errors_.push_back(key(k) + ": expected a number");
    }
  }
  void integer(const char* k, int& out) {
    if (const json* v = find(k)) {
      if (v->is_number_integer()) out = v->get<int>();
      else errors_.push_back(key(k) + ": expected an integer");
    }
  }
  void integer(const char* k, std::int64_t& out) {
    if (const json* v = find(k)) {
      if (v->is_number_integer()) out = v->get<std::int64_t>();
      else if (v->is_number() && std::floor(v->get<double>()) == v->get<double>())
        out = static_cast<std::int64_t>(v->get<double>());
      else errors_.push_back(key(k) + ": expected an integer");
    }
  }
  void count(const char* k, std::size_t& out) {
    if (const json* v = find(k)) {
      if (v->is_number_unsigned()) out = v->get<std::size_t>();
      else errors_.push_back(key(k) + ": expected a non-negative integer");
    }
  }
  void boolean(const char* k, bool& out) {
    if (const json* v = find(k)) {
      if (v->is_boolean()) out = v->get<bool>();
      else errors_.push_back(key(k) + ": expected true/false");
    }
  }
  void text(const char* k, std::string& out) {
    if (const json* v = find(k)) {
      if (v->is_string()) out = v->get<std::string>();
      else errors_.push_back(key(k) + ": expected a string");
    }
  }
  void time(const char* k, SimTime& out, double scale_to_ns) {
    double v = static_cast<double>(out.ns()) / scale_to_ns;
    number(k, v);
    out = SimTime::from_ns(std::llround(v * scale_to_ns));
  }
  void times(const char* k, std::vector<SimTime>& out, double scale_to_ns) {
    if (const json* v = find(k)) {
      if (!v->is_array()) {
        errors_.push_back(key(k) + ": expected an array of numbers");
        return;
      }
      out.clear();
      for (const auto& e : *v) {
        if (!e.is_number()) {
          errors_.push_back(key(k) + ": expected an array of numbers");
          return;
        }
        out.push_back(SimTime::from_ns(std::llround(e.get<double>() * scale_to_ns)));
      }
    }
  }
  const json* sub(const char* k) { return find(k); }

  std::string key(const std::string& k) const { return prefix_.empty() ? k : prefix_ + "." + k; }

 private:
  const json* find(const char* k) {
    seen_.insert(k);
    if (!j_.is_object()) return nullptr;
    auto it = j_.find(k);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& j_;
  std::string prefix_;
  std::vector<std::string>& errors_;
  std::set<std::string> seen_;
};

inline void check(std::vector<std::string>& errors, bool ok, const std::string& msg) {
  if (!ok) errors.push_back(msg);
}

}  // namespace detail

// Value checks only; structural problems are reported by scenario_from_json.
inline std::vector<std::string> validation_problems(const Scenario& s) {
  using detail::check;
  std::vector<std::string> e;
  const auto& d = s.deployment;
  check(e, d.cell_radius_m > 0.0 && std::isfinite(d.cell_radius_m), "deployment.cell_radius_m: must be > 0");
  check(e, d.n_sta >= 1, "deployment.n_sta: must be >= 1");
  check(e, d.n_ue >= 1, "deployment.n_ue: must be >= 1");
  check(e, d.min_dist_m >= 0.0 && d.min_dist_m < d.cell_radius_m,
        "deployment.min_dist_m: must satisfy 0 <= min_dist < cell_radius");

  const auto& p = s.propagation;
  check(e, p.bandwidth > 0.0, "propagation.bandwidth_hz: must be > 0");
  check(e, p.shadowing_sigma >= 0.0, "propagation.shadowing_sigma_db: must be >= 0");

  const auto& t = s.traffic;
  check(e, t.lambda > 0.0, "traffic.lambda: must be > 0");
  check(e, t.payload_bits > 0, "traffic.payload_bits: must be > 0");

  const auto& l = s.lte;
  check(e, l.tti > SimTime{}, "lte.tti_ms: must be > 0");
  check(e, l.frame == l.tti * 10, "lte.frame_ms: must equal 10 x lte.tti_ms");
  check(e, l.p0_dbm < l.ue_max_power_dbm, "lte.p0_dbm: must be below lte.ue_max_power_dbm");
  check(e, l.tpc_alpha >= 0.0, "lte.tpc_alpha: must be >= 0");
  check(e, l.n_rb >= 1, "lte.n_rb: must be >= 1");
  bool pattern_ok = !l.tdd_pattern.empty();
  for (char c : l.tdd_pattern) pattern_ok = pattern_ok && (c == 'D' || c == 'U');
  check(e, pattern_ok, "lte.tdd_pattern: must be a non-empty string of 'D'/'U'");

  const auto& w = s.wifi;
  check(e, w.cca_cs_dbm < w.cca_ed_dbm, "wifi.cca_cs_dbm: must be below wifi.cca_ed_dbm");
  check(e, w.cw_min >= 0 && w.cw_min <= w.cw_max, "wifi.cw_max: contention window range must be non-empty");
  check(e, w.slot > SimTime{}, "wifi.slot_us: must be > 0");
  check(e, w.ofdm_symbol > SimTime{}, "wifi.ofdm_symbol_us: must be > 0");
  check(e, w.max_airtime >= w.ofdm_symbol, "wifi.max_airtime_ms: must be at least one symbol");
  check(e, w.beacon_interval > SimTime{}, "wifi.beacon_interval_ms: must be > 0");
  check(e, w.beacon_window >= 1, "wifi.beacon_window: must be >= 1");
  check(e, w.beacon_airtime >= w.ofdm_symbol, "wifi.beacon_airtime_us: must be at least one symbol");

  const auto& dc = s.duty;
  check(e, dc.period > SimTime{}, "duty.period_ms: must be > 0");
  check(e, dc.on_fraction > 0.0 && dc.on_fraction <= 1.0, "duty.on_fraction: must be in (0, 1]");
  bool whole_ttis = true;
  for (auto off : dc.phase_offsets) whole_ttis = whole_ttis && l.tti > SimTime{} && off % l.tti == SimTime{};
  check(e, whole_ttis, "duty.phase_offsets_ms: offsets must be whole TTIs");
  check(e, s.phy.max_spectral_efficiency >= 0.0, "phy.max_spectral_efficiency: must be >= 0 (0 = off)");
  check(e, s.horizon_s >= 0.0 && std::isfinite(s.horizon_s), "horizon_s: must be >= 0");
  return e;
}

inline void validate(const Scenario& s) {
  auto e = validation_problems(s);
  if (!e.empty()) throw ValidationError(std::move(e));
}

inline Scenario scenario_from_json(const json& j) {
  Scenario s;
  std::vector<std::string> errors;
  {
    detail::Section root(j, "", errors);
    if (const json* v = root.sub("deployment")) {
      detail::Section d(*v, "deployment", errors);
      d.number("cell_radius_m", s.deployment.cell_radius_m);
      d.integer("n_sta", s.deployment.n_sta);
      d.integer("n_ue", s.deployment.n_ue);
      d.number("min_dist_m", s.deployment.min_dist_m);
    }
    if (const json* v = root.sub("propagation")) {
      detail::Section p(*v, "propagation", errors);
      p.number("pl_exponent_coeff", s.propagation.pl_exponent_coeff);
      p.number("pl_intercept_db", s.propagation.pl_intercept);
      p.number("freq_term_db", s.propagation.freq_term);
      p.number("shadowing_sigma_db", s.propagation.shadowing_sigma);
      p.number("noise_figure_db", s.propagation.noise_figure);
      p.number("bandwidth_hz", s.propagation.bandwidth);
    }
    if (const json* v = root.sub("traffic")) {
      detail::Section t(*v, "traffic", errors);
      t.number("lambda", s.traffic.lambda);
      t.integer("payload_bits", s.traffic.payload_bits);
      t.count("max_queue", s.traffic.max_queue);
      t.boolean("uplink", s.traffic.uplink);
      t.boolean("downlink", s.traffic.downlink);
    }
    if (const json* v = root.sub("lte")) {
      detail::Section l(*v, "lte", errors);
      l.time("tti_ms", s.lte.tti, 1e6);
      l.time("frame_ms", s.lte.frame, 1e6);
      l.number("dl_power_dbm", s.lte.dl_power_dbm);
      l.number("ue_max_power_dbm", s.lte.ue_max_power_dbm);
      l.number("p0_dbm", s.lte.p0_dbm);
      l.number("tpc_alpha", s.lte.tpc_alpha);
      l.boolean("tpc_per_rb", s.lte.tpc_per_rb);
      l.integer("n_rb", s.lte.n_rb);
      l.text("tdd_pattern", s.lte.tdd_pattern);
    }
    if (const json* v = root.sub("wifi")) {
      detail::Section w(*v, "wifi", errors);
      w.number("tx_power_dbm", s.wifi.tx_power_dbm);
      w.number("cca_cs_dbm", s.wifi.cca_cs_dbm);
      w.number("cca_ed_dbm", s.wifi.cca_ed_dbm);
      w.time("slot_us", s.wifi.slot, 1e3);
      w.time("sifs_us", s.wifi.sifs, 1e3);
      w.time("difs_us", s.wifi.difs, 1e3);
      w.integer("cw_min", s.wifi.cw_min);
      w.integer("cw_max", s.wifi.cw_max);
      w.integer("service_bits", s.wifi.service_bits);
      w.integer("tail_bits", s.wifi.tail_bits);
      w.time("beacon_interval_ms", s.wifi.beacon_interval, 1e6);
      w.number("beacon_det_snr_db", s.wifi.beacon_det_snr_db);
      w.number("beacon_err_ratio", s.wifi.beacon_err_ratio);
      w.integer("beacon_window", s.wifi.beacon_window);
      w.time("beacon_airtime_us", s.wifi.beacon_airtime, 1e3);
      w.time("ofdm_symbol_us", s.wifi.ofdm_symbol, 1e3);
      w.time("max_airtime_ms", s.wifi.max_airtime, 1e6);
      w.time("ack_wait_us", s.wifi.ack_wait, 1e3);
      w.boolean("quiet_during_lte_on", s.wifi.quiet_during_lte_on);
    }
    if (const json* v = root.sub("duty")) {
      detail::Section d(*v, "duty", errors);
      d.time("period_ms", s.duty.period, 1e6);
      d.number("on_fraction", s.duty.on_fraction);
      d.times("phase_offsets_ms", s.duty.phase_offsets, 1e6);
    }
    if (const json* v = root.sub("phy")) {
      detail::Section p(*v, "phy", errors);
      p.number("max_spectral_efficiency", s.phy.max_spectral_efficiency);
    }
    if (const json* v = root.sub("metrics")) {
      detail::Section m(*v, "metrics", errors);
      m.boolean("sinr_duration_weighted", s.metrics.sinr_duration_weighted);
    }
    root.number("horizon_s", s.horizon_s);
    std::int64_t seed = static_cast<std::int64_t>(s.seed);
    root.integer("seed", seed);
    if (seed < 0) errors.push_back("seed: must be >= 0");
    s.seed = static_cast<std::uint64_t>(seed);
  }
  if (errors.empty()) errors = validation_problems(s);
  if (!errors.empty()) throw ValidationError(std::move(errors));
  return s;
}

inline json scenario_to_json(const Scenario& s) {
  auto ms = [](SimTime t) { return static_cast<double>(t.ns()) / 1e6; };
  auto us = [](SimTime t) { return static_cast<double>(t.ns()) / 1e3; };
  json phases = json::array();
  for (auto t : s.duty.phase_offsets) phases.push_back(ms(t));
  return json{
      {"deployment",
       {{"cell_radius_m", s.deployment.cell_radius_m},
        {"n_sta", s.deployment.n_sta},
        {"n_ue", s.deployment.n_ue},
        {"min_dist_m", s.deployment.min_dist_m}}},
      {"propagation",
       {{"pl_exponent_coeff", s.propagation.pl_exponent_coeff},
        {"pl_intercept_db", s.propagation.pl_intercept},
        {"freq_term_db", s.propagation.freq_term},
        {"shadowing_sigma_db", s.propagation.shadowing_sigma},
        {"noise_figure_db", s.propagation.noise_figure},
        {"bandwidth_hz", s.propagation.bandwidth}}},
      {"traffic",
       {{"lambda", s.traffic.lambda},
        {"payload_bits", s.traffic.payload_bits},
        {"max_queue", s.traffic.max_queue},
        {"uplink", s.traffic.uplink},
        {"downlink", s.traffic.downlink}}},
      {"lte",
       {{"tti_ms", ms(s.lte.tti)},
        {"frame_ms", ms(s.lte.frame)},
        {"dl_power_dbm", s.lte.dl_power_dbm},
        {"ue_max_power_dbm", s.lte.ue_max_power_dbm},
        {"p0_dbm", s.lte.p0_dbm},
        {"tpc_alpha", s.lte.tpc_alpha},
        {"tpc_per_rb", s.lte.tpc_per_rb},
        {"n_rb", s.lte.n_rb},
        {"tdd_pattern", s.lte.tdd_pattern}}},
      {"wifi",
       {{"tx_power_dbm", s.wifi.tx_power_dbm},
        {"cca_cs_dbm", s.wifi.cca_cs_dbm},
        {"cca_ed_dbm", s.wifi.cca_ed_dbm},
        {"slot_us", us(s.wifi.slot)},
        {"sifs_us", us(s.wifi.sifs)},
        {"difs_us", us(s.wifi.difs)},
        {"cw_min", s.wifi.cw_min},
        {"cw_max", s.wifi.cw_max},
        {"service_bits", s.wifi.service_bits},
        {"tail_bits", s.wifi.tail_bits},
        {"beacon_interval_ms", ms(s.wifi.beacon_interval)},
        {"beacon_det_snr_db", s.wifi.beacon_det_snr_db},
        {"beacon_err_ratio", s.wifi.beacon_err_ratio},
        {"beacon_window", s.wifi.beacon_window},
        {"beacon_airtime_us", us(s.wifi.beacon_airtime)},
        {"ofdm_symbol_us", us(s.wifi.ofdm_symbol)},
        {"max_airtime_ms", ms(s.wifi.max_airtime)},
        {"ack_wait_us", us(s.wifi.ack_wait)},
        {"quiet_during_lte_on", s.wifi.quiet_during_lte_on}}},
      {"duty",
       {{"period_ms", ms(s.duty.period)}, {"on_fraction", s.duty.on_fraction}, {"phase_offsets_ms", phases}}},
      {"phy", {{"max_spectral_efficiency", s.phy.max_spectral_efficiency}}},
      {"metrics", {{"sinr_duration_weighted", s.metrics.sinr_duration_weighted}}},
      {"horizon_s", s.horizon_s},
      {"seed", s.seed},
  };
}

}  // namespace coexsim
