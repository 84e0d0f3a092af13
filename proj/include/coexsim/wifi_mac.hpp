#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>

#include "coexsim/channel.hpp"
#include "coexsim/phy_link.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/time.hpp"
#include "coexsim/traffic.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

// 802.11 best-effort EDCA parameters. AIFS equals DIFS for this category and
// the contention window is fixed (no doubling).
struct WifiConfig {
  double tx_power_dbm = 23.0;
  double cca_cs_dbm = -82.0;
  double cca_ed_dbm = -65.0;
  SimTime slot = SimTime::from_us(9);
  SimTime sifs = SimTime::from_us(16);
  SimTime difs = SimTime::from_us(34);
  int cw_min = 0;
  int cw_max = 31;
  int service_bits = 16;
  int tail_bits = 12;
  SimTime beacon_interval = SimTime::from_ms(100);
  double beacon_det_snr_db = 10.0;
  double beacon_err_ratio = 0.15;
  int beacon_window = 20;
  SimTime beacon_airtime = SimTime::from_us(200);
  SimTime ofdm_symbol = kOfdmSymbol;
  SimTime max_airtime = SimTime::from_ms(4);
  SimTime ack_wait = SimTime::from_us(44);
  // The integrated AP announces LTE on windows as quiet periods: no WiFi
  // frame starts inside one or runs into the next.
  bool quiet_during_lte_on = true;

  int difs_slots() const {
    return static_cast<int>((difs.ns() + slot.ns() - 1) / slot.ns());
  }
};

enum class CcaState { Idle, Busy };

// Carrier sense on decodable WiFi energy, energy detection on everything.
// Reaching a threshold exactly counts as Busy.
inline CcaState cca(double rx_wifi_power_dbm, double rx_total_power_dbm, const WifiConfig& cfg) {
  return (rx_wifi_power_dbm >= cfg.cca_cs_dbm || rx_total_power_dbm >= cfg.cca_ed_dbm) ? CcaState::Busy
                                                                                     : CcaState::Idle;
}

inline int draw_backoff(Rng& rng, const WifiConfig& cfg) {
  std::uniform_int_distribution<int> cw(cfg.cw_min, cfg.cw_max);
  return cw(rng);
}

inline std::int64_t ppdu_bits(std::int64_t payload, const WifiConfig& cfg) {
  return payload + cfg.service_bits + cfg.tail_bits;
}

// DIFS plus slotted backoff countdown, shared by stations and the AP's beacon
// contention.
struct Contention {
  int backoff_slots = 0;
  int idle_run = 0;  // consecutive idle slots observed

  // One slot evaluation. Returns true when the frame may go on air now.
  bool step(CcaState medium, bool has_frame, const WifiConfig& cfg) {
    if (medium == CcaState::Busy) {
      idle_run = 0;
      return false;
    }
    if (idle_run < cfg.difs_slots()) {
      ++idle_run;
      return false;
    }
    if (backoff_slots > 0) {
      --backoff_slots;
      return false;
    }
    return has_frame;
  }
};

// Sliding record of the last N beacon outcomes.
struct BeaconWindow {
  std::deque<bool> outcomes;  // true = detected

  void push(bool detected, int capacity) {
    outcomes.push_back(detected);
    while (static_cast<int>(outcomes.size()) > capacity) outcomes.pop_front();
  }
  int misses() const { return static_cast<int>(std::count(outcomes.begin(), outcomes.end(), false)); }
};

struct StaState {
  int node_id = 0;
  Contention contention;
  std::deque<Packet> queue;
  bool associated = false;
  bool ever_associated = false;
  BeaconWindow beacons;
  bool transmitting = false;
  SimTime ready_at;  // earliest time to contend again (after the ACK wait)
  std::int64_t backoff_drawn = 0;
  std::int64_t backoff_consumed = 0;
};

// Uplink link parameters a station needs to size its PPDU.
struct WifiLink {
  int sta_id = 0;
  int ap_id = 0;
  double est_rate_bps = 0.0;  // interference-free Shannon rate
};

struct WifiTxPlan {
  Transmission tx;
  std::int64_t planned_payload_bits = 0;
};

// Airtime for `bits` at `rate`, rounded up to whole symbols and capped.
inline SimTime wifi_airtime(double bits, double rate_bps, const WifiConfig& cfg) {
  const double symbols = std::ceil(bits / rate_bps / cfg.ofdm_symbol.seconds() - 1e-9);
  const SimTime t = cfg.ofdm_symbol * static_cast<std::int64_t>(std::max(1.0, symbols));
  return std::min(t, cfg.max_airtime);
}

// Largest payload that fits in `window` at the estimated rate; 0 if none does.
inline std::int64_t payload_fitting(SimTime window, double rate_bps, const WifiConfig& cfg) {
  const SimTime whole = floor_to_grid(std::min(window, cfg.max_airtime), SimTime{}, cfg.ofdm_symbol);
  const double bits = std::floor(rate_bps * whole.seconds()) - (cfg.service_bits + cfg.tail_bits);
  return bits >= 1.0 ? static_cast<std::int64_t>(bits) : 0;
}

// Slot-boundary decision for one station. Busy freezes the countdown; idle
// slots first complete DIFS, then decrement the backoff; at zero backoff an
// associated station with queued data sends its head packet (up to the
// airtime cap, or up to `window` when given) and redraws its backoff.
inline std::optional<WifiTxPlan> wifi_step(StaState& sta, SimTime t, CcaState medium, Rng& rng,
                                           const WifiConfig& cfg, const WifiLink& link,
                                           std::optional<SimTime> window = std::nullopt) {
  const bool has_frame = sta.associated && !sta.queue.empty();
  const int before = sta.contention.backoff_slots;
  const bool fire = sta.contention.step(medium, has_frame, cfg);
  sta.backoff_consumed += before - sta.contention.backoff_slots;
  if (!fire) return std::nullopt;

  const Packet& head = sta.queue.front();
  const double overhead = static_cast<double>(cfg.service_bits + cfg.tail_bits);
  const double cap_bits = window ? static_cast<double>(payload_fitting(*window, link.est_rate_bps, cfg))
                                 : std::floor(link.est_rate_bps * cfg.max_airtime.seconds()) - overhead;
  const double payload = std::min(std::ceil(head.remaining_bits()), std::max(1.0, cap_bits));

  WifiTxPlan plan;
  plan.planned_payload_bits = static_cast<std::int64_t>(payload);
  plan.tx.tx_id = link.sta_id;
  plan.tx.rx_id = link.ap_id;
  plan.tx.tech = Tech::Wifi;
  plan.tx.tx_power_dbm = cfg.tx_power_dbm;
  plan.tx.start = t;
  SimTime airtime = wifi_airtime(static_cast<double>(ppdu_bits(plan.planned_payload_bits, cfg)),
                                 link.est_rate_bps, cfg);
  if (window) airtime = std::min(airtime, floor_to_grid(*window, SimTime{}, cfg.ofdm_symbol));
  plan.tx.end = t + airtime;

  sta.contention.backoff_slots = draw_backoff(rng, cfg);
  sta.backoff_drawn += sta.contention.backoff_slots;
  sta.contention.idle_run = 0;
  return plan;
}

// Beacon bookkeeping. Detection needs SINR >= the detection threshold. A
// station associates on its first detected beacon and stays associated while
// misses over the last N beacons are at most the error-ratio threshold.
inline void process_beacon(StaState& sta, double beacon_sinr, const WifiConfig& cfg) {
  const bool detected = linear_to_db(beacon_sinr) >= cfg.beacon_det_snr_db;
  if (!sta.ever_associated) {
    if (!detected) return;
    sta.ever_associated = true;
    sta.beacons.outcomes.clear();
  }
  sta.beacons.push(detected, cfg.beacon_window);
  const double missed = static_cast<double>(sta.beacons.misses()) / cfg.beacon_window;
  sta.associated = missed <= cfg.beacon_err_ratio + 1e-12;
}

}  // namespace coexsim
