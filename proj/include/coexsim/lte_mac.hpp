#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coexsim/channel.hpp"
#include "coexsim/time.hpp"
#include "coexsim/traffic.hpp"

namespace coexsim {

struct DutyCycleConfig {
  SimTime period = SimTime::from_ms(50);
  double on_fraction = 0.60;
  // Per-cell start offsets of the on window; missing entries mean 0.
  std::vector<SimTime> phase_offsets;

  SimTime on_length() const {
    return SimTime::from_ns(std::llround(on_fraction * static_cast<double>(period.ns())));
  }
  SimTime phase(int cell) const {
    return cell >= 0 && static_cast<std::size_t>(cell) < phase_offsets.size()
               ? phase_offsets[static_cast<std::size_t>(cell)]
               : SimTime{};
  }
};

inline bool is_lte_on(SimTime t, const DutyCycleConfig& dc) { return t % dc.period < dc.on_length(); }

inline bool is_lte_on(SimTime t, const DutyCycleConfig& dc, int cell) {
  return is_lte_on(t - dc.phase(cell), dc);
}

// Start of the first on window at or after t; nullopt when LTE never transmits.
inline std::optional<SimTime> next_on_start(SimTime t, const DutyCycleConfig& dc, int cell) {
  if (dc.on_length() <= SimTime{}) return std::nullopt;
  const SimTime start = floor_to_grid(t, dc.phase(cell), dc.period);
  return start == t ? t : start + dc.period;
}

struct LteConfig {
  SimTime tti = SimTime::from_ms(1);
  SimTime frame = SimTime::from_ms(10);
  double dl_power_dbm = 20.0;
  double ue_max_power_dbm = 23.0;
  double p0_dbm = -106.0;
  double tpc_alpha = 1.0;
  double bandwidth = 20e6;
  int n_rb = 100;
  // Scale the UE target power with the number of allocated resource blocks.
  bool tpc_per_rb = true;
  // One letter per subframe: D = downlink, U = uplink.
  std::string tdd_pattern = "DUDUDUDUDU";
};

// Open-loop PL-based power control: min(Pmax, P0 + 10 log10(M) + alpha * PL).
inline double ul_tx_power(double pl_db, const LteConfig& cfg, double n_rb = 1.0) {
  const double rb_term = n_rb > 1.0 ? 10.0 * std::log10(n_rb) : 0.0;
  return std::min(cfg.ue_max_power_dbm, cfg.p0_dbm + rb_term + cfg.tpc_alpha * pl_db);
}

// LTE state for one cell: per-UE queues and the round-robin cursor.
struct LteCellState {
  int cell_id = 0;
  int bs_id = 0;
  std::vector<int> ue_ids;
  std::vector<double> ue_path_loss_db;  // UE <-> BS, shadowing included
  std::vector<std::deque<Packet>> ul_queue;
  std::vector<std::deque<Packet>> dl_queue;
  std::size_t rr_cursor = 0;

  LteCellState() = default;
  LteCellState(int cell, int bs, std::vector<int> ues, std::vector<double> pl_db)
      : cell_id(cell),
        bs_id(bs),
        ue_ids(std::move(ues)),
        ue_path_loss_db(std::move(pl_db)),
        ul_queue(ue_ids.size()),
        dl_queue(ue_ids.size()) {}

  std::size_t num_ues() const { return ue_ids.size(); }
};

// Next UE (index into ue_ids) with downlink data, starting at the cursor.
inline std::optional<std::size_t> schedule_dl(LteCellState& cell) {
  const std::size_t n = cell.num_ues();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (cell.rr_cursor + k) % n;
    if (!cell.dl_queue[i].empty()) {
      cell.rr_cursor = (i + 1) % n;
      return i;
    }
  }
  return std::nullopt;
}

struct UlGrant {
  std::size_t ue_index = 0;
  double band_offset = 0.0;
  double band_fraction = 0.0;
};

// Equal split of the carrier among UEs with uplink backlog, contiguous and in
// UE order.
inline std::vector<UlGrant> grant_ul(const LteCellState& cell) {
  std::vector<std::size_t> backlogged;
  for (std::size_t i = 0; i < cell.num_ues(); ++i)
    if (!cell.ul_queue[i].empty()) backlogged.push_back(i);
  std::vector<UlGrant> grants;
  const double k = static_cast<double>(backlogged.size());
  for (std::size_t j = 0; j < backlogged.size(); ++j)
    grants.push_back({backlogged[j], static_cast<double>(j) / k, 1.0 / k});
  return grants;
}

enum class LteLink { Downlink, Uplink };

inline LteLink subframe_direction(SimTime t_rel, const LteConfig& cfg) {
  const auto n = static_cast<std::int64_t>(cfg.tdd_pattern.size());
  const std::int64_t sf = (t_rel / cfg.tti) % n;
  return cfg.tdd_pattern[static_cast<std::size_t>(sf)] == 'U' ? LteLink::Uplink : LteLink::Downlink;
}

struct LteEmission {
  Transmission tx;
  LteLink link = LteLink::Downlink;
  std::size_t ue_index = 0;
};

// One TTI of a duty-cycled cell starting at t. Emits nothing while the cell is
// in its off window; otherwise a full-band DL burst to the scheduled UE or the
// uplink grants, depending on the subframe. LTE never senses the medium.
inline std::vector<LteEmission> lte_step(LteCellState& cell, SimTime t, const DutyCycleConfig& dc,
                                         const LteConfig& cfg) {
  std::vector<LteEmission> out;
  const SimTime rel = t - dc.phase(cell.cell_id);
  if (!is_lte_on(rel, dc)) return out;

  const SimTime end = t + cfg.tti;
  if (subframe_direction(rel, cfg) == LteLink::Downlink) {
    if (auto ue = schedule_dl(cell)) {
      Transmission tx;
      tx.tx_id = cell.bs_id;
      tx.rx_id = cell.ue_ids[*ue];
      tx.tech = Tech::Lte;
      tx.tx_power_dbm = cfg.dl_power_dbm;
      tx.start = t;
      tx.end = end;
      out.push_back({tx, LteLink::Downlink, *ue});
    }
  } else {
    for (const auto& g : grant_ul(cell)) {
      const double n_rb = cfg.tpc_per_rb ? g.band_fraction * cfg.n_rb : 1.0;
      Transmission tx;
      tx.tx_id = cell.ue_ids[g.ue_index];
      tx.rx_id = cell.bs_id;
      tx.tech = Tech::Lte;
      tx.tx_power_dbm = ul_tx_power(cell.ue_path_loss_db[g.ue_index], cfg, n_rb);
      tx.band_offset = g.band_offset;
      tx.band_fraction = g.band_fraction;
      tx.start = t;
      tx.end = end;
      out.push_back({tx, LteLink::Uplink, g.ue_index});
    }
  }
  return out;
}

}  // namespace coexsim
