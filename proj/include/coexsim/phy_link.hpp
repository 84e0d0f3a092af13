#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "coexsim/channel.hpp"
#include "coexsim/time.hpp"

namespace coexsim {

// Duration of one WiFi OFDM symbol; link bits accrue on this grid.
inline const SimTime kOfdmSymbol = SimTime::from_ns(4'000);

struct LinkSample {
  SimTime t;
  SimTime duration;
  double sinr = 0.0;  // linear
  double band_fraction = 1.0;
};

// Shannon-bound bits over a set of constant-SINR samples:
//   sum_s B * f_s * T_s * log2(1 + SINR_s)
// An optional spectral-efficiency ceiling (b/s/Hz) caps each sample.
inline double shannon_bits(std::span<const LinkSample> samples, double bandwidth,
                           double max_spectral_efficiency = std::numeric_limits<double>::infinity()) {
  double bits = 0.0;
  for (const auto& s : samples) {
    if (!(s.sinr >= 0.0)) throw std::invalid_argument("shannon_bits: negative or NaN SINR");
    const double se = std::min(std::log2(1.0 + s.sinr), max_spectral_efficiency);
    bits += bandwidth * s.band_fraction * s.duration.seconds() * se;
  }
  return bits;
}

struct DeliveryRecord {
  std::uint64_t packet_id = 0;
  int src = 0;
  std::int64_t bits = 0;
  SimTime t_tx;
  SimTime t_wait;
};

// Per-packet link capacity bits / (T_tx + T_wait), in bit/s.
inline double capacity(const DeliveryRecord& rec) {
  const SimTime total = rec.t_tx + rec.t_wait;
  if (total <= SimTime{}) throw std::invalid_argument("capacity: t_tx + t_wait must be > 0");
  return static_cast<double>(rec.bits) / total.seconds();
}

// Splits tx's interval wherever the concurrent set changes, evaluates SINR on
// each piece and snaps piece edges down to tx's symbol grid. A symbol that
// straddles a change point takes the later piece's SINR; a trailing partial
// symbol carries no bits.
inline std::vector<LinkSample> link_evaluate(const Transmission& tx, std::span<const Transmission> concurrent,
                                             const GainMatrix& gm, const PropagationConfig& cfg,
                                             SimTime symbol = kOfdmSymbol) {
  std::vector<SimTime> cuts{tx.start, tx.end};
  for (const auto& c : concurrent) {
    if (c.start > tx.start && c.start < tx.end) cuts.push_back(c.start);
    if (c.end > tx.start && c.end < tx.end) cuts.push_back(c.end);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<LinkSample> out;
  std::vector<Transmission> live;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const SimTime a = cuts[i];
    const SimTime b = cuts[i + 1];
    const SimTime qa = floor_to_grid(a, tx.start, symbol);
    const SimTime qb = floor_to_grid(b, tx.start, symbol);
    if (qb <= qa) continue;
    live.clear();
    for (const auto& c : concurrent)
      if (c.active_over(a, b)) live.push_back(c);
    const double s = sinr(tx.rx_id, tx, live, gm, cfg);
    out.push_back({qa, qb - qa, s, tx.band_fraction});
  }
  return out;
}

}  // namespace coexsim
