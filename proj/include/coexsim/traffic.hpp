#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coexsim/rng.hpp"
#include "coexsim/time.hpp"
#include "coexsim/topology.hpp"

namespace coexsim {

// File-arrival traffic: exponential inter-arrival gaps with a fixed file size.
struct TrafficConfig {
  double lambda = 2.5;                // arrivals per second per stream
  std::int64_t payload_bits = 4'000'000;
  std::size_t max_queue = 0;          // 0 = unbounded
  bool uplink = true;
  bool downlink = true;
};

struct Packet {
  std::uint64_t id = 0;
  int src = 0;
  int dst = 0;
  std::int64_t size_bits = 0;
  SimTime created_at;
  // Fractional Shannon credit; whole bits are only taken at completion.
  double credit_bits = 0.0;
  SimTime airtime;

  bool complete() const { return credit_bits >= static_cast<double>(size_bits); }
  double remaining_bits() const { return std::max(0.0, static_cast<double>(size_bits) - credit_bits); }
  std::int64_t delivered_bits() const {
    return std::min<std::int64_t>(size_bits, static_cast<std::int64_t>(std::floor(credit_bits)));
  }
};

inline double next_interarrival(double lambda, Rng& rng) {
  if (!(lambda > 0.0)) throw std::invalid_argument("next_interarrival: lambda must be > 0");
  std::exponential_distribution<double> gap(lambda);
  double d = gap(rng);
  // exponential_distribution may return exactly 0 for the largest uniform draw.
  while (d <= 0.0) d = gap(rng);
  return d;
}

// Arrivals on [0, horizon) for one node. STAs send to their AP, UEs to their
// BS; a BS runs one downlink stream per attached UE, merged into a single
// Poisson stream with destinations assigned round-robin.
inline std::vector<Packet> generate_arrivals(const Node& node, const Deployment& dep,
                                             const TrafficConfig& cfg, SimTime horizon, Rng& rng) {
  if (!(cfg.lambda > 0.0)) throw ConfigError("traffic.lambda must be > 0");
  if (cfg.payload_bits <= 0) throw ConfigError("traffic.payload_bits must be > 0");

  double rate = 0.0;
  switch (node.role) {
    case Role::WifiSta:
    case Role::LteUe:
      rate = cfg.uplink ? cfg.lambda : 0.0;
      break;
    case Role::LteBs:
      rate = cfg.downlink ? cfg.lambda * dep.n_ue : 0.0;
      break;
    case Role::WifiAp:
      break;
  }
  std::vector<Packet> out;
  if (rate <= 0.0 || horizon <= SimTime{}) return out;

  double t = 0.0;
  int rr = 0;
  std::uint64_t seq = 0;
  const double end = horizon.seconds();
  while (true) {
    t += next_interarrival(rate, rng);
    if (t >= end) break;
    Packet p;
    p.id = (static_cast<std::uint64_t>(node.id) << 32) | seq++;
    p.src = node.id;
    p.size_bits = cfg.payload_bits;
    p.created_at = SimTime::from_seconds(t);
    switch (node.role) {
      case Role::WifiSta: p.dst = dep.ap_of(node.cell_id); break;
      case Role::LteUe: p.dst = dep.bs_of(node.cell_id); break;
      case Role::LteBs:
        p.dst = dep.ue_of(node.cell_id, rr);
        rr = (rr + 1) % dep.n_ue;
        break;
      case Role::WifiAp: break;
    }
    // Rounding to ns can collapse two very close arrivals; keep times strictly increasing.
    if (!out.empty() && p.created_at <= out.back().created_at)
      p.created_at = out.back().created_at + SimTime::from_ns(1);
    if (p.created_at >= horizon) break;
    out.push_back(p);
  }
  return out;
}

}  // namespace coexsim
