#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coexsim/phy_link.hpp"
#include "coexsim/time.hpp"
#include "coexsim/topology.hpp"

namespace coexsim {

struct NodeStats {
  Tech tech = Tech::Wifi;
  Role role = Role::WifiSta;
  int cell_id = 0;
  std::int64_t offered_bits = 0;
  std::int64_t delivered_bits = 0;  // completed packets plus whole bits of partial ones
  std::int64_t completed_bits = 0;
  std::int64_t completed_packets = 0;
  std::int64_t dropped_packets = 0;  // arrivals refused by a full queue
  SimTime t_tx;    // summed over completed packets
  SimTime t_wait;  // summed over completed packets

  // Capacity over this node's completed packets.
  double capacity_bps() const {
    const SimTime total = t_tx + t_wait;
    return total > SimTime{} ? static_cast<double>(completed_bits) / total.seconds() : 0.0;
  }
};

inline std::size_t tech_index(Tech t) { return static_cast<std::size_t>(t); }

struct RunMetrics {
  double horizon = 0.0;  // seconds
  int n_cells = 0;
  std::map<int, NodeStats> per_node;
  std::array<std::vector<double>, 2> sinr_db;      // indexed by tech_index
  std::array<std::vector<double>, 2> sinr_weight;  // seconds, filled when duration weighting is on
  std::array<double, 2> airtime{0.0, 0.0};         // sum of duration * band share, seconds
  std::array<std::int64_t, 2> transmissions{0, 0};
  double duty_observed = 0.0;
  std::vector<DeliveryRecord> deliveries;
  std::int64_t wifi_tx_in_lte_on = 0;  // WiFi data PPDUs started inside an LTE on window
  std::int64_t beacons_sent = 0;
  std::int64_t beacons_dropped = 0;
};

inline std::int64_t total_delivered_bits(const RunMetrics& m, Tech tech) {
  std::int64_t sum = 0;
  for (const auto& [id, s] : m.per_node)
    if (s.tech == tech) sum += s.delivered_bits;
  return sum;
}

// Network-wide delivered bits per second for one technology.
inline double aggregate_throughput(const RunMetrics& m, Tech tech) {
  if (!(m.horizon > 0.0)) return 0.0;
  return static_cast<double>(total_delivered_bits(m, tech)) / m.horizon;
}

inline double per_cell_throughput(const RunMetrics& m, Tech tech) {
  return m.n_cells > 0 ? aggregate_throughput(m, tech) / m.n_cells : 0.0;
}

struct CdfPoint {
  double value = 0.0;
  double probability = 0.0;
};

// Sorted samples with P(X <= x_i) = i / n (1-based rank).
inline std::vector<CdfPoint> empirical_cdf(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_cdf: no samples");
  std::sort(samples.begin(), samples.end());
  std::vector<CdfPoint> cdf;
  cdf.reserve(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    cdf.push_back({samples[i], static_cast<double>(i + 1) / n});
  cdf.back().probability = 1.0;
  return cdf;
}

// Smallest sample whose CDF reaches p.
inline double quantile(const std::vector<CdfPoint>& cdf, double p) {
  if (cdf.empty()) throw std::invalid_argument("quantile: empty CDF");
  auto it = std::lower_bound(cdf.begin(), cdf.end(), p - 1e-12,
                             [](const CdfPoint& c, double q) { return c.probability < q; });
  return it == cdf.end() ? cdf.back().value : it->value;
}

// Same definition with per-sample weights.
inline std::vector<CdfPoint> weighted_cdf(const std::vector<double>& samples, const std::vector<double>& weights) {
  if (samples.empty() || samples.size() != weights.size())
    throw std::invalid_argument("weighted_cdf: samples and weights must be non-empty and equal length");
  std::vector<std::pair<double, double>> sw;
  sw.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) sw.emplace_back(samples[i], weights[i]);
  std::sort(sw.begin(), sw.end());
  double total = 0.0;
  for (const auto& [v, w] : sw) total += w;
  std::vector<CdfPoint> cdf;
  double acc = 0.0;
  for (const auto& [v, w] : sw) {
    acc += w;
    cdf.push_back({v, acc / total});
  }
  cdf.back().probability = 1.0;
  return cdf;
}

// 1st..9th deciles; empty when there are no samples.
inline std::vector<double> deciles(const std::vector<double>& samples) {
  if (samples.empty()) return {};
  const auto cdf = empirical_cdf(samples);
  std::vector<double> d;
  for (int k = 1; k <= 9; ++k) d.push_back(quantile(cdf, k / 10.0));
  return d;
}

}  // namespace coexsim
