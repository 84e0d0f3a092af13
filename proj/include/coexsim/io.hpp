#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coexsim/metrics.hpp"
#include "coexsim/scenario.hpp"
#include "coexsim/topology.hpp"

namespace coexsim {

inline json deployment_to_json(const Deployment& dep) {
  json nodes = json::array();
  for (const auto& n : dep.nodes) {
    json j{{"id", n.id}, {"role", to_string(n.role)}, {"cell", n.cell_id}, {"x", n.pos.x}, {"y", n.pos.y}};
    if (n.is_mdms) j["mdms"] = true;
    nodes.push_back(std::move(j));
  }
  json centers = json::array();
  for (const auto& c : dep.cell_centers) centers.push_back({{"x", c.x}, {"y", c.y}});
  return json{{"cell_radius_m", dep.cell_radius}, {"cell_centers", centers}, {"nodes", nodes}};
}

inline json metrics_to_json(const RunMetrics& m) {
  json techs = json::object();
  for (Tech t : {Tech::Lte, Tech::Wifi}) {
    const auto k = tech_index(t);
    techs[to_string(t)] = {
        {"aggregate_throughput_bps", aggregate_throughput(m, t)},
        {"per_cell_throughput_bps", per_cell_throughput(m, t)},
        {"delivered_bits", total_delivered_bits(m, t)},
        {"airtime_s", m.airtime[k]},
        {"transmissions", m.transmissions[k]},
        {"sinr_samples", m.sinr_db[k].size()},
        {"sinr_deciles_db", deciles(m.sinr_db[k])},
    };
  }
  json nodes = json::array();
  for (const auto& [id, s] : m.per_node) {
    nodes.push_back({{"id", id},
                     {"role", to_string(s.role)},
                     {"cell", s.cell_id},
                     {"offered_bits", s.offered_bits},
                     {"delivered_bits", s.delivered_bits},
                     {"completed_packets", s.completed_packets},
                     {"dropped_packets", s.dropped_packets},
                     {"t_tx_s", s.t_tx.seconds()},
                     {"t_wait_s", s.t_wait.seconds()},
                     {"capacity_bps", s.capacity_bps()}});
  }
  return json{{"horizon_s", m.horizon},
              {"n_cells", m.n_cells},
              {"duty_observed", m.duty_observed},
              {"beacons_sent", m.beacons_sent},
              {"beacons_dropped", m.beacons_dropped},
              {"wifi_tx_in_lte_on", m.wifi_tx_in_lte_on},
              {"completed_packets", m.deliveries.size()},
              {"technologies", techs},
              {"per_node", nodes}};
}

inline void write_nodes_csv(std::ostream& os, const RunMetrics& m, const Deployment& dep) {
  os << "node_id,role,cell,x,y,offered_bits,delivered_bits,throughput_bps,completed_packets,t_tx_s,t_wait_s,"
        "capacity_bps\n";
  os << std::setprecision(12);
  for (const auto& [id, s] : m.per_node) {
    const Node& n = dep.node(id);
    const double thr = m.horizon > 0.0 ? static_cast<double>(s.delivered_bits) / m.horizon : 0.0;
    os << id << ',' << to_string(s.role) << ',' << s.cell_id << ',' << n.pos.x << ',' << n.pos.y << ','
       << s.offered_bits << ',' << s.delivered_bits << ',' << thr << ',' << s.completed_packets << ','
       << s.t_tx.seconds() << ',' << s.t_wait.seconds() << ',' << s.capacity_bps() << '\n';
  }
}

inline constexpr double kSinrBinDb = 0.5;

// Per-technology SINR histogram on 0.5 dB bins with the running CDF.
inline void write_sinr_csv(std::ostream& os, const RunMetrics& m) {
  os << "tech,bin_lo_db,bin_hi_db,count,cdf\n";
  os << std::setprecision(12);
  for (Tech t : {Tech::Lte, Tech::Wifi}) {
    const auto& samples = m.sinr_db[tech_index(t)];
    std::map<std::int64_t, std::int64_t> bins;
    for (double v : samples) ++bins[static_cast<std::int64_t>(std::floor(v / kSinrBinDb))];
    std::int64_t acc = 0;
    for (const auto& [b, c] : bins) {
      acc += c;
      os << to_string(t) << ',' << b * kSinrBinDb << ',' << (b + 1) * kSinrBinDb << ',' << c << ','
         << static_cast<double>(acc) / static_cast<double>(samples.size()) << '\n';
    }
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open config file: " + path});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config is not valid JSON: ") + e.what()});
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace coexsim
