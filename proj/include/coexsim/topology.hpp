#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "coexsim/rng.hpp"

namespace coexsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role { WifiAp, WifiSta, LteBs, LteUe };
enum class Tech { Lte = 0, Wifi = 1 };

inline Tech tech_of(Role r) { return (r == Role::WifiAp || r == Role::WifiSta) ? Tech::Wifi : Tech::Lte; }

inline const char* to_string(Role r) {
  switch (r) {
    case Role::WifiAp: return "wifi_ap";
    case Role::WifiSta: return "wifi_sta";
    case Role::LteBs: return "lte_bs";
    case Role::LteUe: return "lte_ue";
  }
  return "?";
}

inline const char* to_string(Tech t) { return t == Tech::Lte ? "lte" : "wifi"; }

struct Position {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Position&) const = default;
};

inline double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Node {
  int id = 0;
  Role role = Role::WifiSta;
  int cell_id = 0;
  Position pos;
  double max_tx_power_dbm = 0.0;
  bool is_mdms = false;  // meaningful for LteUe only

  bool operator==(const Node&) const = default;
};

struct DeploymentConfig {
  double cell_radius_m = 50.0;
  int n_sta = 10;
  int n_ue = 10;
  double min_dist_m = 3.0;
};

// Maximum transmit power per role, dBm.
struct NodePowers {
  double wifi_ap = 23.0;
  double wifi_sta = 23.0;
  double lte_bs = 20.0;
  double lte_ue = 23.0;

  double of(Role r) const {
    switch (r) {
      case Role::WifiAp: return wifi_ap;
      case Role::WifiSta: return wifi_sta;
      case Role::LteBs: return lte_bs;
      case Role::LteUe: return lte_ue;
    }
    return 0.0;
  }
};

inline constexpr int kNumCells = 7;
inline constexpr int kMaxDropAttempts = 10'000;

// Seven collocated WiFi-AP/LTE-BS sites: one center cell and a ring of six.
// Node ids are dense and ordered by cell, then AP, BS, STAs, UEs.
struct Deployment {
  std::vector<Node> nodes;
  double cell_radius = 0.0;
  std::vector<Position> cell_centers;
  int n_sta = 0;
  int n_ue = 0;

  int num_cells() const { return static_cast<int>(cell_centers.size()); }
  const Node& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }

  int nodes_per_cell() const { return 2 + n_sta + n_ue; }
  int ap_of(int cell) const { return cell * nodes_per_cell(); }
  int bs_of(int cell) const { return cell * nodes_per_cell() + 1; }
  int sta_of(int cell, int k) const { return cell * nodes_per_cell() + 2 + k; }
  int ue_of(int cell, int k) const { return cell * nodes_per_cell() + 2 + n_sta + k; }

  int mdms_id() const {
    for (const auto& n : nodes)
      if (n.is_mdms) return n.id;
    return -1;
  }

  bool operator==(const Deployment&) const = default;
};

// Hexagonal arrangement with center-to-center spacing sqrt(3) * radius.
inline std::vector<Position> hex_cell_centers(double cell_radius) {
  std::vector<Position> centers{{0.0, 0.0}};
  const double isd = std::sqrt(3.0) * cell_radius;
  for (int k = 0; k < kNumCells - 1; ++k) {
    const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
    centers.push_back({isd * std::cos(a), isd * std::sin(a)});
  }
  return centers;
}

inline Deployment build_deployment(const DeploymentConfig& cfg, std::uint64_t rng_seed,
                                   const NodePowers& powers = {}) {
  if (!(cfg.cell_radius_m > 0.0) || !std::isfinite(cfg.cell_radius_m))
    throw ConfigError("deployment.cell_radius_m must be > 0");
  if (cfg.n_sta < 1) throw ConfigError("deployment.n_sta must be >= 1");
  if (cfg.n_ue < 1) throw ConfigError("deployment.n_ue must be >= 1");
  if (!(cfg.min_dist_m >= 0.0) || !(cfg.min_dist_m < cfg.cell_radius_m))
    throw ConfigError("deployment.min_dist_m must satisfy 0 <= min_dist < cell_radius");

  Deployment dep;
  dep.cell_radius = cfg.cell_radius_m;
  dep.cell_centers = hex_cell_centers(cfg.cell_radius_m);
  dep.n_sta = cfg.n_sta;
  dep.n_ue = cfg.n_ue;

  Rng rng = make_rng(rng_seed, Stream::Deployment);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto drop = [&](Position center) {
    for (int attempt = 0; attempt < kMaxDropAttempts; ++attempt) {
      // Uniform over the disc: radius ~ R * sqrt(U).
      const double r = cfg.cell_radius_m * std::sqrt(unit(rng));
      const double theta = 2.0 * std::numbers::pi * unit(rng);
      Position p{center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
      if (distance(p, center) >= cfg.min_dist_m) return p;
    }
    throw ConfigError("node drop exceeded " + std::to_string(kMaxDropAttempts) +
                      " attempts; deployment.min_dist_m too large");
  };

  int next_id = 0;
  for (int c = 0; c < dep.num_cells(); ++c) {
    const Position center = dep.cell_centers[static_cast<std::size_t>(c)];
    dep.nodes.push_back({next_id++, Role::WifiAp, c, center, powers.of(Role::WifiAp), false});
    dep.nodes.push_back({next_id++, Role::LteBs, c, center, powers.of(Role::LteBs), false});
    for (int k = 0; k < cfg.n_sta; ++k)
      dep.nodes.push_back({next_id++, Role::WifiSta, c, drop(center), powers.of(Role::WifiSta), false});
    for (int k = 0; k < cfg.n_ue; ++k)
      dep.nodes.push_back({next_id++, Role::LteUe, c, drop(center), powers.of(Role::LteUe), false});
  }
  // MDMS: the lowest-id UE of the center cell.
  dep.nodes[static_cast<std::size_t>(dep.ue_of(0, 0))].is_mdms = true;
  return dep;
}

}  // namespace coexsim
