#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "coexsim/rng.hpp"
#include "coexsim/time.hpp"
#include "coexsim/topology.hpp"
#include "coexsim/units.hpp"

namespace coexsim {

// Log-distance urban-micro style model at 3.5 GHz:
//   PL(d) = intercept + coeff * log10(max(d, 1 m)) + freq_term
struct PropagationConfig {
  double pl_exponent_coeff = 36.7;
  double pl_intercept = 22.7;
  double freq_term = 26.0 * std::log10(3.5);
  double shadowing_sigma = 8.0;
  double noise_figure = 6.0;
  double bandwidth = 20e6;

  double noise_power_dbm() const {
    return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth) + noise_figure;
  }
  double noise_power_mw() const { return dbm_to_mw(noise_power_dbm()); }
};

inline double path_loss_db(double d, const PropagationConfig& cfg) {
  return cfg.pl_intercept + cfg.pl_exponent_coeff * std::log10(std::max(d, 1.0)) + cfg.freq_term;
}

// Static linear power gains between every node pair. The diagonal is 1 so a
// node's own transmission swamps anything it tries to receive (half duplex).
class GainMatrix {
 public:
  GainMatrix() = default;
  explicit GainMatrix(std::size_t n) : n_(n), g_(n * n, 1.0) {}

  std::size_t size() const { return n_; }
  double operator()(int tx, int rx) const {
    return g_[static_cast<std::size_t>(tx) * n_ + static_cast<std::size_t>(rx)];
  }
  void set_reciprocal(int a, int b, double gain) {
    g_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] = gain;
    g_[static_cast<std::size_t>(b) * n_ + static_cast<std::size_t>(a)] = gain;
  }
  // Path loss including shadowing, dB.
  double loss_db(int tx, int rx) const { return -linear_to_db((*this)(tx, rx)); }

  bool operator==(const GainMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> g_;
};

// One log-normal shadowing draw per unordered pair, taken in (a < b) id order.
inline GainMatrix build_gain_matrix(const Deployment& dep, const PropagationConfig& cfg,
                                    std::uint64_t rng_seed) {
  if (cfg.shadowing_sigma < 0.0) throw ConfigError("propagation.shadowing_sigma_db must be >= 0");
  const std::size_t n = dep.nodes.size();
  GainMatrix gm(n);
  Rng rng = make_rng(rng_seed, Stream::Shadowing);
  std::normal_distribution<double> shadow(0.0, cfg.shadowing_sigma > 0.0 ? cfg.shadowing_sigma : 1.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = distance(dep.nodes[a].pos, dep.nodes[b].pos);
      const double x = cfg.shadowing_sigma > 0.0 ? shadow(rng) : 0.0;
      gm.set_reciprocal(static_cast<int>(a), static_cast<int>(b),
                        db_to_linear(-(path_loss_db(d, cfg) + x)));
    }
  }
  return gm;
}

inline constexpr int kBroadcast = -1;

// An airtime occupancy on the shared carrier. The occupied sub-band is
// [band_offset, band_offset + band_fraction) in units of the full channel.
struct Transmission {
  std::uint64_t id = 0;
  int tx_id = 0;
  int rx_id = 0;
  Tech tech = Tech::Wifi;
  double tx_power_dbm = 0.0;
  double band_offset = 0.0;
  double band_fraction = 1.0;
  SimTime start;
  SimTime end;

  SimTime duration() const { return end - start; }
  bool overlaps_in_time(const Transmission& o) const { return start < o.end && o.start < end; }
  bool active_over(SimTime a, SimTime b) const { return start <= a && b <= end; }
};

// Fraction of `rx_band`'s width that `other` occupies.
inline double band_overlap(const Transmission& rx_band, const Transmission& other) {
  const double lo = std::max(rx_band.band_offset, other.band_offset);
  const double hi = std::min(rx_band.band_offset + rx_band.band_fraction,
                             other.band_offset + other.band_fraction);
  return hi > lo ? (hi - lo) / rx_band.band_fraction : 0.0;
}

// Power (mW) an interferer deposits inside the signal's sub-band at rx. The
// interferer's power is spread evenly over its own sub-band.
inline double in_band_interference_mw(int rx_id, const Transmission& signal, const Transmission& k,
                                      const GainMatrix& gm) {
  const double ov = band_overlap(signal, k);
  if (ov <= 0.0) return 0.0;
  const double captured = ov * signal.band_fraction / k.band_fraction;
  return gm(k.tx_id, rx_id) * dbm_to_mw(k.tx_power_dbm) * captured;
}

// SINR at rx_id: received signal over in-band interference from every
// concurrent transmission plus thermal noise across the occupied sub-band.
inline double sinr(int rx_id, const Transmission& signal, std::span<const Transmission> interferers,
                   const GainMatrix& gm, const PropagationConfig& cfg) {
  if (!(signal.band_fraction > 0.0 && signal.band_fraction <= 1.0) || !std::isfinite(signal.tx_power_dbm))
    throw std::invalid_argument("sinr: signal has no valid band or power");
  const double s = gm(signal.tx_id, rx_id) * dbm_to_mw(signal.tx_power_dbm);
  double denom = cfg.noise_power_mw() * signal.band_fraction;
  for (const auto& k : interferers) denom += in_band_interference_mw(rx_id, signal, k, gm);
  return s / denom;
}

}  // namespace coexsim
