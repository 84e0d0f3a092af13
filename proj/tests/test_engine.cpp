#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "coexsim/coexsim.hpp"

using namespace coexsim;

namespace {

Scenario short_scenario(double horizon = 1.0) {
  Scenario s;
  s.horizon_s = horizon;
  return s;
}

struct Traced {
  RunMetrics m;
  std::vector<TraceEntry> trace;
  Deployment dep;
  GainMatrix gm{0};
};

Traced traced_run(const Scenario& s, std::uint64_t seed) {
  Traced out;
  Simulator sim(s, seed);
  sim.set_trace(&out.trace);
  out.dep = sim.deployment();
  out.gm = sim.gains();
  out.m = sim.run();
  return out;
}

std::string outputs(const Scenario& s, std::uint64_t seed) {
  Simulator sim(s, seed);
  const RunMetrics m = sim.run();
  std::ostringstream os;
  os << metrics_to_json(m).dump(2) << deployment_to_json(sim.deployment()).dump(2);
  write_nodes_csv(os, m, sim.deployment());
  write_sinr_csv(os, m);
  return os.str();
}

bool is_lte(TxKind k) { return k == TxKind::LteDownlink || k == TxKind::LteUplink; }

}  // namespace

TEST(Snapshot, EmptyActiveSetIsNoiseOnly) {
  PropagationConfig cfg;
  GainMatrix gm(3);
  const auto p = snapshot_active(0, {}, gm, cfg);
  EXPECT_TRUE(std::isinf(p.wifi_dbm));
  EXPECT_NEAR(p.total_dbm, cfg.noise_power_dbm(), 1e-9);
}

TEST(Snapshot, LinearPowerAddition) {
  PropagationConfig cfg;
  cfg.noise_figure = -1000.0;  // keep the noise floor out of the sums
  GainMatrix gm(3);
  gm.set_reciprocal(1, 0, 1e-7);
  gm.set_reciprocal(2, 0, 1e-7);
  Transmission wifi;
  wifi.tx_id = 1;
  wifi.tech = Tech::Wifi;
  wifi.tx_power_dbm = 0.0;  // -70 dBm at node 0
  Transmission lte = wifi;
  lte.tx_id = 2;
  lte.tech = Tech::Lte;

  auto p = snapshot_active(0, std::vector{wifi}, gm, cfg);
  EXPECT_NEAR(p.wifi_dbm, -70.0, 1e-9);
  EXPECT_NEAR(p.total_dbm, -70.0, 1e-9);
  p = snapshot_active(0, std::vector{wifi, lte}, gm, cfg);
  EXPECT_NEAR(p.wifi_dbm, -70.0, 1e-9);
  EXPECT_NEAR(p.total_dbm, -66.99, 0.005);
  // A node does not hear itself.
  p = snapshot_active(1, std::vector{wifi}, gm, cfg);
  EXPECT_TRUE(std::isinf(p.wifi_dbm));
}

TEST(Event, CalendarOrder) {
  const SimTime t = SimTime::from_ms(1);
  const Event duty{t, EventKind::DutyEdge, 0, 9};
  const Event tti{t, EventKind::TtiBoundary, 0, 1};
  const Event slot{t, EventKind::SlotBoundary, 0, 0};
  const Event early{SimTime::from_us(999), EventKind::Beacon, 0, 50};
  EXPECT_TRUE(tti > duty);
  EXPECT_TRUE(slot > tti);
  EXPECT_TRUE(duty > early);
  EXPECT_TRUE((Event{t, EventKind::TxEnd, 0, 4} > Event{t, EventKind::TxEnd, 0, 3}));
}

TEST(Engine, ZeroHorizonIsEmpty) {
  const RunMetrics m = run(short_scenario(0.0), 1);
  EXPECT_EQ(m.horizon, 0.0);
  EXPECT_TRUE(m.sinr_db[0].empty());
  EXPECT_TRUE(m.deliveries.empty());
  EXPECT_EQ(aggregate_throughput(m, Tech::Lte), 0.0);
  EXPECT_EQ(m.duty_observed, 0.0);
}

TEST(Engine, RejectsInvalidScenario) {
  Scenario s = short_scenario();
  s.wifi.cca_cs_dbm = -50.0;
  EXPECT_THROW(Simulator(s, 1), ValidationError);
}

TEST(Engine, SameSeedGivesIdenticalOutputs) {
  const Scenario s = short_scenario(1.0);
  EXPECT_EQ(outputs(s, 42), outputs(s, 42));
  EXPECT_NE(outputs(s, 42), outputs(s, 43));
}

TEST(Engine, SimulatorRunsOnce) {
  Simulator sim(short_scenario(0.1), 1);
  sim.run();
  EXPECT_THROW(sim.run(), std::logic_error);
}

TEST(Engine, ConservationAndThroughputIdentity) {
  for (std::uint64_t seed : {1, 2}) {
    const RunMetrics m = run(short_scenario(1.5), seed);
    std::int64_t lte = 0, wifi = 0;
    for (const auto& [id, s] : m.per_node) {
      EXPECT_LE(s.delivered_bits, s.offered_bits) << "node " << id;
      EXPECT_GE(s.delivered_bits, s.completed_bits);
      (s.tech == Tech::Lte ? lte : wifi) += s.delivered_bits;
    }
    EXPECT_EQ(static_cast<double>(lte) / m.horizon, aggregate_throughput(m, Tech::Lte));
    EXPECT_EQ(static_cast<double>(wifi) / m.horizon, aggregate_throughput(m, Tech::Wifi));
    EXPECT_GT(lte, 0);
    EXPECT_GT(wifi, 0);
  }
}

TEST(Engine, CapacityIdentityPerCompletedPacket) {
  const RunMetrics m = run(short_scenario(2.0), 3);
  ASSERT_FALSE(m.deliveries.empty());
  for (const auto& d : m.deliveries) {
    const double c = capacity(d);
    EXPECT_EQ(std::llround(c * (d.t_tx + d.t_wait).seconds()), d.bits);
    EXPECT_GT(d.t_tx, SimTime{});
    EXPECT_GE(d.t_wait, SimTime{});
  }
}

TEST(Engine, TraceMatchesAirtimeAccounting) {
  const Traced r = traced_run(short_scenario(1.0), 5);
  std::array<double, 2> air{0.0, 0.0};
  std::array<std::int64_t, 2> n{0, 0};
  for (const auto& e : r.trace) {
    const auto k = tech_index(e.tx.tech);
    air[k] += e.tx.duration().seconds() * e.tx.band_fraction;
    ++n[k];
    EXPECT_GT(e.tx.end, e.tx.start);
    EXPECT_LE(e.tx.end, SimTime::from_seconds(1.0));
  }
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_NEAR(air[k], r.m.airtime[k], 1e-9);
    EXPECT_EQ(n[k], r.m.transmissions[k]);
  }
}

TEST(Engine, LteRespectsDutyWindowAndTdd) {
  Scenario s = short_scenario(1.0);
  const Traced r = traced_run(s, 6);
  std::map<std::pair<int, std::int64_t>, double> ul_share;
  std::map<std::pair<int, std::int64_t>, int> dl_count;
  for (const auto& e : r.trace) {
    if (!is_lte(e.kind)) continue;
    const int cell = r.dep.node(e.tx.tx_id).cell_id;
    EXPECT_TRUE(is_lte_on(e.tx.start, s.duty, cell));
    EXPECT_TRUE(is_lte_on(e.tx.end - SimTime::from_ns(1), s.duty, cell));
    EXPECT_EQ(e.tx.duration(), s.lte.tti);
    const auto tti = e.tx.start / s.lte.tti;
    const LteLink dir = subframe_direction(e.tx.start, s.lte);
    if (e.kind == TxKind::LteDownlink) {
      EXPECT_EQ(dir, LteLink::Downlink);
      ++dl_count[{cell, tti}];
    } else {
      EXPECT_EQ(dir, LteLink::Uplink);
      ul_share[{cell, tti}] += e.tx.band_fraction;
    }
  }
  EXPECT_FALSE(dl_count.empty());
  EXPECT_FALSE(ul_share.empty());
  for (const auto& [key, c] : dl_count) EXPECT_EQ(c, 1);
  for (const auto& [key, f] : ul_share) EXPECT_LE(f, 1.0 + 1e-12);
}

TEST(Engine, QuietPeriodsKeepWifiOutOfOnWindows) {
  Scenario s = short_scenario(2.0);
  const Traced r = traced_run(s, 7);
  int wifi = 0;
  for (const auto& e : r.trace) {
    if (e.tx.tech != Tech::Wifi) continue;
    ++wifi;
    const int cell = r.dep.node(e.tx.tx_id).cell_id;
    EXPECT_FALSE(is_lte_on(e.tx.start, s.duty, cell));
    EXPECT_FALSE(is_lte_on(e.tx.end - SimTime::from_ns(1), s.duty, cell));
    EXPECT_LE(e.tx.end, *next_on_start(e.tx.start, s.duty, cell));
  }
  EXPECT_GT(wifi, 100);
  EXPECT_EQ(r.m.wifi_tx_in_lte_on, 0);
}

TEST(Engine, CcaDefersToLteEnergyAboveEd) {
  // Without quiet periods, WiFi relies on CCA alone: no data frame may start
  // while LTE energy at the station is at or above the ED threshold.
  Scenario s = short_scenario(2.0);
  s.wifi.quiet_during_lte_on = false;
  const Traced r = traced_run(s, 8);
  int checked = 0;
  for (const auto& e : r.trace) {
    if (e.kind != TxKind::WifiData) continue;
    double lte_mw = 0.0;
    for (const auto& o : r.trace)
      if (is_lte(o.kind) && o.tx.start <= e.tx.start && e.tx.start < o.tx.end)
        lte_mw += r.gm(o.tx.tx_id, e.tx.tx_id) * dbm_to_mw(o.tx.tx_power_dbm);
    EXPECT_LT(mw_to_dbm(lte_mw), s.wifi.cca_ed_dbm);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Engine, StationsAssociateAndBackoffBalances) {
  Simulator sim(short_scenario(2.0), 10);
  sim.run();
  int associated = 0;
  for (const auto& st : sim.stations()) {
    associated += st.ever_associated ? 1 : 0;
    EXPECT_EQ(st.backoff_consumed, st.backoff_drawn - st.contention.backoff_slots);
  }
  EXPECT_GT(associated, 35);
}

TEST(Engine, FullDutyLeavesNoRoomForWifi) {
  Scenario s = short_scenario(1.0);
  s.duty.on_fraction = 1.0;
  const RunMetrics m = run(s, 1);
  EXPECT_EQ(aggregate_throughput(m, Tech::Wifi), 0.0);
  EXPECT_GT(aggregate_throughput(m, Tech::Lte), 0.0);
}
