#include <gtest/gtest.h>

#include <map>
#include <random>

#include "coexsim/lte_mac.hpp"

using namespace coexsim;

namespace {

LteCellState cell_with(int n_ues) {
  std::vector<int> ids;
  std::vector<double> pl;
  for (int k = 0; k < n_ues; ++k) {
    ids.push_back(10 + k);
    pl.push_back(80.0 + k);
  }
  return LteCellState(0, 1, ids, pl);
}

void backlog(std::deque<Packet>& q) {
  Packet p;
  p.size_bits = 1;
  q.push_back(p);
}

}  // namespace

TEST(DutyCycle, OnWindowBoundaries) {
  DutyCycleConfig dc;
  EXPECT_EQ(dc.on_length(), SimTime::from_ms(30));
  EXPECT_TRUE(is_lte_on(SimTime::from_us(29'900), dc));
  EXPECT_FALSE(is_lte_on(SimTime::from_ms(30), dc));
  EXPECT_TRUE(is_lte_on(SimTime::from_ms(50), dc));
  EXPECT_FALSE(is_lte_on(SimTime::from_us(49'999), dc));
  dc.on_fraction = 0.8;
  EXPECT_TRUE(is_lte_on(SimTime::from_us(39'999), dc));
  EXPECT_FALSE(is_lte_on(SimTime::from_ms(40), dc));
}

TEST(DutyCycle, PhaseOffsetsShiftTheWindow) {
  DutyCycleConfig dc;
  dc.phase_offsets = {SimTime{}, SimTime::from_ms(10)};
  EXPECT_FALSE(is_lte_on(SimTime::from_ms(5), dc, 1));
  EXPECT_TRUE(is_lte_on(SimTime::from_ms(10), dc, 1));
  EXPECT_TRUE(is_lte_on(SimTime::from_ms(39), dc, 1));
  EXPECT_FALSE(is_lte_on(SimTime::from_ms(40), dc, 1));
  EXPECT_TRUE(is_lte_on(SimTime::from_ms(5), dc, 6));  // no entry means no offset
}

TEST(DutyCycle, NextOnStart) {
  DutyCycleConfig dc;
  EXPECT_EQ(next_on_start(SimTime::from_ms(31), dc, 0), SimTime::from_ms(50));
  EXPECT_EQ(next_on_start(SimTime::from_ms(50), dc, 0), SimTime::from_ms(50));
  dc.phase_offsets = {SimTime::from_ms(7)};
  EXPECT_EQ(next_on_start(SimTime::from_ms(40), dc, 0), SimTime::from_ms(57));
  EXPECT_EQ(next_on_start(SimTime::from_ms(3), dc, 0), SimTime::from_ms(7));
  dc.on_fraction = 0.0;
  EXPECT_FALSE(next_on_start(SimTime::from_ms(40), dc, 0).has_value());
}

TEST(Scheduler, RoundRobinOverThreeUes) {
  auto cell = cell_with(3);
  for (auto& q : cell.dl_queue) backlog(q);
  std::vector<std::size_t> order;
  for (int tti = 0; tti < 4; ++tti) order.push_back(*schedule_dl(cell));
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2, 0}));
}

TEST(Scheduler, SingleBackloggedUeEveryTti) {
  auto cell = cell_with(4);
  backlog(cell.dl_queue[2]);
  for (int tti = 0; tti < 6; ++tti) EXPECT_EQ(schedule_dl(cell), 2u);
  cell.dl_queue[2].clear();
  EXPECT_FALSE(schedule_dl(cell).has_value());
}

TEST(Scheduler, FairnessOverKTimesMTtis) {
  for (int k = 1; k <= 10; ++k) {
    auto cell = cell_with(k);
    for (auto& q : cell.dl_queue) backlog(q);
    const int m = 7;
    std::map<std::size_t, int> count;
    for (int tti = 0; tti < k * m; ++tti) ++count[*schedule_dl(cell)];
    ASSERT_EQ(static_cast<int>(count.size()), k);
    for (const auto& [ue, c] : count) EXPECT_EQ(c, m);
  }
}

TEST(UplinkGrant, EqualShares) {
  auto cell = cell_with(6);
  EXPECT_TRUE(grant_ul(cell).empty());
  backlog(cell.ul_queue[4]);
  auto g = grant_ul(cell);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].band_fraction, 1.0);
  for (int k : {0, 1, 3}) backlog(cell.ul_queue[static_cast<std::size_t>(k)]);
  g = grant_ul(cell);
  ASSERT_EQ(g.size(), 4u);
  for (const auto& x : g) EXPECT_DOUBLE_EQ(x.band_fraction * 20e6, 5e6);
}

TEST(UplinkGrant, FractionsSumToAtMostOneAndDoNotOverlap) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto cell = cell_with(10);
    for (auto& q : cell.ul_queue)
      if (rng() % 2) backlog(q);
    const auto g = grant_ul(cell);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      sum += g[i].band_fraction;
      if (i > 0) { EXPECT_GE(g[i].band_offset + 1e-12, g[i - 1].band_offset + g[i - 1].band_fraction); }
    }
    EXPECT_LE(sum, 1.0 + 1e-12);
  }
}

TEST(PowerControl, ReferencePoints) {
  LteConfig cfg;
  EXPECT_DOUBLE_EQ(ul_tx_power(100.0, cfg), -6.0);
  EXPECT_DOUBLE_EQ(ul_tx_power(130.0, cfg), 23.0);
  EXPECT_DOUBLE_EQ(ul_tx_power(0.0, cfg), -106.0);
  EXPECT_NEAR(ul_tx_power(100.0, cfg, 10.0), 4.0, 1e-12);
}

TEST(PowerControl, CappedAndMonotone) {
  LteConfig cfg;
  for (double alpha : {0.5, 0.8, 1.0}) {
    cfg.tpc_alpha = alpha;
    double prev = -1e9;
    for (double pl = 30.0; pl <= 200.0; pl += 0.5) {
      const double p = ul_tx_power(pl, cfg, 25.0);
      EXPECT_LE(p, cfg.ue_max_power_dbm);
      EXPECT_GE(p, prev);
      prev = p;
    }
  }
}

TEST(LteStep, DownlinkAndUplinkSubframes) {
  LteConfig cfg;
  DutyCycleConfig dc;
  auto cell = cell_with(3);
  backlog(cell.ul_queue[0]);
  backlog(cell.ul_queue[2]);
  backlog(cell.dl_queue[1]);

  const auto d = lte_step(cell, SimTime::from_ms(0), dc, cfg);  // 'D'
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].link, LteLink::Downlink);
  EXPECT_EQ(d[0].tx.band_fraction, 1.0);
  EXPECT_EQ(d[0].tx.tx_id, 1);
  EXPECT_EQ(d[0].tx.rx_id, 11);
  EXPECT_EQ(d[0].tx.tx_power_dbm, cfg.dl_power_dbm);
  EXPECT_EQ(d[0].tx.end - d[0].tx.start, cfg.tti);

  const auto u = lte_step(cell, SimTime::from_ms(1), dc, cfg);  // 'U'
  ASSERT_EQ(u.size(), 2u);
  for (const auto& e : u) {
    EXPECT_EQ(e.link, LteLink::Uplink);
    EXPECT_EQ(e.tx.band_fraction, 0.5);
    EXPECT_EQ(e.tx.rx_id, 1);
    EXPECT_DOUBLE_EQ(e.tx.tx_power_dbm, ul_tx_power(cell.ue_path_loss_db[e.ue_index], cfg, 50.0));
  }
}

TEST(LteStep, SilentOutsideTheOnWindow) {
  LteConfig cfg;
  DutyCycleConfig dc;
  auto cell = cell_with(2);
  for (auto& q : cell.dl_queue) backlog(q);
  for (auto& q : cell.ul_queue) backlog(q);
  for (int ms = 30; ms < 50; ++ms) EXPECT_TRUE(lte_step(cell, SimTime::from_ms(ms), dc, cfg).empty());
}

TEST(LteStep, OnAirtimeOverOneSecond) {
  LteConfig cfg;
  DutyCycleConfig dc;
  auto cell = cell_with(2);
  for (auto& q : cell.dl_queue) backlog(q);
  for (auto& q : cell.ul_queue) backlog(q);
  SimTime busy;
  for (int ms = 0; ms < 1000; ++ms) {
    const auto e = lte_step(cell, SimTime::from_ms(ms), dc, cfg);
    if (!e.empty()) busy += cfg.tti;
    for (const auto& x : e) EXPECT_EQ(is_lte_on(x.tx.start, dc), is_lte_on(x.tx.end - SimTime::from_ns(1), dc));
  }
  EXPECT_NEAR(busy.seconds(), 0.600, 0.001);
}

TEST(LteStep, TddPatternSelectsDirection) {
  LteConfig cfg;
  cfg.tdd_pattern = "DDDDDDDDUU";
  EXPECT_EQ(subframe_direction(SimTime::from_ms(7), cfg), LteLink::Downlink);
  EXPECT_EQ(subframe_direction(SimTime::from_ms(8), cfg), LteLink::Uplink);
  EXPECT_EQ(subframe_direction(SimTime::from_ms(19), cfg), LteLink::Uplink);
  EXPECT_EQ(subframe_direction(SimTime::from_ms(20), cfg), LteLink::Downlink);
}
