#include <gtest/gtest.h>

#include <random>

#include "coexsim/metrics.hpp"

using namespace coexsim;

TEST(EmpiricalCdf, MedianOfThree) {
  const auto cdf = empirical_cdf({3.0, 1.0, 2.0});
  ASSERT_EQ(cdf.size(), 3u);
  EXPECT_EQ(quantile(cdf, 0.5), 2.0);
  EXPECT_EQ(cdf.front().value, 1.0);
  EXPECT_DOUBLE_EQ(cdf.front().probability, 1.0 / 3.0);
}

TEST(EmpiricalCdf, ConstantListIsOneStep) {
  const auto cdf = empirical_cdf(std::vector<double>(8, 4.5));
  for (double p : {0.01, 0.5, 1.0}) EXPECT_EQ(quantile(cdf, p), 4.5);
  EXPECT_EQ(cdf.back().probability, 1.0);
}

TEST(EmpiricalCdf, MonotoneAndEndsAtOne) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(1 + trial * 37);
    for (auto& x : xs) x = n(rng);
    const auto cdf = empirical_cdf(xs);
    for (std::size_t i = 1; i < cdf.size(); ++i) {
      EXPECT_LE(cdf[i - 1].value, cdf[i].value);
      EXPECT_LT(cdf[i - 1].probability, cdf[i].probability);
    }
    EXPECT_EQ(cdf.back().probability, 1.0);
  }
}

TEST(EmpiricalCdf, RejectsEmpty) { EXPECT_THROW(empirical_cdf({}), std::invalid_argument); }

TEST(WeightedCdf, WeightsShiftTheMedian) {
  const auto cdf = weighted_cdf({1.0, 2.0, 3.0}, {1.0, 1.0, 8.0});
  EXPECT_EQ(quantile(cdf, 0.5), 3.0);
  EXPECT_EQ(quantile(cdf, 0.1), 1.0);
  EXPECT_EQ(cdf.back().probability, 1.0);
  EXPECT_THROW(weighted_cdf({1.0}, {}), std::invalid_argument);
}

TEST(Deciles, OneToNine) {
  std::vector<double> xs;
  for (int i = 1; i <= 100; ++i) xs.push_back(i);
  const auto d = deciles(xs);
  ASSERT_EQ(d.size(), 9u);
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(d[static_cast<std::size_t>(k - 1)], 10.0 * k);
  EXPECT_TRUE(deciles({}).empty());
}

TEST(Throughput, SumOverNodes) {
  RunMetrics m;
  m.horizon = 1.0;
  m.n_cells = 7;
  for (int id : {3, 4}) {
    m.per_node[id].tech = Tech::Wifi;
    m.per_node[id].delivered_bits = 1'000'000;
  }
  m.per_node[9].tech = Tech::Lte;
  EXPECT_DOUBLE_EQ(aggregate_throughput(m, Tech::Wifi), 2e6);
  EXPECT_DOUBLE_EQ(aggregate_throughput(m, Tech::Lte), 0.0);
  EXPECT_DOUBLE_EQ(per_cell_throughput(m, Tech::Wifi), 2e6 / 7);
  m.horizon = 0.0;
  EXPECT_DOUBLE_EQ(aggregate_throughput(m, Tech::Wifi), 0.0);
}

TEST(NodeStats, CapacityOverCompletedPackets) {
  NodeStats s;
  EXPECT_EQ(s.capacity_bps(), 0.0);
  s.completed_bits = 20'000;
  s.t_tx = SimTime::from_ms(1);
  s.t_wait = SimTime::from_ms(1);
  EXPECT_DOUBLE_EQ(s.capacity_bps(), 10e6);
}
