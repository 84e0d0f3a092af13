#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coexsim/engine.hpp"
#include "coexsim/metrics.hpp"
#include "coexsim/scenario.hpp"

namespace coexsim {

struct SweepRow {
  double duty = 0.0;
  std::uint64_t seed = 0;
  bool is_mean = false;
  double lte_bps = 0.0;  // network aggregate
  double wifi_bps = 0.0;
  double lte_cell_bps = 0.0;
  double wifi_cell_bps = 0.0;
  double duty_observed = 0.0;
  std::vector<double> lte_sinr_deciles;
  std::vector<double> wifi_sinr_deciles;
};

struct SweepResult {
  std::vector<SweepRow> rows;   // one per (duty, seed), duty in input order, seeds ascending
  std::vector<SweepRow> means;  // one per duty
};

class SweepError : public std::runtime_error {
 public:
  SweepError(double duty, std::uint64_t seed, const std::string& what)
      : std::runtime_error("run failed at duty=" + std::to_string(duty) + " seed=" + std::to_string(seed) + ": " +
                           what),
        duty_(duty),
        seed_(seed) {}
  double duty() const { return duty_; }
  std::uint64_t seed() const { return seed_; }

 private:
  double duty_;
  std::uint64_t seed_;
};

// Worker count: COEX_SIM_THREADS if set, otherwise the hardware concurrency.
inline unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COEX_SIM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

inline SweepRow summarize(double duty, std::uint64_t seed, const RunMetrics& m) {
  SweepRow r;
  r.duty = duty;
  r.seed = seed;
  r.lte_bps = aggregate_throughput(m, Tech::Lte);
  r.wifi_bps = aggregate_throughput(m, Tech::Wifi);
  r.lte_cell_bps = per_cell_throughput(m, Tech::Lte);
  r.wifi_cell_bps = per_cell_throughput(m, Tech::Wifi);
  r.duty_observed = m.duty_observed;
  r.lte_sinr_deciles = deciles(m.sinr_db[tech_index(Tech::Lte)]);
  r.wifi_sinr_deciles = deciles(m.sinr_db[tech_index(Tech::Wifi)]);
  return r;
}

using RunObserver = std::function<void(double duty, std::uint64_t seed, const RunMetrics&)>;

// Cartesian product of duty cycles and seeds. Runs execute on a small thread
// pool; the observer is called under a lock. Means are taken over rows in
// ascending seed order so they do not depend on how seeds were listed.
inline SweepResult run_sweep(const Scenario& base, const std::vector<double>& duty_values,
                             std::vector<std::uint64_t> seeds, unsigned threads = sweep_threads(),
                             const RunObserver& observer = {}) {
  if (duty_values.empty() || seeds.empty()) throw std::invalid_argument("run_sweep: duty and seed lists must be non-empty");
  std::sort(seeds.begin(), seeds.end());

  struct Job {
    double duty;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double d : duty_values)
    for (auto s : seeds) jobs.push_back({d, s});

  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex observer_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        Scenario sc = base;
        sc.duty.on_fraction = jobs[i].duty;
        sc.seed = jobs[i].seed;
        const RunMetrics m = run(sc, jobs[i].seed);
        rows[i] = summarize(jobs[i].duty, jobs[i].seed, m);
        if (observer) {
          std::lock_guard lock(observer_mutex);
          observer(jobs[i].duty, jobs[i].seed, m);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw SweepError(jobs[i].duty, jobs[i].seed, e.what());
    }
  }

  SweepResult out;
  out.rows = rows;
  for (std::size_t d = 0; d < duty_values.size(); ++d) {
    SweepRow mean;
    mean.duty = duty_values[d];
    mean.is_mean = true;
    const double k = static_cast<double>(seeds.size());
    std::vector<double> lte_dec(9, 0.0), wifi_dec(9, 0.0);
    std::size_t lte_n = 0, wifi_n = 0;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const auto& r = rows[d * seeds.size() + s];
      mean.lte_bps += r.lte_bps / k;
      mean.wifi_bps += r.wifi_bps / k;
      mean.lte_cell_bps += r.lte_cell_bps / k;
      mean.wifi_cell_bps += r.wifi_cell_bps / k;
      mean.duty_observed += r.duty_observed / k;
      if (!r.lte_sinr_deciles.empty()) {
        ++lte_n;
        for (int i = 0; i < 9; ++i) lte_dec[static_cast<std::size_t>(i)] += r.lte_sinr_deciles[static_cast<std::size_t>(i)];
      }
      if (!r.wifi_sinr_deciles.empty()) {
        ++wifi_n;
        for (int i = 0; i < 9; ++i) wifi_dec[static_cast<std::size_t>(i)] += r.wifi_sinr_deciles[static_cast<std::size_t>(i)];
      }
    }
    if (lte_n > 0) {
      for (auto& v : lte_dec) v /= static_cast<double>(lte_n);
      mean.lte_sinr_deciles = lte_dec;
    }
    if (wifi_n > 0) {
      for (auto& v : wifi_dec) v /= static_cast<double>(wifi_n);
      mean.wifi_sinr_deciles = wifi_dec;
    }
    out.means.push_back(mean);
  }
  return out;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  os << "kind,duty,seed,lte_bps,wifi_bps,lte_cell_bps,wifi_cell_bps,duty_observed";
  for (int k = 1; k <= 9; ++k) os << ",lte_sinr_p" << k * 10;
  for (int k = 1; k <= 9; ++k) os << ",wifi_sinr_p" << k * 10;
  os << '\n' << std::setprecision(12);
  auto emit = [&](const SweepRow& row) {
    os << (row.is_mean ? "mean" : "run") << ',' << row.duty << ',';
    if (!row.is_mean) os << row.seed;
    os << ',' << row.lte_bps << ',' << row.wifi_bps << ',' << row.lte_cell_bps << ',' << row.wifi_cell_bps << ','
       << row.duty_observed;
    for (const auto* d : {&row.lte_sinr_deciles, &row.wifi_sinr_deciles}) {
      for (std::size_t k = 0; k < 9; ++k) {
        os << ',';
        if (k < d->size()) os << (*d)[k];
      }
    }
    os << '\n';
  };
  for (const auto& row : r.rows) emit(row);
  for (const auto& row : r.means) emit(row);
}

}  // namespace coexsim
