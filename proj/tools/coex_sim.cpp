// coex-sim: command-line driver for the LTE-U / WiFi coexistence simulator.
//
//   coex-sim init     --out scenario.json
//   coex-sim validate --config scenario.json
//   coex-sim run      --config scenario.json [--seed N] --out DIR
//   coex-sim sweep    --config scenario.json --duty 0.6,0.8 --seeds 1..10 --out DIR

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coexsim/coexsim.hpp"

namespace fs = std::filesystem;
using namespace coexsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

Scenario load(const std::string& path) { return scenario_from_json(read_json_file(path)); }

// "1..10", "3", or "1,4,7" (ranges may be mixed with single values).
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoull(item));
      } else {
        const auto lo = std::stoull(item.substr(0, dots));
        const auto hi = std::stoull(item.substr(dots + 2));
        if (hi < lo) throw ValidationError({"--seeds: empty range " + item});
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw ValidationError({"--seeds: cannot parse '" + item + "'"});
    }
  }
  if (out.empty()) throw ValidationError({"--seeds: no seeds given"});
  return out;
}

std::vector<double> parse_duties(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size()) throw ValidationError({"--duty: cannot parse '" + item + "'"});
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError({"--duty: " + item + " is outside [0, 1]"});
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError({"--duty: no duty cycles given"});
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_run(const fs::path& dir, const Simulator& sim, const RunMetrics& m) {
  fs::create_directories(dir);
  write_text_file((dir / "summary.json").string(), dump(metrics_to_json(m)));
  write_text_file((dir / "deployment.json").string(), dump(deployment_to_json(sim.deployment())));
  std::ostringstream nodes, sinr;
  write_nodes_csv(nodes, m, sim.deployment());
  write_sinr_csv(sinr, m);
  write_text_file((dir / "nodes.csv").string(), nodes.str());
  write_text_file((dir / "sinr_hist.csv").string(), sinr.str());
}

std::string duty_label(double d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duty-cycled LTE-U / WiFi coexistence simulator"};
  app.require_subcommand(1);

  std::string config, out;
  std::optional<std::uint64_t> seed;
  std::string duty_text, seeds_text;

  auto* init = app.add_subcommand("init", "Write a scenario file with default parameters");
  init->add_option("--out", out, "Output path (stdout when omitted)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  validate_cmd->add_option("--config", config, "Scenario JSON")->required();

  auto* run_cmd = app.add_subcommand("run", "Simulate one scenario");
  run_cmd->add_option("--config", config, "Scenario JSON")->required();
  run_cmd->add_option("--seed", seed, "Seed (defaults to the scenario's)");
  run_cmd->add_option("--out", out, "Output directory")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Run every (duty, seed) combination");
  sweep_cmd->add_option("--config", config, "Scenario JSON")->required();
  sweep_cmd->add_option("--duty", duty_text, "Comma-separated on fractions")->required();
  sweep_cmd->add_option("--seeds", seeds_text, "Seeds, e.g. 1..10 or 1,2,3")->required();
  sweep_cmd->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*init) {
      const std::string text = dump(scenario_to_json(Scenario{}));
      if (out.empty())
        std::cout << text;
      else
        write_text_file(out, text);
      return kExitOk;
    }
    if (*validate_cmd) {
      const Scenario s = load(config);
      Simulator probe(s, s.seed);  // also exercises deployment construction
      std::cout << "ok: " << probe.deployment().nodes.size() << " nodes, horizon " << s.horizon_s << " s\n";
      return kExitOk;
    }
    if (*run_cmd) {
      Scenario s = load(config);
      if (seed) s.seed = *seed;
      Simulator sim(s, s.seed);
      const RunMetrics m = sim.run();
      write_run(out, sim, m);
      std::cout << "lte " << per_cell_throughput(m, Tech::Lte) / 1e6 << " Mbps/cell, wifi "
                << per_cell_throughput(m, Tech::Wifi) / 1e6 << " Mbps/cell, duty observed " << m.duty_observed
                << "\n";
      return kExitOk;
    }
    if (*sweep_cmd) {
      const Scenario s = load(config);
      const auto duties = parse_duties(duty_text);
      const auto seeds = parse_seeds(seeds_text);
      const fs::path root(out);
      fs::create_directories(root);
      auto observer = [&](double duty, std::uint64_t sd, const RunMetrics& m) {
        const fs::path dir = root / ("duty_" + duty_label(duty)) / ("seed_" + std::to_string(sd));
        fs::create_directories(dir);
        write_text_file((dir / "summary.json").string(), dump(metrics_to_json(m)));
      };
      const SweepResult r = run_sweep(s, duties, seeds, sweep_threads(), observer);
      std::ostringstream csv;
      write_sweep_csv(csv, r);
      write_text_file((root / "sweep.csv").string(), csv.str());
      for (const auto& mrow : r.means)
        std::cout << "duty " << mrow.duty << ": lte " << mrow.lte_bps / 1e6 << " Mbps, wifi " << mrow.wifi_bps / 1e6
                  << " Mbps (network aggregate, mean of " << seeds.size() << " seeds)\n";
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid scenario:\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
    return kExitValidation;
  } catch (const ConfigError& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
