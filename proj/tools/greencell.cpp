// greencell: energy-efficiency vs outage evaluation of cellular downlink
// schemes that opportunistically reuse a TV band.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "greencell/commands.hpp"
#include "greencell/config.hpp"

namespace {

using greencell::LoadedConfig;

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long long> trials;
  std::string out_path;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path,
                  "scenario config or run manifest (key = value lines)");
  cmd->add_option("--seed", args.seed, "base seed for all randomness");
  cmd->add_option("--trials", args.trials, "Monte Carlo trials per point");
  cmd->add_option("--out", args.out_path, "output CSV path");
  cmd->add_option("--threads", args.threads, "worker threads (result-neutral)")
      ->check(CLI::PositiveNumber);
}

LoadedConfig load(const CommonArgs& args) {
  if (args.config_path.empty()) {
    return LoadedConfig{greencell::default_scenario(), {}};
  }
  return greencell::load_config_file(args.config_path);
}

// Flag wins, then the manifest's run_* value, then the fallback.
template <typename T, typename Parse>
T resolve(const std::optional<T>& flag_value,
          const std::map<std::string, std::string>& run_keys,
          const std::string& key, T fallback, Parse parse) {
  if (flag_value.has_value()) return *flag_value;
  const auto it = run_keys.find(key);
  if (it == run_keys.end()) return fallback;
  return parse(it->second);
}

double parse_run_double(const std::string& text) {
  return std::stod(text);
}

long long parse_run_ll(const std::string& text) { return std::stoll(text); }

int parse_run_int(const std::string& text) { return std::stoi(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte Carlo and closed-form evaluation of the energy-efficiency vs "
      "outage tradeoff of direct, pure-cognition, pure-cooperation and joint "
      "cognition+cooperation downlink transmission"};
  app.set_version_flag("--version", std::string(greencell::kToolVersion));
  app.require_subcommand(1);

  CommonArgs sweep_args, point_args, compare_args, roc_args;

  auto* sweep = app.add_subcommand(
      "sweep", "tradeoff curves over a power grid (CSV per scheme, power)");
  add_common(sweep, sweep_args);
  std::optional<double> sweep_pmin, sweep_pmax;
  std::optional<int> sweep_points;
  sweep->add_option("--pmin", sweep_pmin, "lowest total power, W");
  sweep->add_option("--pmax", sweep_pmax, "highest total power, W");
  sweep->add_option("--points", sweep_points, "grid size (log-spaced)");

  auto* point = app.add_subcommand(
      "point", "one (scheme, power) cell, human-readable plus CSV");
  add_common(point, point_args);
  std::optional<std::string> point_scheme;
  std::optional<double> point_power;
  point->add_option("--scheme", point_scheme,
                    "direct | pure_cognition | pure_cooperation | joint");
  point->add_option("--power", point_power, "total transmit power, W");

  auto* compare = app.add_subcommand(
      "compare", "efficiency per scheme at matched outage targets");
  add_common(compare, compare_args);
  std::optional<std::string> compare_targets;
  std::optional<double> compare_pmin, compare_pmax;
  std::optional<int> compare_points;
  compare->add_option("--targets", compare_targets,
                      "comma list of outage targets in (0,1)");
  compare->add_option("--pmin", compare_pmin, "curve grid lowest power, W");
  compare->add_option("--pmax", compare_pmax, "curve grid highest power, W");
  compare->add_option("--points", compare_points, "curve grid size");

  auto* roc = app.add_subcommand(
      "roc", "empirical energy-detector operating characteristic");
  add_common(roc, roc_args);
  std::optional<double> roc_snr;
  std::optional<int> roc_samples;
  std::optional<std::string> roc_thresholds;
  roc->add_option("--snr", roc_snr, "per-sample SNR, linear");
  roc->add_option("--samples", roc_samples, "accumulated samples per decision");
  roc->add_option("--thresholds", roc_thresholds,
                  "'lo:hi:count' or comma list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      const LoadedConfig loaded = load(sweep_args);
      greencell::SweepRequest request;
      request.scenario = loaded.scenario;
      request.config_path = sweep_args.config_path;
      request.seed = greencell::resolve_seed(sweep_args.seed, loaded.run_keys);
      request.trials = resolve(sweep_args.trials, loaded.run_keys,
                               "run_trials", request.trials, parse_run_ll);
      request.pmin_w = resolve(sweep_pmin, loaded.run_keys, "run_pmin",
                               request.pmin_w, parse_run_double);
      request.pmax_w = resolve(sweep_pmax, loaded.run_keys, "run_pmax",
                               request.pmax_w, parse_run_double);
      request.points = resolve(sweep_points, loaded.run_keys, "run_points",
                               request.points, parse_run_int);
      request.threads = sweep_args.threads;
      request.out_path = !sweep_args.out_path.empty()
                             ? sweep_args.out_path
                             : loaded.run_keys.count("run_out")
                                   ? loaded.run_keys.at("run_out")
                                   : "";
      greencell::cmd_sweep(request);
    } else if (point->parsed()) {
      const LoadedConfig loaded = load(point_args);
      greencell::PointRequest request;
      request.scenario = loaded.scenario;
      request.seed = greencell::resolve_seed(point_args.seed, loaded.run_keys);
      request.trials = resolve(point_args.trials, loaded.run_keys,
                               "run_trials", request.trials, parse_run_ll);
      const std::string scheme =
          resolve(point_scheme, loaded.run_keys, "run_scheme",
                  std::string("direct"), [](const std::string& s) { return s; });
      request.scheme = greencell::scheme_from_name(scheme);
      request.power_w = resolve(point_power, loaded.run_keys, "run_power",
                                request.power_w, parse_run_double);
      request.threads = point_args.threads;
      request.out_path = point_args.out_path;
      greencell::cmd_point(request, std::cout);
    } else if (compare->parsed()) {
      const LoadedConfig loaded = load(compare_args);
      greencell::CompareRequest request;
      request.scenario = loaded.scenario;
      request.seed =
          greencell::resolve_seed(compare_args.seed, loaded.run_keys);
      request.trials = resolve(compare_args.trials, loaded.run_keys,
                               "run_trials", request.trials, parse_run_ll);
      const std::string targets = resolve(
          compare_targets, loaded.run_keys, "run_targets",
          std::string("0.001,0.01,0.1"), [](const std::string& s) { return s; });
      request.targets = greencell::parse_target_list(targets);
      request.pmin_w = resolve(compare_pmin, loaded.run_keys, "run_pmin",
                               request.pmin_w, parse_run_double);
      request.pmax_w = resolve(compare_pmax, loaded.run_keys, "run_pmax",
                               request.pmax_w, parse_run_double);
      request.points = resolve(compare_points, loaded.run_keys, "run_points",
                               request.points, parse_run_int);
      request.out_path = !compare_args.out_path.empty()
                             ? compare_args.out_path
                             : loaded.run_keys.count("run_out")
                                   ? loaded.run_keys.at("run_out")
                                   : "";
      greencell::cmd_compare(request);
    } else if (roc->parsed()) {
      const LoadedConfig loaded = load(roc_args);
      greencell::RocRequest request;
      request.seed = greencell::resolve_seed(roc_args.seed, loaded.run_keys);
      request.trials = resolve(roc_args.trials, loaded.run_keys, "run_trials",
                               request.trials, parse_run_ll);
      request.snr = resolve(roc_snr, loaded.run_keys, "run_snr", request.snr,
                            parse_run_double);
      request.num_samples = resolve(roc_samples, loaded.run_keys,
                                    "run_samples", request.num_samples,
                                    parse_run_int);
      const std::string thresholds = resolve(
          roc_thresholds, loaded.run_keys, "run_thresholds",
          std::string("0:80:41"), [](const std::string& s) { return s; });
      request.thresholds = greencell::parse_threshold_spec(thresholds);
      request.out_path = !roc_args.out_path.empty()
                             ? roc_args.out_path
                             : loaded.run_keys.count("run_out")
                                   ? loaded.run_keys.at("run_out")
                                   : "";
      greencell::cmd_roc(request);
    }
  } catch (const std::exception& e) {
    std::cerr << "greencell: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
