#include "greencell/commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greencell {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

double parse_double_strict(const std::string& what, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw std::invalid_argument(what + ": not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// Compact form for the human-readable report; files keep full precision.
std::string brief(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::string(buf);
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_double(values[i]);
  }
  return out;
}

}  // namespace

std::string render_sweep_csv(const std::vector<TradeoffPoint>& rows) {
  std::string csv = std::string(kSweepCsvHeader) + "\n";
  for (const TradeoffPoint& p : rows) {
    csv += scheme_name(p.scheme);
    csv += ",";
    csv += format_g17(p.total_power_w);
    csv += ",";
    csv += format_g17(p.mc.mean);
    csv += ",";
    csv += format_g17(p.mc.stderr_value);
    csv += ",";
    csv += format_g17(p.analytic.mean);
    csv += ",";
    csv += format_g17(p.efficiency_bits_per_joule);
    csv += ",";
    csv += p.mc_reliable ? "1" : "0";
    csv += "\n";
  }
  return csv;
}

std::string cmd_sweep(const SweepRequest& request) {
  if (request.out_path.empty()) {
    throw std::invalid_argument("sweep: --out is required");
  }
  const std::vector<double> grid =
      log_power_grid(request.pmin_w, request.pmax_w, request.points);
  const std::vector<TradeoffPoint> rows = tradeoff_sweep(
      request.scenario, grid, request.trials, request.seed, request.threads);
  const std::string csv = render_sweep_csv(rows);
  write_file(request.out_path, csv);

  RunManifest manifest;
  manifest.scenario = request.scenario;
  manifest.subcommand = "sweep";
  manifest.seed = request.seed;
  manifest.trials = request.trials;
  manifest.out_path = request.out_path;
  manifest.extras = {{"pmin", format_double(request.pmin_w)},
                     {"pmax", format_double(request.pmax_w)},
                     {"points", std::to_string(request.points)}};
  manifest.write(request.out_path + ".manifest");
  return csv;
}

std::string cmd_point(const PointRequest& request, std::ostream& human) {
  const LinkBudget budget = derive_budget(request.scenario);
  const OutageEstimate mc =
      outage_mc(request.scheme, request.power_w, budget,
                request.scenario.sensing, request.trials, request.seed,
                request.threads);
  const OutageEstimate analytic =
      outage_analytic(request.scheme, request.power_w, request.scenario);
  const double efficiency =
      energy_efficiency(request.scenario.rate_bps, request.power_w);
  const bool reliable =
      analytic.mean >= 10.0 / static_cast<double>(request.trials);
  const JointOutcomeTable table =
      joint_outcome_probabilities(request.scenario.sensing);

  TradeoffPoint point;
  point.scheme = request.scheme;
  point.total_power_w = request.power_w;
  point.mc = mc;
  point.analytic = analytic;
  point.efficiency_bits_per_joule = efficiency;
  point.mc_reliable = reliable;
  const std::string csv = render_sweep_csv({point});

  human << "scheme:                       " << scheme_name(request.scheme)
        << "\n";
  human << "total power:                  " << brief(request.power_w)
        << " W\n";
  human << "energy efficiency:            " << brief(efficiency)
        << " bits/Joule\n";
  human << "outage (monte carlo):         " << brief(mc.mean) << " +/- "
        << brief(confidence_halfwidth(mc, 1.959963984540054))
        << " (95% half-width, " << mc.trials << " trials)\n";
  human << "outage (analytic):            " << brief(analytic.mean) << "\n";
  human << "missed-detection probability: " << brief(table.busy_idle) << "\n";
  human << "mc reliable:                  " << (reliable ? "yes" : "no")
        << "\n";

  RunManifest manifest;
  manifest.scenario = request.scenario;
  manifest.subcommand = "point";
  manifest.seed = request.seed;
  manifest.trials = request.trials;
  manifest.out_path = request.out_path;
  manifest.extras = {{"scheme", scheme_name(request.scheme)},
                     {"power", format_double(request.power_w)}};
  if (request.out_path.empty()) {
    human << "\n" << csv;
    human << "\n" << manifest.render();
  } else {
    write_file(request.out_path, csv);
    manifest.write(request.out_path + ".manifest");
  }
  return csv;
}

std::string cmd_compare(const CompareRequest& request) {
  if (request.out_path.empty()) {
    throw std::invalid_argument("compare: --out is required");
  }
  if (request.targets.empty()) {
    throw std::invalid_argument("compare: target list must not be empty");
  }
  for (double t : request.targets) {
    if (!(t > 0.0 && t < 1.0)) {
      throw std::invalid_argument("compare: targets must lie in (0,1)");
    }
  }
  const auto& schemes = request.scenario.schemes;
  if (std::find(schemes.begin(), schemes.end(), SchemeKind::Direct) ==
      schemes.end()) {
    throw std::invalid_argument(
        "compare: the scheme list must include 'direct' as the baseline");
  }

  // The report interpolates analytic curves only; trials and seed are
  // recorded in the manifest but no sampling runs here.
  const std::vector<double> grid =
      log_power_grid(request.pmin_w, request.pmax_w, request.points);
  std::vector<std::vector<TradeoffPoint>> curves;
  for (SchemeKind scheme : schemes) {
    std::vector<TradeoffPoint> curve;
    for (double power : grid) {
      TradeoffPoint p;
      p.scheme = scheme;
      p.total_power_w = power;
      p.analytic = outage_analytic(scheme, power, request.scenario);
      p.efficiency_bits_per_joule =
          energy_efficiency(request.scenario.rate_bps, power);
      curve.push_back(p);
    }
    curves.push_back(std::move(curve));
  }
  const std::size_t direct_index = static_cast<std::size_t>(
      std::find(schemes.begin(), schemes.end(), SchemeKind::Direct) -
      schemes.begin());

  std::string csv = std::string(kCompareCsvHeader) + "\n";
  for (double target : request.targets) {
    std::optional<double> direct_eff;
    try {
      direct_eff = efficiency_at_outage(curves[direct_index], target);
    } catch (const std::out_of_range&) {
    }
    for (std::size_t s = 0; s < schemes.size(); ++s) {
      csv += format_g17(target);
      csv += ",";
      csv += scheme_name(schemes[s]);
      csv += ",";
      std::optional<double> eff;
      try {
        eff = efficiency_at_outage(curves[s], target);
      } catch (const std::out_of_range&) {
      }
      if (eff.has_value()) {
        csv += format_g17(*eff);
        csv += ",";
        if (schemes[s] == SchemeKind::Direct) {
          csv += format_g17(1.0);
        } else if (direct_eff.has_value()) {
          csv += format_g17(*eff / *direct_eff);
        } else {
          csv += "unreachable";
        }
      } else {
        csv += "unreachable,unreachable";
      }
      csv += "\n";
    }
  }
  write_file(request.out_path, csv);

  RunManifest manifest;
  manifest.scenario = request.scenario;
  manifest.subcommand = "compare";
  manifest.seed = request.seed;
  manifest.trials = request.trials;
  manifest.out_path = request.out_path;
  manifest.extras = {{"targets", join_doubles(request.targets)},
                     {"pmin", format_double(request.pmin_w)},
                     {"pmax", format_double(request.pmax_w)},
                     {"points", std::to_string(request.points)}};
  manifest.write(request.out_path + ".manifest");
  return csv;
}

std::string cmd_roc(const RocRequest& request) {
  if (request.out_path.empty()) {
    throw std::invalid_argument("roc: --out is required");
  }
  if (request.thresholds.empty()) {
    throw std::invalid_argument("roc: threshold grid must not be empty");
  }
  if (request.trials > static_cast<long long>(1) << 31) {
    throw std::invalid_argument("roc: trials too large");
  }
  RandomStream rng(request.seed);
  const std::vector<RocPoint> curve =
      roc_curve(request.snr, request.num_samples, request.thresholds,
                static_cast<int>(request.trials), rng);
  std::string csv = std::string(kRocCsvHeader) + "\n";
  for (const RocPoint& p : curve) {
    csv += format_g17(p.threshold);
    csv += ",";
    csv += format_g17(p.p_false_alarm);
    csv += ",";
    csv += format_g17(p.p_detect);
    csv += "\n";
  }
  write_file(request.out_path, csv);

  RunManifest manifest;
  manifest.scenario = default_scenario();
  manifest.subcommand = "roc";
  manifest.seed = request.seed;
  manifest.trials = request.trials;
  manifest.out_path = request.out_path;
  manifest.extras = {{"snr", format_double(request.snr)},
                     {"samples", std::to_string(request.num_samples)},
                     {"thresholds", join_doubles(request.thresholds)}};
  manifest.write(request.out_path + ".manifest");
  return csv;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_value,
                           const std::map<std::string, std::string>& run_keys) {
  if (flag_value.has_value()) return *flag_value;
  const auto it = run_keys.find("run_seed");
  if (it != run_keys.end()) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0' || errno == ERANGE) {
      throw std::invalid_argument("run_seed: not a valid seed: '" +
                                  it->second + "'");
    }
    return v;
  }
  if (const char* env = std::getenv("GREENCELL_SEED")) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || errno == ERANGE) {
      throw std::invalid_argument(
          std::string("GREENCELL_SEED: not a valid seed: '") + env + "'");
    }
    return v;
  }
  return kDefaultSeed;
}

std::vector<double> parse_target_list(const std::string& text) {
  std::vector<double> targets;
  for (const std::string& item : split_list(text, ',')) {
    targets.push_back(parse_double_strict("targets", item));
  }
  if (targets.empty()) {
    throw std::invalid_argument("targets: list must not be empty");
  }
  return targets;
}

std::vector<double> parse_threshold_spec(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split_list(text, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument(
          "thresholds: expected 'lo:hi:count' or a comma list");
    }
    const double lo = parse_double_strict("thresholds", parts[0]);
    const double hi = parse_double_strict("thresholds", parts[1]);
    const long count = std::lround(parse_double_strict("thresholds", parts[2]));
    if (count < 1 || (count > 1 && hi <= lo)) {
      throw std::invalid_argument("thresholds: need count >= 1 and hi > lo");
    }
    for (long i = 0; i < count; ++i) {
      grid.push_back(count == 1
                         ? lo
                         : lo + (hi - lo) * static_cast<double>(i) /
                               static_cast<double>(count - 1));
    }
    return grid;
  }
  for (const std::string& item : split_list(text, ',')) {
    grid.push_back(parse_double_strict("thresholds", item));
  }
  if (grid.empty()) {
    throw std::invalid_argument("thresholds: list must not be empty");
  }
  return grid;
}

}  // namespace greencell
