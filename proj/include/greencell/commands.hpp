#ifndef GREENCELL_COMMANDS_HPP
#define GREENCELL_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greencell/config.hpp"
#include "greencell/evaluate.hpp"

namespace greencell {

// Frozen CSV headers (golden-file tested).
inline constexpr const char* kSweepCsvHeader =
    "scheme,power_w,outage_mc,outage_stderr,outage_analytic,"
    "efficiency_bits_per_joule,mc_reliable";
inline constexpr const char* kCompareCsvHeader =
    "target_outage,scheme,efficiency_bits_per_joule,gain_vs_direct";
inline constexpr const char* kRocCsvHeader = "threshold,p_false_alarm,p_detect";

struct SweepRequest {
  ScenarioConfig scenario;
  std::string config_path;  // informational only
  double pmin_w = 0.01;
  double pmax_w = 10.0;
  int points = 21;
  long long trials = 100000;
  std::uint64_t seed = 12345;
  int threads = 1;
  std::string out_path;
};

struct PointRequest {
  ScenarioConfig scenario;
  SchemeKind scheme = SchemeKind::Direct;
  double power_w = 1.0;
  long long trials = 100000;
  std::uint64_t seed = 12345;
  int threads = 1;
  std::string out_path;  // empty: CSV and manifest go to the human stream
};

// The comparison grid reaches further down in power than the sweep default
// so that high outage targets stay inside every scheme's analytic curve.
struct CompareRequest {
  ScenarioConfig scenario;
  std::vector<double> targets{1e-3, 1e-2, 1e-1};
  double pmin_w = 1e-3;
  double pmax_w = 10.0;
  int points = 31;
  long long trials = 100000;  // recorded; comparison itself is analytic
  std::uint64_t seed = 12345;
  std::string out_path;
};

struct RocRequest {
  double snr = 1.0;
  int num_samples = 20;
  std::vector<double> thresholds;
  long long trials = 100000;
  std::uint64_t seed = 12345;
  std::string out_path;
};

// Each command writes its CSV (plus `<out>.manifest`) and returns the CSV
// text it wrote. Throws on any rejection.
std::string cmd_sweep(const SweepRequest& request);
std::string cmd_point(const PointRequest& request, std::ostream& human);
std::string cmd_compare(const CompareRequest& request);
std::string cmd_roc(const RocRequest& request);

std::string render_sweep_csv(const std::vector<TradeoffPoint>& rows);

// Seed precedence: explicit flag, then a manifest's run_seed, then the
// GREENCELL_SEED environment variable, then the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_value,
                           const std::map<std::string, std::string>& run_keys);

std::vector<double> parse_target_list(const std::string& text);
// "lo:hi:count" for an even grid, or a comma-separated list.
std::vector<double> parse_threshold_spec(const std::string& text);

inline constexpr std::uint64_t kDefaultSeed = 12345;

}  // namespace greencell

#endif  // GREENCELL_COMMANDS_HPP
