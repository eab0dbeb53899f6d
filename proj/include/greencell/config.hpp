#ifndef GREENCELL_CONFIG_HPP
#define GREENCELL_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "greencell/evaluate.hpp"

namespace greencell {

inline constexpr const char* kToolVersion = "greencell 0.1.0";

// Raised on malformed files, unknown keys and out-of-range values; the
// message always names the offending key and constraint.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct LoadedConfig {
  ScenarioConfig scenario;
  // run_* keys found in the file (present when the file is a manifest of an
  // earlier run); consumed by the CLI as flag defaults.
  std::map<std::string, std::string> run_keys;
};

// Line-oriented `key = value` text, '#' comments. Missing keys take the
// default scenario's values.
LoadedConfig load_config_file(const std::string& path);
ScenarioConfig load_config(const std::string& path);
LoadedConfig parse_config_text(const std::string& text);

ScenarioConfig default_scenario();

// Fully resolved record of one run: every scenario key plus run_* metadata,
// sufficient to reproduce the output byte for byte. Loadable as a config.
struct RunManifest {
  ScenarioConfig scenario;
  std::string subcommand;
  std::uint64_t seed = 0;
  long long trials = 0;
  std::string out_path;
  // Subcommand-specific settings (grid bounds, targets, detector knobs ...).
  std::vector<std::pair<std::string, std::string>> extras;

  std::string render() const;
  void write(const std::string& path) const;
};

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double value);
// Exactly 17 significant digits, the frozen CSV float format.
std::string format_g17(double value);

}  // namespace greencell

#endif  // GREENCELL_CONFIG_HPP
