#include "greencell/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace greencell {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ConfigError(key + ": not a finite number: '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

void check(bool ok, const std::string& key, const std::string& constraint) {
  if (!ok) throw ConfigError(key + " " + constraint);
}

double positive(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  check(v > 0.0, key, "must be > 0");
  return v;
}

double probability(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  check(v >= 0.0 && v <= 1.0, key, "must lie in [0,1]");
  return v;
}

// Raw key/value pairs plus helpers that validate on access.
struct KeyValues {
  std::map<std::string, std::string> pairs;

  bool take(const std::string& key, std::string& out) {
    const auto it = pairs.find(key);
    if (it == pairs.end()) return false;
    out = it->second;
    pairs.erase(it);
    return true;
  }
};

KeyValues parse_pairs(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (kv.pairs.count(key)) {
      throw ConfigError(key + " set more than once");
    }
    kv.pairs[key] = value;
  }
  return kv;
}

}  // namespace

ScenarioConfig default_scenario() { return ScenarioConfig{}; }

LoadedConfig parse_config_text(const std::string& text) {
  KeyValues kv = parse_pairs(text);
  LoadedConfig loaded;
  ScenarioConfig& sc = loaded.scenario;
  std::string v;

  double cellular_carrier = sc.cellular_band.carrier_hz;
  double cellular_bandwidth = sc.cellular_band.bandwidth_hz;
  double tv_carrier = sc.tv_band.carrier_hz;
  double tv_bandwidth = sc.tv_band.bandwidth_hz;
  if (kv.take("cellular_carrier_hz", v)) cellular_carrier = positive("cellular_carrier_hz", v);
  if (kv.take("cellular_bandwidth_hz", v)) cellular_bandwidth = positive("cellular_bandwidth_hz", v);
  if (kv.take("tv_carrier_hz", v)) tv_carrier = positive("tv_carrier_hz", v);
  if (kv.take("tv_bandwidth_hz", v)) tv_bandwidth = positive("tv_bandwidth_hz", v);
  sc.cellular_band = RadioBand(cellular_carrier, cellular_bandwidth);
  sc.tv_band = RadioBand(tv_carrier, tv_bandwidth);

  if (kv.take("rate_bps", v)) {
    const double r = parse_double("rate_bps", v);
    check(r > 0.0, "rate_bps", "must be > 0");
    sc.rate_bps = r;
  }
  if (kv.take("bs_ut_distance_m", v)) sc.bs_ut_distance_m = positive("bs_ut_distance_m", v);
  if (kv.take("tvs_ut_distance_m", v)) sc.tvs_ut_distance_m = positive("tvs_ut_distance_m", v);

  if (kv.take("bs_tx_gain_db", v)) {
    sc.bs_tx_gain_db = parse_double("bs_tx_gain_db", v);
    // The TVS transmit gain follows the BS gain unless set explicitly.
    sc.tvs_tx_gain_db = sc.bs_tx_gain_db;
  }
  if (kv.take("tvs_tx_gain_db", v)) {
    sc.tvs_tx_gain_db = parse_double("tvs_tx_gain_db", v);
  }
  if (kv.take("ut_rx_gain_db", v)) {
    sc.ut_rx_gain_db = parse_double("ut_rx_gain_db", v);
  }

  if (kv.take("bs_ut_fading_msq_cellular", v)) sc.fading.bs_cellular = positive("bs_ut_fading_msq_cellular", v);
  if (kv.take("bs_ut_fading_msq_tv", v)) sc.fading.bs_tv = positive("bs_ut_fading_msq_tv", v);
  if (kv.take("tvs_ut_fading_msq_cellular", v)) sc.fading.tvs_cellular = positive("tvs_ut_fading_msq_cellular", v);
  if (kv.take("tvs_ut_fading_msq_tv", v)) sc.fading.tvs_tv = positive("tvs_ut_fading_msq_tv", v);
  if (kv.take("tvs_broadcast_fading_msq", v)) sc.fading.interference = positive("tvs_broadcast_fading_msq", v);

  if (kv.take("tvs_power_w", v)) {
    const double p = parse_double("tvs_power_w", v);
    check(p >= 0.0, "tvs_power_w", "must be >= 0");
    sc.tvs_power_w = p;
  }
  if (kv.take("temperature_k", v)) sc.noise = NoiseModel(positive("temperature_k", v));

  double p_detect = sc.sensing.p_detect;
  double p_false_alarm = sc.sensing.p_false_alarm;
  double p_available = sc.sensing.p_available;
  if (kv.take("p_detect", v)) p_detect = probability("p_detect", v);
  if (kv.take("p_false_alarm", v)) p_false_alarm = probability("p_false_alarm", v);
  if (kv.take("p_available", v)) p_available = probability("p_available", v);
  sc.sensing = SensingProfile(p_detect, p_false_alarm, p_available);

  if (kv.take("schemes", v)) {
    sc.schemes.clear();
    for (const std::string& name : split(v, ',')) {
      if (name.empty()) throw ConfigError("schemes: empty entry in list");
      const SchemeKind kind = scheme_from_name(name);
      if (std::find(sc.schemes.begin(), sc.schemes.end(), kind) !=
          sc.schemes.end()) {
        throw ConfigError("schemes: '" + name + "' listed more than once");
      }
      sc.schemes.push_back(kind);
    }
    check(!sc.schemes.empty(), "schemes", "must list at least one scheme");
  }

  if (kv.take("joint_idle_shares", v)) {
    const std::vector<std::string> parts = split(v, ',');
    check(parts.size() == 4, "joint_idle_shares",
          "must list exactly 4 shares (BS/cellular, TVS/cellular, BS/TV, TVS/TV)");
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double s = parse_double("joint_idle_shares", parts[i]);
      check(s >= 0.0, "joint_idle_shares", "entries must be >= 0");
      sc.policy.joint_idle_shares[static_cast<std::size_t>(i)] = s;
      sum += s;
    }
    check(sum > 0.0, "joint_idle_shares", "must not sum to 0");
  }
  if (kv.take("pure_cognition_busy_full_power", v)) {
    sc.policy.pure_cognition_busy_full_power =
        parse_bool("pure_cognition_busy_full_power", v);
  }

  // run_* keys are manifest metadata, passed through to the caller.
  for (auto it = kv.pairs.begin(); it != kv.pairs.end();) {
    if (it->first.rfind("run_", 0) == 0) {
      loaded.run_keys[it->first] = it->second;
      it = kv.pairs.erase(it);
    } else {
      ++it;
    }
  }
  if (!kv.pairs.empty()) {
    throw ConfigError("unknown key: '" + kv.pairs.begin()->first + "'");
  }
  loaded.scenario.validate();
  return loaded;
}

LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

ScenarioConfig load_config(const std::string& path) {
  return load_config_file(path).scenario;
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf);
}

std::string RunManifest::render() const {
  const ScenarioConfig& sc = scenario;
  std::ostringstream out;
  out << "# greencell run manifest; loadable as --config to reproduce the run\n";
  out << "cellular_carrier_hz = " << format_double(sc.cellular_band.carrier_hz) << "\n";
  out << "cellular_bandwidth_hz = " << format_double(sc.cellular_band.bandwidth_hz) << "\n";
  out << "tv_carrier_hz = " << format_double(sc.tv_band.carrier_hz) << "\n";
  out << "tv_bandwidth_hz = " << format_double(sc.tv_band.bandwidth_hz) << "\n";
  out << "rate_bps = " << format_double(sc.rate_bps) << "\n";
  out << "bs_ut_distance_m = " << format_double(sc.bs_ut_distance_m) << "\n";
  out << "tvs_ut_distance_m = " << format_double(sc.tvs_ut_distance_m) << "\n";
  out << "bs_tx_gain_db = " << format_double(sc.bs_tx_gain_db) << "\n";
  out << "tvs_tx_gain_db = " << format_double(sc.tvs_tx_gain_db) << "\n";
  out << "ut_rx_gain_db = " << format_double(sc.ut_rx_gain_db) << "\n";
  out << "bs_ut_fading_msq_cellular = " << format_double(sc.fading.bs_cellular) << "\n";
  out << "bs_ut_fading_msq_tv = " << format_double(sc.fading.bs_tv) << "\n";
  out << "tvs_ut_fading_msq_cellular = " << format_double(sc.fading.tvs_cellular) << "\n";
  out << "tvs_ut_fading_msq_tv = " << format_double(sc.fading.tvs_tv) << "\n";
  out << "tvs_broadcast_fading_msq = " << format_double(sc.fading.interference) << "\n";
  out << "tvs_power_w = " << format_double(sc.tvs_power_w) << "\n";
  out << "temperature_k = " << format_double(sc.noise.temperature_k) << "\n";
  out << "p_detect = " << format_double(sc.sensing.p_detect) << "\n";
  out << "p_false_alarm = " << format_double(sc.sensing.p_false_alarm) << "\n";
  out << "p_available = " << format_double(sc.sensing.p_available) << "\n";
  out << "schemes = ";
  for (std::size_t i = 0; i < sc.schemes.size(); ++i) {
    if (i) out << ",";
    out << scheme_name(sc.schemes[i]);
  }
  out << "\n";
  out << "joint_idle_shares = ";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out << ",";
    out << format_double(sc.policy.joint_idle_shares[i]);
  }
  out << "\n";
  out << "pure_cognition_busy_full_power = "
      << (sc.policy.pure_cognition_busy_full_power ? "true" : "false") << "\n";
  out << "run_tool_version = " << kToolVersion << "\n";
  out << "run_subcommand = " << subcommand << "\n";
  out << "run_seed = " << seed << "\n";
  out << "run_trials = " << trials << "\n";
  for (const auto& [key, value] : extras) {
    out << "run_" << key << " = " << value << "\n";
  }
  if (!out_path.empty()) {
    out << "run_out = " << out_path << "\n";
  }
  return out.str();
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << render();
  if (!out) throw std::runtime_error("failed writing manifest: " + path);
}

}  // namespace greencell
