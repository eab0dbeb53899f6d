#include "greencell/sensing.hpp"

#include <cmath>
#include <stdexcept>

namespace greencell {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

struct TrialStatistics {
  std::vector<double> noise_only;
  std::vector<double> signal_plus_noise;
};

TrialStatistics accumulate_statistics(double snr, int num_samples, int trials,
                                      RandomStream& rng) {
  require(snr >= 0.0, "energy detector: snr must be >= 0");
  require(num_samples >= 1, "energy detector: num_samples must be >= 1");
  require(trials >= 1, "energy detector: trials must be >= 1");
  const double amplitude = std::sqrt(snr);
  TrialStatistics stats;
  stats.noise_only.reserve(trials);
  stats.signal_plus_noise.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    double h0 = 0.0;
    for (int k = 0; k < num_samples; ++k) {
      const double g = rng.next_gaussian();
      h0 += g * g;
    }
    double h1 = 0.0;
    for (int k = 0; k < num_samples; ++k) {
      const double g = amplitude + rng.next_gaussian();
      h1 += g * g;
    }
    stats.noise_only.push_back(h0);
    stats.signal_plus_noise.push_back(h1);
  }
  return stats;
}

double exceedance_rate(const std::vector<double>& statistics,
                       double threshold) {
  long count = 0;
  for (double s : statistics) {
    if (DetectorSample{s, threshold}.exceeds()) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(statistics.size());
}

}  // namespace

SensingProfile::SensingProfile(double detect, double false_alarm,
                               double available)
    : p_detect(detect), p_false_alarm(false_alarm), p_available(available) {
  require(is_probability(p_detect), "SensingProfile: p_detect must lie in [0,1]");
  require(is_probability(p_false_alarm),
          "SensingProfile: p_false_alarm must lie in [0,1]");
  require(is_probability(p_available),
          "SensingProfile: p_available must lie in [0,1]");
}

JointOutcomeTable joint_outcome_probabilities(const SensingProfile& profile) {
  const double pa = profile.p_available;
  const double pd = profile.p_detect;
  const double pf = profile.p_false_alarm;
  return JointOutcomeTable{pa * (1.0 - pf), pa * pf, (1.0 - pa) * (1.0 - pd),
                           (1.0 - pa) * pd};
}

SensingRealization sample_outcome(const SensingProfile& profile,
                                  RandomStream& rng) {
  SensingRealization out{};
  out.actual = rng.next_uniform() < profile.p_available ? ChannelState::Idle
                                                        : ChannelState::Busy;
  const double u = rng.next_uniform();
  if (out.actual == ChannelState::Idle) {
    out.detected =
        u < profile.p_false_alarm ? ChannelState::Busy : ChannelState::Idle;
  } else {
    out.detected =
        u < profile.p_detect ? ChannelState::Busy : ChannelState::Idle;
  }
  return out;
}

DetectionRates energy_detect(double snr, int num_samples, double threshold,
                             int trials, RandomStream& rng) {
  require(threshold >= 0.0, "energy_detect: threshold must be >= 0");
  const TrialStatistics stats =
      accumulate_statistics(snr, num_samples, trials, rng);
  return DetectionRates{exceedance_rate(stats.signal_plus_noise, threshold),
                        exceedance_rate(stats.noise_only, threshold)};
}

std::vector<RocPoint> roc_curve(double snr, int num_samples,
                                const std::vector<double>& thresholds,
                                int trials, RandomStream& rng) {
  require(!thresholds.empty(), "roc_curve: threshold grid must be non-empty");
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    require(thresholds[i] > thresholds[i - 1],
            "roc_curve: threshold grid must be strictly increasing");
  }
  const TrialStatistics stats =
      accumulate_statistics(snr, num_samples, trials, rng);
  std::vector<RocPoint> curve;
  curve.reserve(thresholds.size());
  for (double th : thresholds) {
    curve.push_back(RocPoint{th, exceedance_rate(stats.noise_only, th),
                             exceedance_rate(stats.signal_plus_noise, th)});
  }
  return curve;
}

}  // namespace greencell
