#ifndef GREENCELL_SENSING_HPP
#define GREENCELL_SENSING_HPP

#include <vector>

#include "greencell/random.hpp"

namespace greencell {

// TV-channel occupancy, both the true state and the sensed verdict.
enum class ChannelState { Idle, Busy };

// Sensing quality as consumed by the outage pipeline: detection and
// false-alarm probabilities plus the prior availability of the channel.
struct SensingProfile {
  double p_detect;
  double p_false_alarm;
  double p_available;

  SensingProfile(double detect, double false_alarm, double available);
};

// Joint distribution over (actual, detected) occupancy.
struct JointOutcomeTable {
  double idle_idle;  // channel free, sensed free
  double idle_busy;  // channel free, false alarm
  double busy_idle;  // channel occupied, missed detection
  double busy_busy;  // channel occupied, sensed occupied

  double detected_idle() const { return idle_idle + busy_idle; }
  double sum() const { return idle_idle + idle_busy + busy_idle + busy_busy; }
};

// One sensing event per transmission attempt, shared network-wide.
struct SensingRealization {
  ChannelState actual;
  ChannelState detected;

  bool missed_detection() const {
    return actual == ChannelState::Busy && detected == ChannelState::Idle;
  }
};

JointOutcomeTable joint_outcome_probabilities(const SensingProfile& profile);

// Draw order: one uniform for the actual state, one for the verdict.
SensingRealization sample_outcome(const SensingProfile& profile,
                                  RandomStream& rng);

// ---- Empirical energy detector ------------------------------------------
//
// Standalone grounding tool for the (p_detect, p_false_alarm) figures the
// pipeline takes as configuration; not wired into the outage path. Noise is
// unit-variance real Gaussian, the signal a constant amplitude sqrt(snr),
// and the statistic the accumulated energy of num_samples observations.

struct DetectorSample {
  double statistic;
  double threshold;

  bool exceeds() const { return statistic > threshold; }
};

struct DetectionRates {
  double p_detect;
  double p_false_alarm;
};

struct RocPoint {
  double threshold;
  double p_false_alarm;
  double p_detect;
};

// Empirical exceedance frequencies at one threshold. Per trial the stream is
// consumed as num_samples noise-only Gaussians then num_samples
// signal-plus-noise Gaussians.
DetectionRates energy_detect(double snr, int num_samples, double threshold,
                             int trials, RandomStream& rng);

// Sweeps a strictly increasing threshold grid over one shared set of trial
// statistics, so both rate columns are exactly non-increasing.
std::vector<RocPoint> roc_curve(double snr, int num_samples,
                                const std::vector<double>& thresholds,
                                int trials, RandomStream& rng);

}  // namespace greencell

#endif  // GREENCELL_SENSING_HPP
