#ifndef GREENCELL_SCHEMES_HPP
#define GREENCELL_SCHEMES_HPP

#include <array>
#include <string>

#include "greencell/linkmodel.hpp"
#include "greencell/random.hpp"
#include "greencell/sensing.hpp"

namespace greencell {

enum class SchemeKind {
  Direct,
  PureCognition,
  PureCooperation,
  JointCognitionCooperation,
};

enum class Plane { Cellular, Tv };

std::string scheme_name(SchemeKind scheme);
SchemeKind scheme_from_name(const std::string& name);

// Knobs the downlink schemes leave open: how the joint scheme splits power
// across its four branches when the TV channel is sensed idle, and whether
// pure cognition falls back to full power on the cellular band when it is
// sensed busy.
struct SchemePolicy {
  // Order: BS/cellular, TVS/cellular, BS/TV, TVS/TV. Normalized on use.
  std::array<double, 4> joint_idle_shares{0.25, 0.25, 0.25, 0.25};
  bool pure_cognition_busy_full_power = true;
};

// Transmit power per (transmitter, plane) branch; inactive branches are 0
// and the active ones sum to total_power_w.
struct PowerAllocation {
  double total_power_w = 0.0;
  double bs_cellular_w = 0.0;
  double tvs_cellular_w = 0.0;
  double bs_tv_w = 0.0;
  double tvs_tv_w = 0.0;

  double plane_total(Plane plane) const {
    return plane == Plane::Cellular ? bs_cellular_w + tvs_cellular_w
                                    : bs_tv_w + tvs_tv_w;
  }
  double branch_sum() const {
    return bs_cellular_w + tvs_cellular_w + bs_tv_w + tvs_tv_w;
  }
};

PowerAllocation allocate_power(SchemeKind scheme, double total_power_w,
                               ChannelState detected,
                               const SchemePolicy& policy = {});

// Mean |h|^2 per physical link, per frequency plane (block fading draws are
// mutually independent across all five).
struct FadingMeans {
  double bs_cellular = 1.0;
  double tvs_cellular = 1.0;
  double bs_tv = 1.0;
  double tvs_tv = 1.0;
  double interference = 1.0;
};

// Scenario constants needed per trial, precomputed once: path gains of the
// cooperative links on each plane, the TVS broadcast interference path at
// the TV carrier, per-plane noise and the SNR decoding thresholds
// 2^(R/B) - 1.
struct LinkBudget {
  double pg_bs_cellular = 0.0;
  double pg_tvs_cellular = 0.0;
  double pg_bs_tv = 0.0;
  double pg_tvs_tv = 0.0;
  double pg_interference = 0.0;
  double noise_cellular_w = 0.0;
  double noise_tv_w = 0.0;
  double cellular_bandwidth_hz = 0.0;
  double tv_bandwidth_hz = 0.0;
  double rate_bps = 0.0;
  double snr_threshold_cellular = 0.0;
  double snr_threshold_tv = 0.0;
  double tvs_power_w = 0.0;
  FadingMeans fading;
  SchemePolicy policy;
};

// Everything random about one transmission attempt.
struct TrialRealization {
  SensingRealization sensing;
  FadingDraw bs_cellular{0.0};
  FadingDraw tvs_cellular{0.0};
  FadingDraw bs_tv{0.0};
  FadingDraw tvs_tv{0.0};
  FadingDraw interference{0.0};
};

// Fixed draw order: sensing (two uniforms), then the five fading draws in
// declaration order. Every trial consumes the same stream budget no matter
// which scheme later consumes it.
TrialRealization sample_trial(const FadingMeans& means,
                              const SensingProfile& profile, RandomStream& rng);

// Post-combining SNR of a two-transmitter orthogonal block: received powers
// add. Degenerates to the single-link SNR when one power is zero.
double alamouti_effective_snr(double rx_power_1_w, double rx_power_2_w,
                              double denominator_w);

// SINR of one frequency plane of the allocation. The TV plane sees the TVS
// broadcast as interference exactly when the trial is a missed detection.
// Throws if the queried plane carries no power.
double branch_sinr(const PowerAllocation& alloc, Plane plane,
                   const TrialRealization& trial, const LinkBudget& budget);

struct BranchCapacity {
  Plane plane;
  double capacity_bps;  // 0 when the plane is inactive
};

BranchCapacity plane_capacity(const PowerAllocation& alloc, Plane plane,
                              const TrialRealization& trial,
                              const LinkBudget& budget);

// Outage of one trial: the cellular plane alone must carry the rate unless
// the scheme repeated the transmission on a sensed-idle TV channel, in which
// case either plane decoding alone suffices.
bool trial_outage(SchemeKind scheme, double total_power_w,
                  const TrialRealization& trial, const LinkBudget& budget);

}  // namespace greencell

#endif  // GREENCELL_SCHEMES_HPP
