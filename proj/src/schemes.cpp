#include "greencell/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace greencell {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

double normalized_share(const std::array<double, 4>& shares, int i) {
  double sum = 0.0;
  for (double s : shares) {
    require(s >= 0.0, "SchemePolicy: joint_idle_shares must be >= 0");
    sum += s;
  }
  require(sum > 0.0, "SchemePolicy: joint_idle_shares must not all be 0");
  return shares[i] / sum;
}

}  // namespace

std::string scheme_name(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Direct:
      return "direct";
    case SchemeKind::PureCognition:
      return "pure_cognition";
    case SchemeKind::PureCooperation:
      return "pure_cooperation";
    case SchemeKind::JointCognitionCooperation:
      return "joint";
  }
  throw std::invalid_argument("scheme_name: unknown scheme");
}

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "direct") return SchemeKind::Direct;
  if (name == "pure_cognition") return SchemeKind::PureCognition;
  if (name == "pure_cooperation") return SchemeKind::PureCooperation;
  if (name == "joint") return SchemeKind::JointCognitionCooperation;
  throw std::invalid_argument("unknown scheme name: " + name);
}

PowerAllocation allocate_power(SchemeKind scheme, double total_power_w,
                               ChannelState detected,
                               const SchemePolicy& policy) {
  require(total_power_w > 0.0, "allocate_power: total_power_w must be > 0");
  PowerAllocation alloc;
  alloc.total_power_w = total_power_w;
  switch (scheme) {
    case SchemeKind::Direct:
      alloc.bs_cellular_w = total_power_w;
      break;
    case SchemeKind::PureCooperation:
      alloc.bs_cellular_w = total_power_w / 2.0;
      alloc.tvs_cellular_w = total_power_w / 2.0;
      break;
    case SchemeKind::PureCognition:
      if (detected == ChannelState::Idle) {
        alloc.bs_cellular_w = total_power_w / 2.0;
        alloc.bs_tv_w = total_power_w / 2.0;
      } else if (policy.pure_cognition_busy_full_power) {
        alloc.bs_cellular_w = total_power_w;
      } else {
        alloc.bs_cellular_w = total_power_w / 2.0;
      }
      break;
    case SchemeKind::JointCognitionCooperation:
      if (detected == ChannelState::Idle) {
        alloc.bs_cellular_w =
            total_power_w * normalized_share(policy.joint_idle_shares, 0);
        alloc.tvs_cellular_w =
            total_power_w * normalized_share(policy.joint_idle_shares, 1);
        alloc.bs_tv_w =
            total_power_w * normalized_share(policy.joint_idle_shares, 2);
        alloc.tvs_tv_w =
            total_power_w * normalized_share(policy.joint_idle_shares, 3);
      } else {
        alloc.bs_cellular_w = total_power_w / 2.0;
        alloc.tvs_cellular_w = total_power_w / 2.0;
      }
      break;
  }
  return alloc;
}

TrialRealization sample_trial(const FadingMeans& means,
                              const SensingProfile& profile,
                              RandomStream& rng) {
  TrialRealization trial;
  trial.sensing = sample_outcome(profile, rng);
  trial.bs_cellular = FadingDraw{rng.next_exponential(means.bs_cellular)};
  trial.tvs_cellular = FadingDraw{rng.next_exponential(means.tvs_cellular)};
  trial.bs_tv = FadingDraw{rng.next_exponential(means.bs_tv)};
  trial.tvs_tv = FadingDraw{rng.next_exponential(means.tvs_tv)};
  trial.interference = FadingDraw{rng.next_exponential(means.interference)};
  return trial;
}

double alamouti_effective_snr(double rx_power_1_w, double rx_power_2_w,
                              double denominator_w) {
  require(denominator_w > 0.0,
          "alamouti_effective_snr: denominator must be > 0");
  return (rx_power_1_w + rx_power_2_w) / denominator_w;
}

double branch_sinr(const PowerAllocation& alloc, Plane plane,
                   const TrialRealization& trial, const LinkBudget& budget) {
  if (alloc.plane_total(plane) <= 0.0) {
    throw std::invalid_argument("branch_sinr: plane carries no power");
  }
  if (plane == Plane::Cellular) {
    const double bs_rx =
        alloc.bs_cellular_w * budget.pg_bs_cellular * trial.bs_cellular.gain_sq;
    const double tvs_rx = alloc.tvs_cellular_w * budget.pg_tvs_cellular *
                          trial.tvs_cellular.gain_sq;
    return alamouti_effective_snr(bs_rx, tvs_rx, budget.noise_cellular_w);
  }
  const double bs_rx = alloc.bs_tv_w * budget.pg_bs_tv * trial.bs_tv.gain_sq;
  const double tvs_rx =
      alloc.tvs_tv_w * budget.pg_tvs_tv * trial.tvs_tv.gain_sq;
  double denominator = budget.noise_tv_w;
  if (trial.sensing.missed_detection()) {
    denominator += budget.tvs_power_w * budget.pg_interference *
                   trial.interference.gain_sq;
  }
  return alamouti_effective_snr(bs_rx, tvs_rx, denominator);
}

BranchCapacity plane_capacity(const PowerAllocation& alloc, Plane plane,
                              const TrialRealization& trial,
                              const LinkBudget& budget) {
  if (alloc.plane_total(plane) <= 0.0) {
    return BranchCapacity{plane, 0.0};
  }
  const double bandwidth = plane == Plane::Cellular
                               ? budget.cellular_bandwidth_hz
                               : budget.tv_bandwidth_hz;
  const double sinr = branch_sinr(alloc, plane, trial, budget);
  return BranchCapacity{plane, bandwidth * std::log2(1.0 + sinr)};
}

bool trial_outage(SchemeKind scheme, double total_power_w,
                  const TrialRealization& trial, const LinkBudget& budget) {
  const PowerAllocation alloc =
      allocate_power(scheme, total_power_w, trial.sensing.detected,
                     budget.policy);
  // Compare SINR against the precomputed 2^(R/B) - 1 thresholds; equivalent
  // to bandwidth * log2(1 + sinr) < rate but cheaper in the hot loop.
  const bool cellular_fails =
      branch_sinr(alloc, Plane::Cellular, trial, budget) <
      budget.snr_threshold_cellular;
  if (!cellular_fails) return false;
  if (alloc.plane_total(Plane::Tv) <= 0.0) return true;
  const bool tv_fails = branch_sinr(alloc, Plane::Tv, trial, budget) <
                        budget.snr_threshold_tv;
  return tv_fails;
}

}  // namespace greencell
