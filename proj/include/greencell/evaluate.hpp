#ifndef GREENCELL_EVALUATE_HPP
#define GREENCELL_EVALUATE_HPP

#include <cstdint>
#include <vector>

#include "greencell/linkmodel.hpp"
#include "greencell/schemes.hpp"
#include "greencell/sensing.hpp"

namespace greencell {

// Full evaluation scenario, in configuration units (gains in dB). Deriving
// the LinkBudget converts to the linear domain exactly once; everything
// downstream is linear-only.
struct ScenarioConfig {
  RadioBand cellular_band{2100e6, 5e6};
  RadioBand tv_band{55.25e6, 6e6};
  double rate_bps = 30e6;

  double bs_ut_distance_m = 1000.0;
  double tvs_ut_distance_m = 1000.0;
  double bs_tx_gain_db = 5.0;
  double tvs_tx_gain_db = 5.0;
  double ut_rx_gain_db = 0.0;

  FadingMeans fading;
  double tvs_power_w = 45e3;
  NoiseModel noise{290.0};
  SensingProfile sensing{0.99, 0.01, 0.8};

  std::vector<SchemeKind> schemes{
      SchemeKind::Direct,
      SchemeKind::PureCognition,
      SchemeKind::PureCooperation,
      SchemeKind::JointCognitionCooperation,
  };
  SchemePolicy policy;

  void validate() const;  // throws std::invalid_argument naming the field
};

LinkBudget derive_budget(const ScenarioConfig& scenario);

enum class EstimateMethod { MonteCarlo, Analytic };

struct OutageEstimate {
  double mean = 0.0;
  double stderr_value = 0.0;  // binomial sqrt(p(1-p)/n); 0 for Analytic
  long long trials = 0;
  EstimateMethod method = EstimateMethod::Analytic;
};

// num_sigmas * stderr, replaced by a Wilson-interval half-width when fewer
// than 10 outages were observed (where the normal approximation collapses).
double confidence_halfwidth(const OutageEstimate& estimate, double num_sigmas);

// Bits per Joule, rate / power.
double energy_efficiency(double rate_bps, double total_power_w);

// ---- Exponential-sum outage building blocks ------------------------------
//
// Received branch power is a sum of independent exponentials (one per active
// transmitter). These CDFs evaluated at threshold * noise are the per-plane
// outage probabilities; they are exposed for direct verification.

// Pr(X < y), X exponential with the given mean.
double single_exp_outage(double mean, double y);

// Pr(X1 + X2 < y) for independent exponentials; difference-of-exponentials
// form for distinct means, gamma(2) form for (nearly) equal ones, series for
// the deep-reliability tail.
double exp_sum_outage(double mean1, double mean2, double y);

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
};

// Outage of a one- or two-transmitter branch whose SINR denominator includes
// an exponentially faded interferer:
//   Pr( S < threshold * (noise + interference_scale * W) ),
// W exponential with mean interference_mean_sq. Adaptive Simpson over the
// interference fading to a relative error of 1e-8; throws on
// non-convergence, reporting the attained bound.
QuadratureResult interference_outage(double branch_mean1, double branch_mean2,
                                     double snr_threshold, double noise_w,
                                     double interference_scale_w,
                                     double interference_mean_sq);

// ---- Scheme-level estimates ----------------------------------------------

OutageEstimate outage_mc(SchemeKind scheme, double total_power_w,
                         const ScenarioConfig& scenario, long long trials,
                         std::uint64_t seed, int threads = 1);

OutageEstimate outage_mc(SchemeKind scheme, double total_power_w,
                         const LinkBudget& budget,
                         const SensingProfile& profile, long long trials,
                         std::uint64_t seed, int threads = 1);

// Exact law-of-total-probability evaluation over the four sensing outcomes;
// planes combine by independence (selection decoding).
OutageEstimate outage_analytic(SchemeKind scheme, double total_power_w,
                               const ScenarioConfig& scenario);

struct TradeoffPoint {
  SchemeKind scheme = SchemeKind::Direct;
  double total_power_w = 0.0;
  OutageEstimate mc;
  OutageEstimate analytic;
  double efficiency_bits_per_joule = 0.0;
  bool mc_reliable = true;  // false when analytic P_out < 10 / trials
};

std::vector<double> log_power_grid(double pmin_w, double pmax_w, int points);

// One point per (scheme, power), schemes in scenario order, powers
// ascending. All schemes at a given power share trial randomness, so the
// per-trial monotonicity of outage carries over to the estimates.
std::vector<TradeoffPoint> tradeoff_sweep(const ScenarioConfig& scenario,
                                          const std::vector<double>& power_grid,
                                          long long trials, std::uint64_t seed,
                                          int threads = 1);

// Log-log interpolation of efficiency at the target outage along one
// scheme's analytic curve. Throws std::out_of_range outside the curve's
// outage range; never extrapolates.
double efficiency_at_outage(const std::vector<TradeoffPoint>& scheme_curve,
                            double target_outage);

}  // namespace greencell

#endif  // GREENCELL_EVALUATE_HPP
