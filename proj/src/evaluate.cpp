#include "greencell/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace greencell {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// ---- Adaptive Simpson -----------------------------------------------------

struct IntegralAccumulator {
  double value = 0.0;
  double error = 0.0;
};

template <typename F>
void simpson_recurse(const F& f, double a, double fa, double b, double fb,
                     double fm, double whole, double abs_tol, int depth,
                     IntegralAccumulator& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol) {
    acc.value += left + right + delta / 15.0;
    acc.error += std::abs(delta) / 15.0;
    return;
  }
  simpson_recurse(f, a, fa, m, fm, flm, left, 0.5 * abs_tol, depth - 1, acc);
  simpson_recurse(f, m, fm, b, fb, frm, right, 0.5 * abs_tol, depth - 1, acc);
}

template <typename F>
IntegralAccumulator adaptive_simpson(const F& f, double a, double b,
                                     double abs_tol) {
  IntegralAccumulator acc;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  simpson_recurse(f, a, fa, b, fb, fm, whole, abs_tol, 56, acc);
  return acc;
}

// ---- Branch outage helpers ------------------------------------------------

double branch_outage(double mean1, double mean2, double y) {
  const bool active1 = mean1 > 0.0;
  const bool active2 = mean2 > 0.0;
  if (active1 && active2) return exp_sum_outage(mean1, mean2, y);
  if (active1) return single_exp_outage(mean1, y);
  if (active2) return single_exp_outage(mean2, y);
  return y > 0.0 ? 1.0 : 0.0;
}

struct OutcomeTerm {
  double weight = 0.0;
  ChannelState detected = ChannelState::Busy;
  bool missed_detection = false;
};

}  // namespace

// ---- Scenario -------------------------------------------------------------

void ScenarioConfig::validate() const {
  require(rate_bps > 0.0, "rate_bps must be > 0");
  require(bs_ut_distance_m > 0.0, "bs_ut_distance_m must be > 0");
  require(tvs_ut_distance_m > 0.0, "tvs_ut_distance_m must be > 0");
  require(std::isfinite(bs_tx_gain_db) && std::isfinite(tvs_tx_gain_db) &&
              std::isfinite(ut_rx_gain_db),
          "antenna gains must be finite");
  require(fading.bs_cellular > 0.0 && fading.tvs_cellular > 0.0 &&
              fading.bs_tv > 0.0 && fading.tvs_tv > 0.0 &&
              fading.interference > 0.0,
          "fading mean squares must be > 0");
  require(tvs_power_w >= 0.0, "tvs_power_w must be >= 0");
  require(!schemes.empty(), "schemes must not be empty");
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    for (std::size_t j = i + 1; j < schemes.size(); ++j) {
      require(schemes[i] != schemes[j], "schemes must not repeat");
    }
  }
  double share_sum = 0.0;
  for (double s : policy.joint_idle_shares) {
    require(s >= 0.0, "joint_idle_shares must be >= 0");
    share_sum += s;
  }
  require(share_sum > 0.0, "joint_idle_shares must not all be 0");
}

LinkBudget derive_budget(const ScenarioConfig& sc) {
  sc.validate();
  LinkBudget b;
  const double bs_gain = db_to_linear(sc.bs_tx_gain_db);
  const double tvs_gain = db_to_linear(sc.tvs_tx_gain_db);
  const double ut_gain = db_to_linear(sc.ut_rx_gain_db);
  const LinkParams bs_cell(sc.bs_ut_distance_m, bs_gain, ut_gain,
                           sc.fading.bs_cellular);
  const LinkParams bs_tv(sc.bs_ut_distance_m, bs_gain, ut_gain,
                         sc.fading.bs_tv);
  const LinkParams tvs_cell(sc.tvs_ut_distance_m, tvs_gain, ut_gain,
                            sc.fading.tvs_cellular);
  const LinkParams tvs_tv(sc.tvs_ut_distance_m, tvs_gain, ut_gain,
                          sc.fading.tvs_tv);
  const LinkParams broadcast(sc.tvs_ut_distance_m, tvs_gain, ut_gain,
                             sc.fading.interference);
  b.pg_bs_cellular = path_gain(sc.cellular_band, bs_cell);
  b.pg_tvs_cellular = path_gain(sc.cellular_band, tvs_cell);
  b.pg_bs_tv = path_gain(sc.tv_band, bs_tv);
  b.pg_tvs_tv = path_gain(sc.tv_band, tvs_tv);
  b.pg_interference = path_gain(sc.tv_band, broadcast);
  b.noise_cellular_w = noise_power(sc.noise, sc.cellular_band.bandwidth_hz);
  b.noise_tv_w = noise_power(sc.noise, sc.tv_band.bandwidth_hz);
  b.cellular_bandwidth_hz = sc.cellular_band.bandwidth_hz;
  b.tv_bandwidth_hz = sc.tv_band.bandwidth_hz;
  b.rate_bps = sc.rate_bps;
  b.snr_threshold_cellular =
      std::exp2(sc.rate_bps / sc.cellular_band.bandwidth_hz) - 1.0;
  b.snr_threshold_tv = std::exp2(sc.rate_bps / sc.tv_band.bandwidth_hz) - 1.0;
  b.tvs_power_w = sc.tvs_power_w;
  b.fading = sc.fading;
  b.policy = sc.policy;
  return b;
}

// ---- Estimates ------------------------------------------------------------

double confidence_halfwidth(const OutageEstimate& estimate, double num_sigmas) {
  if (estimate.method == EstimateMethod::Analytic) return 0.0;
  const double n = static_cast<double>(estimate.trials);
  const double successes = estimate.mean * n;
  if (successes < 10.0) {
    // Wilson interval half-width; stays informative down to zero counts.
    const double z = num_sigmas;
    const double p = estimate.mean;
    const double denom = 1.0 + z * z / n;
    return (z / denom) *
           std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
  }
  return num_sigmas * estimate.stderr_value;
}

double energy_efficiency(double rate_bps, double total_power_w) {
  require(total_power_w > 0.0, "energy_efficiency: total_power_w must be > 0");
  require(rate_bps > 0.0, "energy_efficiency: rate_bps must be > 0");
  return rate_bps / total_power_w;
}

double single_exp_outage(double mean, double y) {
  if (y <= 0.0) return 0.0;
  if (mean <= 0.0) return 1.0;
  return -std::expm1(-y / mean);
}

double exp_sum_outage(double mean1, double mean2, double y) {
  if (y <= 0.0) return 0.0;
  if (mean1 <= 0.0 || mean2 <= 0.0) {
    return branch_outage(mean1, mean2, y);
  }
  const double lo = std::min(mean1, mean2);
  const double hi = std::max(mean1, mean2);
  if (y < 1e-3 * lo) {
    // Deep-reliability tail: both direct forms cancel catastrophically.
    // With a = 1/m1, b = 1/m2 the CDF is
    //   sum_{k>=2} (-1)^k y^k a b h_{k-2} / k!,
    // h_n the complete homogeneous symmetric sum in (a, b).
    const double a = 1.0 / mean1;
    const double b = 1.0 / mean2;
    double h = 1.0;         // h_0
    double b_pow = 1.0;     // b^n
    double y_pow = y * y;   // y^k
    double factorial = 2.0; // k!
    double sign = 1.0;
    double sum = 0.0;
    for (int k = 2; k < 40; ++k) {
      const double term = sign * y_pow * a * b * h / factorial;
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
      b_pow *= b;
      h = a * h + b_pow;
      y_pow *= y;
      factorial *= k + 1;
      sign = -sign;
    }
    return sum;
  }
  if (hi - lo <= 1e-6 * hi) {
    // Gamma(2) CDF at the average mean.
    const double x = y / (0.5 * (mean1 + mean2));
    return -std::expm1(-x) - x * std::exp(-x);
  }
  return 1.0 - (mean1 * std::exp(-y / mean1) - mean2 * std::exp(-y / mean2)) /
                   (mean1 - mean2);
}

QuadratureResult interference_outage(double branch_mean1, double branch_mean2,
                                     double snr_threshold, double noise_w,
                                     double interference_scale_w,
                                     double interference_mean_sq) {
  require(snr_threshold > 0.0, "interference_outage: threshold must be > 0");
  require(noise_w > 0.0, "interference_outage: noise must be > 0");
  const double base = snr_threshold * noise_w;
  if (interference_scale_w <= 0.0 || interference_mean_sq <= 0.0) {
    return QuadratureResult{branch_outage(branch_mean1, branch_mean2, base),
                            0.0};
  }
  // Normalized interference fading u = W / mean_sq, so the integral is
  //   int_0^inf exp(-u) * F_branch(threshold * (noise + scale*mean_sq*u)) du.
  const double ramp = snr_threshold * interference_scale_w *
                      interference_mean_sq;
  const auto integrand = [&](double u) {
    return std::exp(-u) *
           branch_outage(branch_mean1, branch_mean2, base + ramp * u);
  };

  // The CDF factor turns over where ramp*u reaches the branch scale; seed the
  // partition around that knee so the adaptive pass resolves it.
  const double knee =
      std::max(branch_mean1, branch_mean2) / ramp;
  const double upper = 700.0;  // exp(-700) underflows well below any value
  std::vector<double> points{0.0, 0.5,  1.0,  2.0,  4.0,  8.0,
                             16.0, 32.0, 60.0, 120.0, 300.0, upper};
  if (std::isfinite(knee) && knee > 0.0) {
    for (double scale : {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0, 1e3}) {
      const double p = knee * scale;
      if (p > 0.0 && p < upper) points.push_back(p);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const double kRelTarget = 1e-9;
  // Coarse pass to scale the absolute tolerance of the adaptive pass.
  double rough = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i];
    const double b = points[i + 1];
    rough += (b - a) / 6.0 *
             (integrand(a) + 4.0 * integrand(0.5 * (a + b)) + integrand(b));
  }
  const double abs_tol =
      kRelTarget * std::max(rough, 1e-300) /
      static_cast<double>(points.size());

  IntegralAccumulator total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const IntegralAccumulator seg =
        adaptive_simpson(integrand, points[i], points[i + 1], abs_tol);
    total.value += seg.value;
    total.error += seg.error;
  }
  // Tail beyond the last breakpoint, bracketed by the CDF monotonicity.
  const double tail_weight = std::exp(-upper);
  const double cdf_upper =
      branch_outage(branch_mean1, branch_mean2, base + ramp * upper);
  total.value += tail_weight * cdf_upper;
  total.error += tail_weight * (1.0 - cdf_upper);

  const double rel_error =
      total.error / std::max(std::abs(total.value), 1e-300);
  if (rel_error > 1e-8) {
    throw std::runtime_error(
        "interference_outage: quadrature did not converge, attained relative "
        "error bound " +
        std::to_string(rel_error));
  }
  return QuadratureResult{std::min(total.value, 1.0), total.error};
}

OutageEstimate outage_mc(SchemeKind scheme, double total_power_w,
                         const LinkBudget& budget,
                         const SensingProfile& profile, long long trials,
                         std::uint64_t seed, int threads) {
  require(trials >= 1, "outage_mc: trials must be >= 1");
  require(threads >= 1, "outage_mc: threads must be >= 1");
  const int workers =
      static_cast<int>(std::min<long long>(threads, trials));
  std::vector<long long> counts(workers, 0);
  const long long chunk = (trials + workers - 1) / workers;

  const auto run_range = [&](long long lo, long long hi, long long& count) {
    long long local = 0;
    for (long long i = lo; i < hi; ++i) {
      RandomStream rng = RandomStream::substream(seed, static_cast<std::uint64_t>(i));
      const TrialRealization trial = sample_trial(budget.fading, profile, rng);
      if (trial_outage(scheme, total_power_w, trial, budget)) ++local;
    }
    count = local;
  };

  if (workers == 1) {
    run_range(0, trials, counts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const long long lo = w * chunk;
      const long long hi = std::min<long long>(trials, lo + chunk);
      pool.emplace_back(run_range, lo, hi, std::ref(counts[w]));
    }
    for (auto& t : pool) t.join();
  }

  long long outages = 0;
  for (long long c : counts) outages += c;
  OutageEstimate est;
  est.mean = static_cast<double>(outages) / static_cast<double>(trials);
  est.stderr_value =
      std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
  est.trials = trials;
  est.method = EstimateMethod::MonteCarlo;
  return est;
}

OutageEstimate outage_mc(SchemeKind scheme, double total_power_w,
                         const ScenarioConfig& scenario, long long trials,
                         std::uint64_t seed, int threads) {
  return outage_mc(scheme, total_power_w, derive_budget(scenario),
                   scenario.sensing, trials, seed, threads);
}

OutageEstimate outage_analytic(SchemeKind scheme, double total_power_w,
                               const ScenarioConfig& scenario) {
  require(total_power_w > 0.0, "outage_analytic: total_power_w must be > 0");
  const LinkBudget b = derive_budget(scenario);
  const JointOutcomeTable table = joint_outcome_probabilities(scenario.sensing);
  const OutcomeTerm outcomes[4] = {
      {table.idle_idle, ChannelState::Idle, false},
      {table.idle_busy, ChannelState::Busy, false},
      {table.busy_idle, ChannelState::Idle, true},
      {table.busy_busy, ChannelState::Busy, false},
  };
  const double y_cell = b.snr_threshold_cellular * b.noise_cellular_w;

  double total = 0.0;
  for (const OutcomeTerm& outcome : outcomes) {
    if (outcome.weight == 0.0) continue;
    const PowerAllocation alloc =
        allocate_power(scheme, total_power_w, outcome.detected, b.policy);
    const double cell_m1 =
        alloc.bs_cellular_w * b.pg_bs_cellular * b.fading.bs_cellular;
    const double cell_m2 =
        alloc.tvs_cellular_w * b.pg_tvs_cellular * b.fading.tvs_cellular;
    double p = branch_outage(cell_m1, cell_m2, y_cell);
    if (alloc.plane_total(Plane::Tv) > 0.0) {
      const double tv_m1 = alloc.bs_tv_w * b.pg_bs_tv * b.fading.bs_tv;
      const double tv_m2 = alloc.tvs_tv_w * b.pg_tvs_tv * b.fading.tvs_tv;
      double p_tv;
      if (outcome.missed_detection) {
        p_tv = interference_outage(tv_m1, tv_m2, b.snr_threshold_tv,
                                   b.noise_tv_w,
                                   b.tvs_power_w * b.pg_interference,
                                   b.fading.interference)
                   .value;
      } else {
        p_tv = branch_outage(tv_m1, tv_m2, b.snr_threshold_tv * b.noise_tv_w);
      }
      p *= p_tv;
    }
    total += outcome.weight * p;
  }
  OutageEstimate est;
  est.mean = std::min(total, 1.0);
  est.stderr_value = 0.0;
  est.trials = 0;
  est.method = EstimateMethod::Analytic;
  return est;
}

std::vector<double> log_power_grid(double pmin_w, double pmax_w, int points) {
  require(points >= 1, "log_power_grid: points must be >= 1");
  require(pmin_w > 0.0, "log_power_grid: pmin must be > 0");
  require(pmax_w >= pmin_w, "log_power_grid: pmax must be >= pmin");
  if (points == 1) return {pmin_w};
  require(pmax_w > pmin_w,
          "log_power_grid: pmax must be > pmin for multi-point grids");
  std::vector<double> grid(points);
  const double step = std::log(pmax_w / pmin_w) / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid[i] = pmin_w * std::exp(i * step);
  }
  grid.front() = pmin_w;
  grid.back() = pmax_w;
  return grid;
}

std::vector<TradeoffPoint> tradeoff_sweep(const ScenarioConfig& scenario,
                                          const std::vector<double>& power_grid,
                                          long long trials, std::uint64_t seed,
                                          int threads) {
  require(!power_grid.empty(), "tradeoff_sweep: power grid must be non-empty");
  for (std::size_t i = 0; i < power_grid.size(); ++i) {
    require(power_grid[i] > 0.0, "tradeoff_sweep: powers must be > 0");
    if (i > 0) {
      require(power_grid[i] > power_grid[i - 1],
              "tradeoff_sweep: power grid must be strictly increasing");
    }
  }
  const LinkBudget budget = derive_budget(scenario);
  std::vector<TradeoffPoint> rows;
  rows.reserve(scenario.schemes.size() * power_grid.size());
  for (SchemeKind scheme : scenario.schemes) {
    for (double power : power_grid) {
      TradeoffPoint point;
      point.scheme = scheme;
      point.total_power_w = power;
      point.mc = outage_mc(scheme, power, budget, scenario.sensing, trials,
                           seed, threads);
      point.analytic = outage_analytic(scheme, power, scenario);
      point.efficiency_bits_per_joule =
          energy_efficiency(scenario.rate_bps, power);
      point.mc_reliable =
          point.analytic.mean >= 10.0 / static_cast<double>(trials);
      rows.push_back(point);
    }
  }
  return rows;
}

double efficiency_at_outage(const std::vector<TradeoffPoint>& scheme_curve,
                            double target_outage) {
  require(target_outage > 0.0 && target_outage < 1.0,
          "efficiency_at_outage: target must lie in (0,1)");
  require(!scheme_curve.empty(), "efficiency_at_outage: empty curve");
  for (const TradeoffPoint& p : scheme_curve) {
    require(p.scheme == scheme_curve.front().scheme,
            "efficiency_at_outage: curve must cover a single scheme");
  }
  // Interpolate on the analytic curve in log-log space.
  struct Node {
    double outage;
    double efficiency;
  };
  std::vector<Node> nodes;
  nodes.reserve(scheme_curve.size());
  for (const TradeoffPoint& p : scheme_curve) {
    if (p.analytic.mean > 0.0) {
      nodes.push_back(Node{p.analytic.mean, p.efficiency_bits_per_joule});
    }
  }
  require(!nodes.empty(), "efficiency_at_outage: curve has no positive outage");
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return a.outage < b.outage; });
  if (target_outage < nodes.front().outage ||
      target_outage > nodes.back().outage) {
    throw std::out_of_range(
        "efficiency_at_outage: target outside the curve's outage range");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].outage == target_outage) return nodes[i].efficiency;
    if (i + 1 < nodes.size() && nodes[i].outage < target_outage &&
        target_outage < nodes[i + 1].outage) {
      const double t = (std::log(target_outage) - std::log(nodes[i].outage)) /
                       (std::log(nodes[i + 1].outage) -
                        std::log(nodes[i].outage));
      return std::exp(std::log(nodes[i].efficiency) +
                      t * (std::log(nodes[i + 1].efficiency) -
                           std::log(nodes[i].efficiency)));
    }
  }
  throw std::out_of_range("efficiency_at_outage: target not bracketed");
}

}  // namespace greencell
