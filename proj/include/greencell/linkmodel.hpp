#ifndef GREENCELL_LINKMODEL_HPP
#define GREENCELL_LINKMODEL_HPP

#include "greencell/random.hpp"

namespace greencell {

// Link-budget convention used throughout: 3.0e8 m/s.
inline constexpr double kSpeedOfLightMps = 3.0e8;

// Boltzmann constant, Joule/Kelvin. Fixed, not configurable.
inline constexpr double kBoltzmannJPerK = 1.38e-23;

// Carrier frequency and bandwidth of one transmission band.
struct RadioBand {
  double carrier_hz;
  double bandwidth_hz;

  RadioBand(double carrier, double bandwidth);
};

// One transmitter-to-receiver link: geometry, antenna gains (linear power
// ratios) and the mean of the squared Rayleigh fading magnitude.
struct LinkParams {
  double distance_m;
  double tx_gain_linear;
  double rx_gain_linear;
  double fading_mean_sq;

  LinkParams(double distance, double tx_gain, double rx_gain, double mean_sq);
};

// Thermal noise at the receiver front end, sigma_n^2 = kTB.
struct NoiseModel {
  double temperature_k;

  explicit NoiseModel(double temperature);
};

// One realization of |h|^2 for a block-fading transmission attempt.
struct FadingDraw {
  double gain_sq;
};

double db_to_linear(double db);
double linear_to_db(double ratio);
double watt_to_dbm(double power_w);

// Deterministic part of P_rx / P_tx: (c / (4 pi f d))^2 * Gtx * Grx.
double path_gain(const RadioBand& band, const LinkParams& link);

// tx_power_w * path_gain * |h|^2.
double received_power(double tx_power_w, const RadioBand& band,
                      const LinkParams& link, FadingDraw fading);

// kTB in Watt.
double noise_power(const NoiseModel& noise, double bandwidth_hz);

// Exponential draw of |h|^2 with mean link.fading_mean_sq. One uniform per
// draw; identical stream state implies an identical draw.
FadingDraw sample_fading(const LinkParams& link, RandomStream& rng);

}  // namespace greencell

#endif  // GREENCELL_LINKMODEL_HPP
