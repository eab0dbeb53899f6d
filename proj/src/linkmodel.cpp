#include "greencell/linkmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace greencell {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RadioBand::RadioBand(double carrier, double bandwidth)
    : carrier_hz(carrier), bandwidth_hz(bandwidth) {
  require(carrier_hz > 0.0, "RadioBand: carrier_hz must be > 0");
  require(bandwidth_hz > 0.0, "RadioBand: bandwidth_hz must be > 0");
}

LinkParams::LinkParams(double distance, double tx_gain, double rx_gain,
                       double mean_sq)
    : distance_m(distance),
      tx_gain_linear(tx_gain),
      rx_gain_linear(rx_gain),
      fading_mean_sq(mean_sq) {
  require(distance_m > 0.0, "LinkParams: distance_m must be > 0");
  require(tx_gain_linear > 0.0, "LinkParams: tx_gain_linear must be > 0");
  require(rx_gain_linear > 0.0, "LinkParams: rx_gain_linear must be > 0");
  require(fading_mean_sq > 0.0, "LinkParams: fading_mean_sq must be > 0");
}

NoiseModel::NoiseModel(double temperature) : temperature_k(temperature) {
  require(temperature_k > 0.0, "NoiseModel: temperature_k must be > 0");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double watt_to_dbm(double power_w) { return 10.0 * std::log10(power_w * 1e3); }

double path_gain(const RadioBand& band, const LinkParams& link) {
  const double factor =
      kSpeedOfLightMps /
      (4.0 * M_PI * band.carrier_hz * link.distance_m);
  return factor * factor * link.tx_gain_linear * link.rx_gain_linear;
}

double received_power(double tx_power_w, const RadioBand& band,
                      const LinkParams& link, FadingDraw fading) {
  require(tx_power_w >= 0.0, "received_power: tx_power_w must be >= 0");
  return tx_power_w * path_gain(band, link) * fading.gain_sq;
}

double noise_power(const NoiseModel& noise, double bandwidth_hz) {
  require(bandwidth_hz > 0.0, "noise_power: bandwidth_hz must be > 0");
  return kBoltzmannJPerK * noise.temperature_k * bandwidth_hz;
}

FadingDraw sample_fading(const LinkParams& link, RandomStream& rng) {
  return FadingDraw{rng.next_exponential(link.fading_mean_sq)};
}

}  // namespace greencell
