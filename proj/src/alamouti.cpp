#include "greencell/alamouti.hpp"

#include <cmath>
#include <stdexcept>

namespace greencell {

Complex AlamoutiBlock::column_inner_product() const {
  return slots[0][0] * std::conj(slots[0][1]) +
         slots[1][0] * std::conj(slots[1][1]);
}

AlamoutiBlock alamouti_encode(Complex x1, Complex x2) {
  AlamoutiBlock block;
  block.slots[0] = {x1, x2};
  block.slots[1] = {-std::conj(x2), std::conj(x1)};
  return block;
}

AlamoutiDecoded alamouti_decode(const std::array<Complex, 2>& received,
                                Complex h1, Complex h2, bool normalize) {
  const double gain = std::norm(h1) + std::norm(h2);
  if (gain == 0.0) {
    throw std::domain_error("alamouti_decode: undecodable channel, h1 = h2 = 0");
  }
  const Complex r1 = received[0];
  const Complex r2_conj = std::conj(received[1]);
  Complex x1 = std::conj(h1) * r1 + h2 * r2_conj;
  Complex x2 = std::conj(h2) * r1 - h1 * r2_conj;
  if (normalize) {
    x1 /= gain;
    x2 /= gain;
  }
  return AlamoutiDecoded{x1, x2, gain};
}

double alamouti_post_detection_snr(Complex h1, Complex h2, double p1,
                                   double p2, double noise_var) {
  if (noise_var <= 0.0) {
    throw std::invalid_argument(
        "alamouti_post_detection_snr: noise_var must be > 0");
  }
  // Per-antenna power scaling is equivalent to scaling the channel seen by
  // unit-energy symbols.
  const Complex h1s = std::sqrt(p1) * h1;
  const Complex h2s = std::sqrt(p2) * h2;
  // Push a noise-free probe block through the channel and the decoder to
  // measure the symbol amplitude gain the combiner produces.
  const Complex probe{1.0, 0.0};
  const AlamoutiBlock block = alamouti_encode(probe, Complex{0.0, 0.0});
  const std::array<Complex, 2> received = {
      h1s * block.slots[0][0] + h2s * block.slots[0][1],
      h1s * block.slots[1][0] + h2s * block.slots[1][1]};
  const AlamoutiDecoded decoded = alamouti_decode(received, h1s, h2s, false);
  const double signal_gain = std::abs(decoded.x1);
  // The combining weights (h1s*, h2s) amplify the per-slot noise variance by
  // their squared norm.
  const double noise_gain = std::norm(std::conj(h1s)) + std::norm(h2s);
  return signal_gain * signal_gain / (noise_gain * noise_var);
}

}  // namespace greencell
