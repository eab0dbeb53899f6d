#ifndef GREENCELL_ALAMOUTI_HPP
#define GREENCELL_ALAMOUTI_HPP

#include <array>
#include <complex>

namespace greencell {

using Complex = std::complex<double>;

// Rate-1 two-transmitter orthogonal space-time block. slots[t][a] is the
// symbol sent by antenna a in slot t:
//   slot 0: ( x1,  x2 )
//   slot 1: (-x2*, x1*)
struct AlamoutiBlock {
  std::array<std::array<Complex, 2>, 2> slots;

  Complex column_inner_product() const;  // <col 0, col 1>, zero by design
};

struct AlamoutiDecoded {
  Complex x1;
  Complex x2;
  double combining_gain;  // |h1|^2 + |h2|^2
};

AlamoutiBlock alamouti_encode(Complex x1, Complex x2);

// Coherent linear combining of the two received slots. With normalize the
// estimates are exact symbol recoveries in the noise-free case; without it
// they carry the combining gain. Throws on the undecodable h1 = h2 = 0
// channel.
AlamoutiDecoded alamouti_decode(const std::array<Complex, 2>& received,
                                Complex h1, Complex h2, bool normalize);

// Post-combining symbol SNR of the decoder for per-antenna transmit powers
// p1, p2 over channels h1, h2 with unit-energy symbols and per-slot noise
// variance noise_var. Test anchor for the capacity-level effective-SNR sum.
double alamouti_post_detection_snr(Complex h1, Complex h2, double p1,
                                   double p2, double noise_var);

}  // namespace greencell

#endif  // GREENCELL_ALAMOUTI_HPP
