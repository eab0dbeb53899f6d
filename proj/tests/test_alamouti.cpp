#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "greencell/alamouti.hpp"
#include "greencell/random.hpp"

using namespace greencell;

namespace {

Complex random_symbol(RandomStream& rng) {
  return Complex{2.0 * rng.next_uniform() - 1.0, 2.0 * rng.next_uniform() - 1.0};
}

std::array<Complex, 2> transmit(const AlamoutiBlock& block, Complex h1,
                                Complex h2) {
  return {h1 * block.slots[0][0] + h2 * block.slots[0][1],
          h1 * block.slots[1][0] + h2 * block.slots[1][1]};
}

}  // namespace

TEST_CASE("encode lays out the conjugate structure") {
  const AlamoutiBlock basis = alamouti_encode({1, 0}, {0, 0});
  CHECK(basis.slots[0][0] == Complex{1, 0});
  CHECK(basis.slots[0][1] == Complex{0, 0});
  CHECK(basis.slots[1][0] == Complex{0, 0});
  CHECK(basis.slots[1][1] == Complex{1, 0});

  const AlamoutiBlock swapped = alamouti_encode({0, 0}, {1, 0});
  CHECK(swapped.slots[0][1] == Complex{1, 0});
  CHECK(swapped.slots[1][0] == Complex{-1, 0});
  CHECK(swapped.slots[1][1] == Complex{0, 0});

  const AlamoutiBlock general = alamouti_encode({1, 1}, {2, -1});
  CHECK(general.slots[0][0] == Complex{1, 1});
  CHECK(general.slots[0][1] == Complex{2, -1});
  CHECK(general.slots[1][0] == Complex{-2, -1});
  CHECK(general.slots[1][1] == Complex{1, -1});
}

TEST_CASE("code matrix columns are orthogonal for random symbols") {
  RandomStream rng(12);
  for (int i = 0; i < 1000; ++i) {
    const AlamoutiBlock block =
        alamouti_encode(10.0 * random_symbol(rng), 10.0 * random_symbol(rng));
    CHECK(block.column_inner_product() == Complex{0.0, 0.0});
  }
}

TEST_CASE("single-path channel decodes to the identity") {
  const Complex x1{0.3, -0.7}, x2{-1.1, 0.2};
  const auto received = transmit(alamouti_encode(x1, x2), {1, 0}, {0, 0});
  const AlamoutiDecoded decoded = alamouti_decode(received, {1, 0}, {0, 0}, true);
  CHECK(decoded.x1.real() == doctest::Approx(x1.real()).epsilon(1e-15));
  CHECK(decoded.x1.imag() == doctest::Approx(x1.imag()).epsilon(1e-15));
  CHECK(decoded.x2.real() == doctest::Approx(x2.real()).epsilon(1e-15));
  CHECK(decoded.x2.imag() == doctest::Approx(x2.imag()).epsilon(1e-15));
}

TEST_CASE("unnormalized decode carries the |h1|^2+|h2|^2 combining gain") {
  const Complex x1{1, 0}, x2{0, 1};
  const auto received = transmit(alamouti_encode(x1, x2), {1, 0}, {1, 0});
  const AlamoutiDecoded decoded =
      alamouti_decode(received, {1, 0}, {1, 0}, false);
  CHECK(decoded.combining_gain == doctest::Approx(2.0));
  CHECK(decoded.x1.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(decoded.x1.imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(decoded.x2.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(decoded.x2.imag() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("decode(encode(x)) round-trips over random channels") {
  RandomStream rng(77);
  for (int i = 0; i < 1000; ++i) {
    const Complex x1 = random_symbol(rng);
    const Complex x2 = random_symbol(rng);
    const Complex h1 = random_symbol(rng);
    const Complex h2 = random_symbol(rng);
    if (std::norm(h1) + std::norm(h2) < 1e-6) continue;
    const auto received = transmit(alamouti_encode(x1, x2), h1, h2);
    const AlamoutiDecoded decoded = alamouti_decode(received, h1, h2, true);
    CHECK(std::abs(decoded.x1 - x1) <= 1e-12 * (1.0 + std::abs(x1)));
    CHECK(std::abs(decoded.x2 - x2) <= 1e-12 * (1.0 + std::abs(x2)));
    // The unnormalized gain is the channel energy.
    const AlamoutiDecoded raw = alamouti_decode(received, h1, h2, false);
    const double gain = std::norm(h1) + std::norm(h2);
    CHECK(std::abs(raw.x1 - gain * x1) <= 1e-12 * gain * (1.0 + std::abs(x1)));
  }
}

TEST_CASE("all-zero channel is reported undecodable") {
  const std::array<Complex, 2> received{Complex{1, 0}, Complex{0, 1}};
  CHECK_THROWS_AS(alamouti_decode(received, {0, 0}, {0, 0}, true),
                  std::domain_error);
}

TEST_CASE("post-detection SNR equals the received-power sum over noise") {
  RandomStream rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Complex h1 = random_symbol(rng);
    const Complex h2 = random_symbol(rng);
    const double p1 = rng.next_uniform() + 0.01;
    const double p2 = rng.next_uniform() + 0.01;
    const double noise = rng.next_uniform() + 0.1;
    if (std::norm(h1) + std::norm(h2) < 1e-6) continue;
    const double symbol_level =
        alamouti_post_detection_snr(h1, h2, p1, p2, noise);
    const double capacity_level =
        (p1 * std::norm(h1) + p2 * std::norm(h2)) / noise;
    CHECK(std::abs(symbol_level - capacity_level) <=
          1e-10 * capacity_level);
  }
}
