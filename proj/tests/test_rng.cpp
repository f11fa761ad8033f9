#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/erf.hpp>

#include "infolab/rng.hpp"

using namespace infolab;

TEST_CASE("philox4x32-10 known-answer vectors") {
  using Ctr = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        Ctr{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                      {0xffffffffu, 0xffffffffu}) ==
        Ctr{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                      {0xa4093822u, 0x299f31d0u}) ==
        Ctr{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("sample streams are pure functions of seed and index") {
  SampleStream a(7, 123), b(7, 123), c(7, 124), d(8, 123);
  const double a0 = a.uniform(), a1 = a.normal();
  CHECK(a0 == b.uniform());
  CHECK(a1 == b.normal());
  CHECK(a0 != c.uniform());
  CHECK(a0 != d.uniform());
}

TEST_CASE("uniforms stay inside the open unit interval with the right moments") {
  double sum = 0, sumsq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    SampleStream s(99, i);
    for (int j = 0; j < 5; ++j) {
      const double u = s.uniform();
      REQUIRE(u > 0.0);
      REQUIRE(u < 1.0);
      sum += u;
      sumsq += u * u;
    }
  }
  const double m = sum / (5.0 * n);
  CHECK(std::abs(m - 0.5) < 4 * std::sqrt(1.0 / 12 / (5.0 * n)));
  CHECK(std::abs(sumsq / (5.0 * n) - 1.0 / 3.0) < 2e-3);
}

TEST_CASE("normal quantile") {
  CHECK(standard_normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(standard_normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-13));
  CHECK(standard_normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-13));
  CHECK(standard_normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-12));
}

TEST_CASE("normal quantile agrees with boost's erfc_inv") {
  for (double e = -300; e < -0.3; e += 0.25) {
    const double u = std::pow(10.0, e);
    for (double p : {u, 1.0 - u, 0.5 + u / 4}) {
      if (!(p > 0.0 && p < 1.0)) continue;
      const double ref = -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
      CHECK(standard_normal_quantile(p) == doctest::Approx(ref).epsilon(1e-14));
    }
  }
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    const double ref = -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
    CHECK(std::abs(standard_normal_quantile(p) - ref) <= 1e-14 * std::max(1.0, std::abs(ref)));
  }
}
