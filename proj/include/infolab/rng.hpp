#pragma once

#include <array>
#include <cstdint>

namespace infolab {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
/// Output is a pure function of (counter, key).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Independent substream for one sample index under one seed.
///
/// Draw j of sample i is fixed by (seed, i, j) alone, so any partition of the
/// sample index range across threads reproduces the same numbers.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) noexcept;

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal by inverse CDF of uniform().
  double normal();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t index_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

/// Phi^{-1}(u) for u in (0, 1).
double standard_normal_quantile(double u);

}  // namespace infolab
