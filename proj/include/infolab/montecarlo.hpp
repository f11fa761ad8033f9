#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infolab/model.hpp"

namespace infolab {

inline constexpr std::size_t kMinSamples = 10000;

struct SimConfig {
  std::size_t n_samples = 1000000;
  std::uint64_t seed = 1;
  double k = 0.0;
  Setting setting = Setting::opaque;
  ModelParams params;
  // Worker threads; 0 picks hardware_concurrency. Results do not depend on it.
  unsigned threads = 0;
  // Multiplies the forecast. 1 is the optimal rule; other values exist to
  // check that the rule is optimal.
  double forecast_scale = 1.0;
};

/// Monte-Carlo mean with standard error sd / sqrt(n).
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;

  /// (mean - reference) / std_error; 0 when both numerator and error vanish.
  double z_score(double reference) const;
  /// |mean - reference| <= sigmas * std_error, with a 1e-12 absolute floor.
  bool agrees_with(double reference, double sigmas = 4.0) const;
};

/// One realization of the data-generating process.
struct Draw {
  double theta = 0.0;
  double pm_noise = 0.0;       // eta
  double outcome_noise = 0.0;  // eps
  double x = 0.0;
  // k * s = k theta + sqrt(k) z, finite at k = 0 where s itself is undefined.
  double scaled_signal = 0.0;
  double signal = 0.0;         // s; 0 when k = 0
};

/// Draws sample `index` of the stream identified by `seed`.
Draw draw_sample(std::uint64_t seed, std::uint64_t index, double k,
                 const ModelParams& params);

/// Realized MSE of the setting's optimal forecast. The rule uses
/// mu = params.policy.mean(): the forecaster knows the law of x, never its
/// draw.
Estimate simulate_mse(const SimConfig& config);

struct TotalVarianceReport {
  // Var[(1-xH) theta], Var{E[(1-xH) theta | s]}, E{Var[(1-xH) theta | s]}.
  Estimate total;
  Estimate explained;
  Estimate residual;
  // total - explained - residual, per sample.
  Estimate identity_gap;
  double total_closed_form = 0.0;      // H^2 sigma^2/t + (1-mu H)^2/t
  double explained_closed_form = 0.0;  // (1/t)(1-mu H)^2 k/(t+k)
  double residual_closed_form = 0.0;   // H^2 sigma^2/t + (1-mu H)^2/(t+k)

  bool passed(double sigmas = 4.0) const;
};

/// Checks the law-of-total-variance decomposition behind the ex-ante loss.
/// The conditional moments are model-core closed forms evaluated at the
/// sampled s. mu and sigma^2 come from config.params.policy; config.setting
/// must be opaque.
TotalVarianceReport verify_total_variance(const SimConfig& config);

/// n i.i.d. draws of x.
std::vector<double> sample_policy(const PolicyStrengthDist& dist, std::size_t n,
                                  std::uint64_t seed);

}  // namespace infolab
