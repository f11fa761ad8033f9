#pragma once

// Closed-form quantities of the Gaussian-quadratic forecasting model.
//
// State theta ~ N(0, 1/t). The policy-maker (PM) sees s_P = theta + eta,
// eta ~ N(0, 1/h), and acts a = -x E(theta | s_P) = -x H s_P with H = h/(t+h).
// The forecaster buys a signal s = theta + delta, delta ~ N(0, 1/k), and
// predicts y = theta + a + eps, Var(eps) = tau^2. x is independent of
// everything else, with mean mu and variance sigma^2.
//
// Three information settings are modelled:
//   opaque       PM intervenes, s_P is private
//   none         no intervention (a = 0)
//   transparent  PM intervenes and publishes s_P
//
// Every function here is pure; prior mean and PM target are both zero.

#include <string_view>

#include "infolab/cost.hpp"
#include "infolab/policy_dist.hpp"

namespace infolab {

enum class Setting { opaque, none, transparent };

enum class Regime { reinforcing, preventive, overreacting, boundary };

std::string_view to_string(Setting setting);
std::string_view to_string(Regime regime);
/// Throws DomainError for an unknown name.
Setting parse_setting(std::string_view name);

struct ModelParams {
  double prior_precision = 1.0;    // t
  double pm_precision = 1.0;       // h
  double outcome_noise_var = 0.0;  // tau^2
  PolicyStrengthDist policy = PolicyStrengthDist::point_mass(0.0);

  /// Throws DomainError unless t > 0, h > 0, tau^2 >= 0 (all finite).
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

/// Signal weights in the posterior means E(theta|s_P) = pm s_P and
/// E(theta|s) = forecaster s.
struct PosteriorWeights {
  double pm = 0.0;          // H = h / (t + h)
  double forecaster = 0.0;  // K = k / (t + k)
};

double pm_weight(double t, double h);
double forecaster_weight(double t, double k);
PosteriorWeights posterior_weights(double t, double h, double k);

/// a* = -x H s_P
double pm_action(double x, double s_p, double pm_w);

/// R = (1 - mu H)^2, the factor by which intervention scales the outcome
/// variance driven by the state.
double attenuation_factor(double mu, double t, double h);

/// f* = E[(1 - xH) theta | s] = (1 - mu H) K s
double optimal_forecast_opaque(double s, double mu, double pm_w,
                               double forecaster_w);

/// f* = E(theta | s, s_P) - mu H s_P with
/// E(theta | s, s_P) = (k s + h s_P) / (t + h + k).
double optimal_forecast_transparent(double s, double s_p, double mu,
                                    const ModelParams& params, double k);

/// Var[(1 - xH) theta | s] for x independent of (theta, s).
///
/// With V = 1/(t+k) and m = K s the posterior variance and mean of theta,
///   Var[(1-xH) theta | s] = E[(1-xH)^2] (V + m^2) - (1-mu H)^2 m^2
/// where E[(1-xH)^2] = (1-mu H)^2 + sigma^2 H^2.
double conditional_variance_opaque(double s, double k, double mu,
                                   double sigma2, const ModelParams& params);

/// Interim MSE of the optimal opaque forecast given s:
///   Var[(1-xH) theta | s] + H^2 E(x^2)/h + tau^2.
double interim_loss_opaque(double s, double k, double mu, double sigma2,
                           const ModelParams& params);

/// Interim MSE of the optimal transparent forecast given s_P:
///   1/(t+h+k) + H^2 s_P^2 sigma^2 + tau^2.
double interim_loss_transparent(double s_p, double k, double sigma2,
                                const ModelParams& params);

/// Full ex-ante MSE under opacity, constants included:
///   H^2 sigma^2/t + R/(t+k) + H^2 E(x^2)/h + tau^2.
double exante_expected_loss(double k, double mu, double sigma2,
                            const ModelParams& params);

/// Ex-ante MSE of the optimal forecast in any setting (constants included).
/// transparent: 1/(t+h+k) + H^2 sigma^2 (1/t + 1/h) + tau^2
/// none:        1/(t+k) + tau^2
double expected_mse(Setting setting, double k, double mu, double sigma2,
                    const ModelParams& params);

/// k-dependent decision objective, constants dropped:
///   opaque R/(t+k) + C(k), none 1/(t+k) + C(k), transparent 1/(t+h+k) + C(k).
double exante_objective(double k, Setting setting, double mu,
                        const ModelParams& params, const CostModel& cost);

/// Derivative in k of the information benefit, i.e. of minus the loss term
/// in exante_objective: R/(t+k)^2, 1/(t+k)^2 or 1/(t+h+k)^2.
double marginal_benefit(double k, Setting setting, double mu,
                        const ModelParams& params);

/// reinforcing mu < 0, preventive 0 < mu < (t+h)/h, overreacting
/// mu > (t+h)/h, boundary otherwise.
Regime classify_regime(double mu, double t, double h);

}  // namespace infolab
