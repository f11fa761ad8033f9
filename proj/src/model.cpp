#include "infolab/model.hpp"

#include <cmath>
#include <string>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

void require_precisions(double t, double h) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("prior precision t must be positive, got " + std::to_string(t));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("PM precision h must be positive, got " + std::to_string(h));
  }
}

void require_k(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw DomainError("forecaster precision k must be non-negative, got " +
                      std::to_string(k));
  }
}

void require_sigma2(double sigma2) {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw DomainError("policy variance sigma2 must be non-negative, got " +
                      std::to_string(sigma2));
  }
}

// Loss scale of the state term: R for opaque, 1 otherwise.
double state_factor(Setting setting, double mu, double t, double h) {
  return setting == Setting::opaque ? attenuation_factor(mu, t, h) : 1.0;
}

// Posterior precision of theta given the forecaster's information.
double posterior_precision(Setting setting, double t, double h, double k) {
  return setting == Setting::transparent ? t + h + k : t + k;
}

}  // namespace

std::string_view to_string(Setting setting) {
  switch (setting) {
    case Setting::opaque:
      return "opaque";
    case Setting::none:
      return "none";
    case Setting::transparent:
      return "transparent";
  }
  return "?";
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::reinforcing:
      return "reinforcing";
    case Regime::preventive:
      return "preventive";
    case Regime::overreacting:
      return "overreacting";
    case Regime::boundary:
      return "boundary";
  }
  return "?";
}

Setting parse_setting(std::string_view name) {
  if (name == "opaque") return Setting::opaque;
  if (name == "none") return Setting::none;
  if (name == "transparent") return Setting::transparent;
  throw DomainError("unknown setting '" + std::string(name) +
                    "' (expected opaque, none or transparent)");
}

void ModelParams::validate() const {
  require_precisions(prior_precision, pm_precision);
  if (!(outcome_noise_var >= 0.0) || !std::isfinite(outcome_noise_var)) {
    throw DomainError("outcome noise variance must be non-negative");
  }
}

double pm_weight(double t, double h) {
  require_precisions(t, h);
  return h / (t + h);
}

double forecaster_weight(double t, double k) {
  require_precisions(t, 1.0);
  require_k(k);
  return k / (t + k);
}

PosteriorWeights posterior_weights(double t, double h, double k) {
  return {pm_weight(t, h), forecaster_weight(t, k)};
}

double pm_action(double x, double s_p, double pm_w) { return -x * pm_w * s_p; }

double attenuation_factor(double mu, double t, double h) {
  const double gap = 1.0 - mu * pm_weight(t, h);
  return gap * gap;
}

double optimal_forecast_opaque(double s, double mu, double pm_w,
                               double forecaster_w) {
  return (1.0 - mu * pm_w) * forecaster_w * s;
}

double optimal_forecast_transparent(double s, double s_p, double mu,
                                    const ModelParams& params, double k) {
  require_k(k);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  const double posterior_mean = (k * s + h * s_p) / (t + h + k);
  return posterior_mean - mu * pm_weight(t, h) * s_p;
}

double conditional_variance_opaque(double s, double k, double mu,
                                   double sigma2, const ModelParams& params) {
  require_k(k);
  require_sigma2(sigma2);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  const double H = pm_weight(t, h);
  const double gap = 1.0 - mu * H;
  const double var_theta = 1.0 / (t + k);
  const double mean_theta = forecaster_weight(t, k) * s;
  // E[(1-xH)^2 theta^2 | s] - (E[(1-xH) theta | s])^2, x independent of (theta, s).
  const double second_moment_factor = gap * gap + sigma2 * H * H;
  return second_moment_factor * (var_theta + mean_theta * mean_theta) -
         gap * gap * mean_theta * mean_theta;
}

double interim_loss_opaque(double s, double k, double mu, double sigma2,
                           const ModelParams& params) {
  params.validate();
  const double H = pm_weight(params.prior_precision, params.pm_precision);
  const double second_moment_x = sigma2 + mu * mu;
  return conditional_variance_opaque(s, k, mu, sigma2, params) +
         H * H * second_moment_x / params.pm_precision + params.outcome_noise_var;
}

double interim_loss_transparent(double s_p, double k, double sigma2,
                                const ModelParams& params) {
  params.validate();
  require_k(k);
  require_sigma2(sigma2);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  const double H = pm_weight(t, h);
  return 1.0 / (t + h + k) + H * H * s_p * s_p * sigma2 + params.outcome_noise_var;
}

double exante_expected_loss(double k, double mu, double sigma2,
                            const ModelParams& params) {
  params.validate();
  require_k(k);
  require_sigma2(sigma2);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  const double H = pm_weight(t, h);
  const double second_moment_x = sigma2 + mu * mu;
  return H * H * sigma2 / t + attenuation_factor(mu, t, h) / (t + k) +
         H * H * second_moment_x / h + params.outcome_noise_var;
}

double expected_mse(Setting setting, double k, double mu, double sigma2,
                    const ModelParams& params) {
  switch (setting) {
    case Setting::opaque:
      return exante_expected_loss(k, mu, sigma2, params);
    case Setting::none:
      params.validate();
      require_k(k);
      return 1.0 / (params.prior_precision + k) + params.outcome_noise_var;
    case Setting::transparent: {
      params.validate();
      require_k(k);
      require_sigma2(sigma2);
      const double t = params.prior_precision;
      const double h = params.pm_precision;
      const double H = pm_weight(t, h);
      // E(s_P^2) = 1/t + 1/h
      return 1.0 / (t + h + k) + H * H * sigma2 * (1.0 / t + 1.0 / h) +
             params.outcome_noise_var;
    }
  }
  return 0.0;
}

double exante_objective(double k, Setting setting, double mu,
                        const ModelParams& params, const CostModel& cost) {
  require_k(k);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  require_precisions(t, h);
  return state_factor(setting, mu, t, h) / posterior_precision(setting, t, h, k) +
         cost.value(k);
}

double marginal_benefit(double k, Setting setting, double mu,
                        const ModelParams& params) {
  require_k(k);
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  require_precisions(t, h);
  const double p = posterior_precision(setting, t, h, k);
  return state_factor(setting, mu, t, h) / (p * p);
}

Regime classify_regime(double mu, double t, double h) {
  require_precisions(t, h);
  const double threshold = (t + h) / h;
  if (mu < 0.0) return Regime::reinforcing;
  if (mu > 0.0 && mu < threshold) return Regime::preventive;
  if (mu > threshold) return Regime::overreacting;
  return Regime::boundary;
}

}  // namespace infolab
