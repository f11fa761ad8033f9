#include "infolab/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "infolab/errors.hpp"
#include "infolab/rng.hpp"

namespace infolab {

namespace {

// Fixed block size; reduction order depends only on this, never on the
// number of threads.
constexpr std::size_t kBlock = 8192;

struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    n += 1.0;
    const double d = v - mean;
    mean += d / n;
    m2 += d * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double d = o.mean - mean;
    mean += d * (o.n / total);
    m2 += o.m2 + d * d * (n * o.n / total);
    n = total;
  }

  Estimate estimate() const {
    Estimate e;
    e.n = static_cast<std::size_t>(n);
    e.mean = mean;
    const double var = n > 1.0 ? m2 / (n - 1.0) : 0.0;
    e.std_error = std::sqrt(std::max(var, 0.0) / n);
    return e;
  }
};

template <std::size_t N, class Fn>
std::array<Estimate, N> reduce_samples(std::size_t n, unsigned threads, Fn per_sample) {
  const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::array<Moments, N>> blocks(n_blocks);

  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t b = next++; b < n_blocks; b = next++) {
      auto& acc = blocks[b];
      const std::size_t end = std::min(n, (b + 1) * kBlock);
      for (std::size_t i = b * kBlock; i < end; ++i) {
        const std::array<double, N> v = per_sample(i);
        for (std::size_t j = 0; j < N; ++j) acc[j].add(v[j]);
      }
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_blocks)));
  std::atomic<std::size_t> next{0};
  if (workers == 1) {
    work(next);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&] { work(next); });
  }

  std::array<Moments, N> total{};
  for (const auto& block : blocks) {
    for (std::size_t j = 0; j < N; ++j) total[j].merge(block[j]);
  }
  std::array<Estimate, N> out{};
  for (std::size_t j = 0; j < N; ++j) out[j] = total[j].estimate();
  return out;
}

void validate(const SimConfig& c) {
  c.params.validate();
  if (c.n_samples < kMinSamples) {
    throw DomainError("Monte-Carlo run needs at least " + std::to_string(kMinSamples) +
                      " samples, got " + std::to_string(c.n_samples));
  }
  if (!(c.k >= 0.0) || !std::isfinite(c.k)) {
    throw DomainError("forecaster precision k must be non-negative");
  }
}

}  // namespace

double Estimate::z_score(double reference) const {
  const double diff = mean - reference;
  if (std_error == 0.0) {
    if (diff == 0.0) return 0.0;
    return diff > 0.0 ? HUGE_VAL : -HUGE_VAL;
  }
  return diff / std_error;
}

bool Estimate::agrees_with(double reference, double sigmas) const {
  return std::abs(mean - reference) <= sigmas * std_error + 1e-12;
}

Draw draw_sample(std::uint64_t seed, std::uint64_t index, double k,
                 const ModelParams& params) {
  SampleStream rng(seed, index);
  Draw d;
  d.theta = rng.normal() / std::sqrt(params.prior_precision);
  d.pm_noise = rng.normal() / std::sqrt(params.pm_precision);
  d.outcome_noise = rng.normal() * std::sqrt(params.outcome_noise_var);
  const double z_signal = rng.normal();
  d.x = params.policy.quantile(rng.uniform());
  d.scaled_signal = k * d.theta + std::sqrt(k) * z_signal;
  d.signal = k > 0.0 ? d.scaled_signal / k : 0.0;
  return d;
}

Estimate simulate_mse(const SimConfig& config) {
  validate(config);
  const ModelParams& p = config.params;
  const double t = p.prior_precision;
  const double H = pm_weight(t, p.pm_precision);
  const double K = forecaster_weight(t, config.k);
  const double mu = p.policy.mean();

  auto squared_error = [&](std::size_t i) -> std::array<double, 1> {
    const Draw d = draw_sample(config.seed, i, config.k, p);
    const double s_p = d.theta + d.pm_noise;
    double y = d.theta + d.outcome_noise;
    double f = 0.0;
    switch (config.setting) {
      case Setting::none:
        f = optimal_forecast_opaque(d.signal, 0.0, H, K);
        break;
      case Setting::opaque:
        y += pm_action(d.x, s_p, H);
        f = optimal_forecast_opaque(d.signal, mu, H, K);
        break;
      case Setting::transparent:
        y += pm_action(d.x, s_p, H);
        f = optimal_forecast_transparent(d.signal, s_p, mu, p, config.k);
        break;
    }
    const double err = y - config.forecast_scale * f;
    return {err * err};
  };
  return reduce_samples<1>(config.n_samples, config.threads, squared_error)[0];
}

bool TotalVarianceReport::passed(double sigmas) const {
  return total.agrees_with(total_closed_form, sigmas) &&
         explained.agrees_with(explained_closed_form, sigmas) &&
         residual.agrees_with(residual_closed_form, sigmas) &&
         identity_gap.agrees_with(0.0, sigmas);
}

TotalVarianceReport verify_total_variance(const SimConfig& config) {
  validate(config);
  if (config.setting != Setting::opaque) {
    throw DomainError("total-variance check applies to the opaque setting only");
  }
  const ModelParams& p = config.params;
  const double t = p.prior_precision;
  const double k = config.k;
  const double mu = p.policy.mean();
  const double sigma2 = p.policy.variance();
  const double H = pm_weight(t, p.pm_precision);
  const double K = forecaster_weight(t, k);
  const double R = attenuation_factor(mu, t, p.pm_precision);

  // Both (1-xH) theta and its conditional mean have zero mean, so each
  // variance is estimated as a mean of squares.
  auto terms = [&](std::size_t i) -> std::array<double, 4> {
    const Draw d = draw_sample(config.seed, i, k, p);
    const double target = (1.0 - d.x * H) * d.theta;
    const double predictor = optimal_forecast_opaque(d.signal, mu, H, K);
    const double cond_var = conditional_variance_opaque(d.signal, k, mu, sigma2, p);
    const double total = target * target;
    const double explained = predictor * predictor;
    return {total, explained, cond_var, total - explained - cond_var};
  };
  const auto est = reduce_samples<4>(config.n_samples, config.threads, terms);

  TotalVarianceReport r;
  r.total = est[0];
  r.explained = est[1];
  r.residual = est[2];
  r.identity_gap = est[3];
  r.total_closed_form = H * H * sigma2 / t + R / t;
  r.explained_closed_form = R / t * (k / (t + k));
  r.residual_closed_form = H * H * sigma2 / t + R / (t + k);
  return r;
}

std::vector<double> sample_policy(const PolicyStrengthDist& dist, std::size_t n,
                                  std::uint64_t seed) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream rng(seed, i);
    out[i] = dist.quantile(rng.uniform());
  }
  return out;
}

}  // namespace infolab
