#include "infolab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

std::string describe(Setting setting, double mu, const ModelParams& params) {
  return std::string(to_string(setting)) + " setting at mu=" + std::to_string(mu) +
         ", t=" + std::to_string(params.prior_precision) +
         ", h=" + std::to_string(params.pm_precision);
}

SolveResult finish(Setting setting, double mu, const ModelParams& params,
                   const CostModel& cost, double k, SolutionKind kind,
                   int iterations) {
  SolveResult r;
  r.setting = setting;
  r.k_star = k;
  r.solution_kind = kind;
  r.iterations = iterations;
  r.objective_value = exante_objective(k, setting, mu, params, cost);
  const double gap = marginal_benefit(k, setting, mu, params) - cost.marginal(k);
  r.first_order_residual = kind == SolutionKind::corner ? gap : std::abs(gap);
  return r;
}

}  // namespace

std::string_view to_string(SolutionKind kind) {
  return kind == SolutionKind::interior ? "interior" : "corner";
}

SolveResult solve(Setting setting, double mu, const ModelParams& params,
                  const CostModel& cost, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw DomainError("solver tolerance must lie in (0, 1e-3]");
  }
  params.validate();

  // g(k) = MB(k) - C'(k) is strictly decreasing when R > 0.
  auto g = [&](double k) {
    const double mc = cost.marginal(k);
    if (k > 0.0 && !(mc > 0.0)) {
      throw SolverError(SolverError::Kind::invalid_cost,
                        "marginal cost is not positive at k=" + std::to_string(k) +
                            " (cost must be increasing and convex)");
    }
    return marginal_benefit(k, setting, mu, params) - mc;
  };

  const double g0 = marginal_benefit(0.0, setting, mu, params) - cost.marginal_at_zero();
  if (g0 <= 0.0) {
    return finish(setting, mu, params, cost, 0.0, SolutionKind::corner, 0);
  }

  int iterations = 0;
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) > 0.0) {
    ++iterations;
    lo = hi;
    hi *= 2.0;
    if (hi > kBracketCap) {
      throw SolverError(SolverError::Kind::no_bracket,
                        "no sign change of MB - C' below k=1e12 for " +
                            describe(setting, mu, params));
    }
  }

  // g(lo) > 0 >= g(hi). Bisect to full double precision.
  double k = hi;
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      k = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
      break;
    }
    ++iterations;
    const double gm = g(mid);
    if (gm == 0.0) {
      k = mid;
      break;
    }
    (gm > 0.0 ? lo : hi) = mid;
  }

  SolveResult r = finish(setting, mu, params, cost, k, SolutionKind::interior, iterations);
  if (r.first_order_residual > tol * std::max(1.0, cost.marginal(k))) {
    throw SolverError(SolverError::Kind::residual,
                      "first-order residual " + std::to_string(r.first_order_residual) +
                          " above tolerance for " + describe(setting, mu, params));
  }
  return r;
}

SolveResult closed_form_linear_cost(Setting setting, double mu,
                                    const ModelParams& params, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("linear cost coefficient must be positive");
  }
  params.validate();
  const double t = params.prior_precision;
  const double h = params.pm_precision;
  double unconstrained = 0.0;
  switch (setting) {
    case Setting::opaque:
      unconstrained = std::sqrt(attenuation_factor(mu, t, h)) / std::sqrt(c) - t;
      break;
    case Setting::none:
      unconstrained = 1.0 / std::sqrt(c) - t;
      break;
    case Setting::transparent:
      unconstrained = 1.0 / std::sqrt(c) - t - h;
      break;
  }
  const bool interior = unconstrained > 0.0;
  return finish(setting, mu, params, CostModel::linear(c), interior ? unconstrained : 0.0,
                interior ? SolutionKind::interior : SolutionKind::corner, 0);
}

double default_oracle_k_max(const ModelParams& params) {
  return 10.0 * (params.prior_precision + params.pm_precision) + 100.0;
}

SolveResult grid_oracle(Setting setting, double mu, const ModelParams& params,
                        const CostModel& cost, double k_max,
                        std::size_t n_points) {
  params.validate();
  if (!(k_max > 0.0) || n_points == 0) {
    throw DomainError("grid oracle needs k_max > 0 and n_points > 0");
  }
  const double step = k_max / static_cast<double>(n_points);
  double best_k = 0.0;
  double best = exante_objective(0.0, setting, mu, params, cost);
  for (std::size_t i = 1; i <= n_points; ++i) {
    const double k = static_cast<double>(i) * step;
    const double v = exante_objective(k, setting, mu, params, cost);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  return finish(setting, mu, params, cost, best_k,
                best_k > 0.0 ? SolutionKind::interior : SolutionKind::corner,
                static_cast<int>(std::min<std::size_t>(n_points, 1u << 30)));
}

}  // namespace infolab
