#pragma once

#include <cstddef>

#include "infolab/cost.hpp"
#include "infolab/model.hpp"

namespace infolab {

enum class SolutionKind { interior, corner };

std::string_view to_string(SolutionKind kind);

struct SolveResult {
  double k_star = 0.0;
  double objective_value = 0.0;
  SolutionKind solution_kind = SolutionKind::corner;
  // interior: |MB(k*) - C'(k*)|; corner: MB(0) - C'(0+), which is <= 0.
  double first_order_residual = 0.0;
  int iterations = 0;
  Setting setting = Setting::opaque;
};

inline constexpr double kDefaultSolveTol = 1e-10;
inline constexpr double kBracketCap = 1e12;

/// Minimizes exante_objective over k >= 0.
///
/// Returns the corner k = 0 when MB(0) <= C'(0+). Otherwise the upper end of
/// the bracket doubles from k = 1 until MB - C' changes sign, and the root is
/// bisected until the bracket collapses to adjacent doubles. The final
/// residual must satisfy |MB - C'| <= tol * max(1, C'(k*)).
///
/// Throws SolverError(invalid_cost) if C' <= 0 is met on the bracket,
/// SolverError(no_bracket) if the bracket would pass 1e12, and DomainError
/// for tol outside (0, 1e-3].
SolveResult solve(Setting setting, double mu, const ModelParams& params,
                  const CostModel& cost, double tol = kDefaultSolveTol);

/// Analytic minimizer for C(k) = c k:
///   opaque      max(0, sqrt(R/c) - t)
///   none        max(0, 1/sqrt(c) - t)
///   transparent max(0, 1/sqrt(c) - t - h)
SolveResult closed_form_linear_cost(Setting setting, double mu,
                                    const ModelParams& params, double c);

/// Default upper end of the oracle grid: 10 (t + h) + 100.
double default_oracle_k_max(const ModelParams& params);

/// Brute-force argmin of the objective on k_i = i * k_max / n_points,
/// i = 0..n_points. Verification only.
SolveResult grid_oracle(Setting setting, double mu, const ModelParams& params,
                        const CostModel& cost, double k_max,
                        std::size_t n_points);

}  // namespace infolab
