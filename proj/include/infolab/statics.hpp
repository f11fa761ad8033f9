#pragma once

// Comparative statics of the optimal precision k*: parameter sweeps and
// seeded certification of the sign patterns the model predicts.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "infolab/cost.hpp"
#include "infolab/model.hpp"
#include "infolab/solver.hpp"

namespace infolab {

inline constexpr double kDeadBand = 1e-9;
inline constexpr double kRelativeBump = 1e-4;
inline constexpr double kBoundaryTol = 1e-12;

enum class SweepParameter { mu, h, t, sigma2, c };
enum class Trend { increasing, decreasing, flat };

std::string_view to_string(SweepParameter p);
std::string_view to_string(Trend trend);
SweepParameter parse_sweep_parameter(std::string_view name);

/// Sign of `to - from` with a symmetric dead-band.
Trend classify_change(double from, double to, double dead_band = kDeadBand);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::mu;
  std::vector<double> grid;
  ModelParams params;
  CostModel cost;
  double mu = 0.0;      // baseline mean of x
  double sigma2 = 0.0;  // baseline variance of x
  std::vector<Setting> settings{Setting::opaque};
  double tol = kDefaultSolveTol;

  /// Grid strictly increasing with at least 3 points, every substituted
  /// value valid for the model. Throws DomainError otherwise.
  void validate() const;
};

struct SweepRow {
  double value = 0.0;
  Regime regime = Regime::boundary;
  SolveResult result;
  double marginal_benefit_at_kstar = 0.0;
};

struct SweepSeries {
  Setting setting = Setting::opaque;
  std::vector<SweepRow> rows;  // one per grid point
  std::vector<Trend> signs;    // k* trend between rows i and i+1
};

struct SweepTable {
  SweepParameter parameter = SweepParameter::mu;
  std::vector<SweepSeries> series;  // one per requested setting
};

/// Solves k* at every grid point for every setting. Solver errors are
/// rethrown with the offending grid point in the message.
SweepTable sweep(const SweepSpec& spec);

// --- certification -------------------------------------------------------

struct ParamPoint {
  double mu = 0.0;
  double t = 1.0;
  double h = 1.0;

  ModelParams params() const;
  bool operator==(const ParamPoint&) const = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
};

/// Sampling box for certification. t and h are uniform on their ranges; mu is
/// drawn through the scaled intervention strength rho = mu h/(t+h), so the
/// regimes are rho < 0, 0 < rho < 1 and rho > 1 independent of (t, h).
struct CertifyBox {
  Interval t{0.2, 3.0};
  Interval h{0.2, 3.0};

  bool operator==(const CertifyBox&) const = default;
};

/// Point i takes its rho from band i mod bands.size(), so every band gets an
/// equal share of the n points.
std::vector<ParamPoint> seeded_points(const CertifyBox& box,
                                      std::span<const Interval> rho_bands,
                                      std::size_t n, std::uint64_t seed);

struct Counterexample {
  std::string check;
  ParamPoint point;
  std::string expected;
  double observed = 0.0;

  bool operator==(const Counterexample&) const = default;
};

/// Descriptive result that is not part of the pass/fail verdict.
struct Finding {
  std::string label;
  ParamPoint point;
  std::map<std::string, double> values;

  bool operator==(const Finding&) const = default;
};

struct CertificationReport {
  std::string name;
  std::uint64_t seed = 0;
  std::string cost;
  std::size_t points_sampled = 0;
  std::size_t points_checked = 0;
  std::size_t comparisons = 0;
  std::map<std::string, std::size_t> tallies;
  std::vector<Counterexample> counterexamples;
  std::vector<Finding> findings;

  bool passed() const { return counterexamples.empty(); }
  bool operator==(const CertificationReport&) const = default;
};

/// Finite-difference signs of k* in mu, h and t against the regime table:
///   reinforcing  dk/dmu <= 0, dk/dh >= 0, dk/dt <= 0
///   preventive   dk/dmu <= 0, dk/dh <= 0, dk/dt unrestricted
///   overreacting dk/dmu >= 0, dk/dh >= 0, dk/dt <= 0
/// Signs must be strict (beyond the dead-band) when k* > 0 at both points,
/// weak otherwise. Bumps that leave the regime are skipped. Observed t-signs
/// in the preventive regime are tallied and one example of each is recorded.
CertificationReport certify_corollary1(const CertifyBox& box, const CostModel& cost,
                                       std::size_t n_random, std::uint64_t seed,
                                       double tol = kDefaultSolveTol);

/// k*_opaque <= k*_none when 0 < mu < 2(t+h)/h, >= otherwise.
CertificationReport certify_proposition1(std::span<const ParamPoint> points,
                                         const CostModel& cost,
                                         double tol = kDefaultSolveTol);

/// Default points for certify_proposition1: rho in [-2,-0.01], [0.01,1.99]
/// and [2.01,4].
std::vector<ParamPoint> proposition1_points(const CertifyBox& box, std::size_t n,
                                            std::uint64_t seed);

/// For mu <= 0 or mu >= 2(t+h)/h: MB_transparent(k) <= MB_opaque(k) on a k
/// grid and k*_transparent <= k*_opaque. Other points are excluded and
/// tallied. A seeded search over the preventive regime then looks for a point
/// where disclosure strictly raises k*; the first hit is recorded as a
/// finding, or the tally `preventive_raise_found` stays 0.
CertificationReport certify_proposition3(std::span<const ParamPoint> points,
                                         const CostModel& cost, const CertifyBox& box,
                                         std::uint64_t search_seed,
                                         std::size_t search_tries = 2000,
                                         double tol = kDefaultSolveTol);

/// Default points for certify_proposition3: rho in [-2, 0] and [2, 4].
std::vector<ParamPoint> proposition3_points(const CertifyBox& box, std::size_t n,
                                            std::uint64_t seed);

}  // namespace infolab
