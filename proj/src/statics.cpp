#include "infolab/statics.hpp"

#include <cmath>
#include <sstream>

#include "infolab/errors.hpp"
#include "infolab/rng.hpp"

namespace infolab {

namespace {

std::string cost_label(const CostModel& cost) {
  std::ostringstream os;
  os << to_string(cost.kind) << "(c=" << cost.coefficient;
  if (cost.kind == CostModel::Kind::power) os << ", p=" << cost.exponent;
  os << ")";
  return os.str();
}

double solve_k(Setting setting, const ParamPoint& pt, const CostModel& cost, double tol) {
  return solve(setting, pt.mu, pt.params(), cost, tol).k_star;
}

bool near_boundary(const ParamPoint& pt) {
  const double threshold = (pt.t + pt.h) / pt.h;
  return std::abs(pt.mu) <= kBoundaryTol ||
         std::abs(pt.mu - threshold) <= kBoundaryTol * threshold;
}

double bumped(double v) { return v + kRelativeBump * std::abs(v); }

enum class Expect { up, down, any };

const char* describe(Expect e, bool strict) {
  if (e == Expect::up) return strict ? ">0" : ">=0";
  if (e == Expect::down) return strict ? "<0" : "<=0";
  return "any";
}

bool conforms(Expect e, double delta, bool strict) {
  switch (e) {
    case Expect::up:
      return strict ? delta > kDeadBand : delta >= -kDeadBand;
    case Expect::down:
      return strict ? delta < -kDeadBand : delta <= kDeadBand;
    case Expect::any:
      return true;
  }
  return true;
}

struct SignRow {
  Expect mu, h, t;
};

SignRow expected_signs(Regime regime) {
  switch (regime) {
    case Regime::reinforcing:
      return {Expect::down, Expect::up, Expect::down};
    case Regime::preventive:
      return {Expect::down, Expect::down, Expect::any};
    case Regime::overreacting:
      return {Expect::up, Expect::up, Expect::down};
    case Regime::boundary:
      break;
  }
  return {Expect::any, Expect::any, Expect::any};
}

}  // namespace

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::mu:
      return "mu";
    case SweepParameter::h:
      return "h";
    case SweepParameter::t:
      return "t";
    case SweepParameter::sigma2:
      return "sigma2";
    case SweepParameter::c:
      return "c";
  }
  return "?";
}

std::string_view to_string(Trend trend) {
  switch (trend) {
    case Trend::increasing:
      return "increasing";
    case Trend::decreasing:
      return "decreasing";
    case Trend::flat:
      return "flat";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (auto p : {SweepParameter::mu, SweepParameter::h, SweepParameter::t,
                 SweepParameter::sigma2, SweepParameter::c}) {
    if (to_string(p) == name) return p;
  }
  throw DomainError("unknown sweep parameter '" + std::string(name) +
                    "' (expected mu, h, t, sigma2 or c)");
}

Trend classify_change(double from, double to, double dead_band) {
  const double d = to - from;
  if (d > dead_band) return Trend::increasing;
  if (d < -dead_band) return Trend::decreasing;
  return Trend::flat;
}

namespace {

struct GridPoint {
  ModelParams params;
  CostModel cost;
  double mu = 0.0;
};

GridPoint substitute(const SweepSpec& spec, double v) {
  GridPoint g{spec.params, spec.cost, spec.mu};
  switch (spec.parameter) {
    case SweepParameter::mu:
      g.mu = v;
      break;
    case SweepParameter::h:
      g.params.pm_precision = v;
      break;
    case SweepParameter::t:
      g.params.prior_precision = v;
      break;
    case SweepParameter::sigma2:
      // k* never depends on the policy variance; only validity is checked.
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError("sigma2 grid value must be non-negative");
      }
      break;
    case SweepParameter::c:
      g.cost.coefficient = v;
      break;
  }
  g.params.validate();
  g.cost.validate();
  if (!std::isfinite(g.mu)) throw DomainError("mu grid value must be finite");
  return g;
}

}  // namespace

void SweepSpec::validate() const {
  if (grid.size() < 3) throw DomainError("sweep grid needs at least 3 points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError("sweep grid must be strictly increasing");
    }
  }
  if (settings.empty()) throw DomainError("sweep needs at least one setting");
  if (!(sigma2 >= 0.0)) throw DomainError("baseline sigma2 must be non-negative");
  for (double v : grid) substitute(*this, v);
}

SweepTable sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable table;
  table.parameter = spec.parameter;
  for (Setting setting : spec.settings) {
    SweepSeries series;
    series.setting = setting;
    series.rows.reserve(spec.grid.size());
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
      const double v = spec.grid[i];
      const GridPoint g = substitute(spec, v);
      SweepRow row;
      row.value = v;
      row.regime = classify_regime(g.mu, g.params.prior_precision, g.params.pm_precision);
      try {
        row.result = solve(setting, g.mu, g.params, g.cost, spec.tol);
      } catch (const SolverError& e) {
        std::ostringstream os;
        os.precision(17);
        os << "sweep over " << to_string(spec.parameter) << " failed at grid index " << i
           << " (value " << v << "): " << e.what();
        throw SolverError(e.kind(), os.str());
      }
      row.marginal_benefit_at_kstar =
          marginal_benefit(row.result.k_star, setting, g.mu, g.params);
      series.rows.push_back(row);
    }
    for (std::size_t i = 1; i < series.rows.size(); ++i) {
      series.signs.push_back(classify_change(series.rows[i - 1].result.k_star,
                                             series.rows[i].result.k_star));
    }
    table.series.push_back(std::move(series));
  }
  return table;
}

ModelParams ParamPoint::params() const {
  ModelParams p;
  p.prior_precision = t;
  p.pm_precision = h;
  p.outcome_noise_var = 0.0;
  p.policy = PolicyStrengthDist::point_mass(mu);
  return p;
}

std::vector<ParamPoint> seeded_points(const CertifyBox& box,
                                      std::span<const Interval> rho_bands,
                                      std::size_t n, std::uint64_t seed) {
  if (rho_bands.empty()) throw DomainError("at least one rho band is required");
  if (!(box.t.lo > 0.0 && box.t.hi >= box.t.lo && box.h.lo > 0.0 && box.h.hi >= box.h.lo)) {
    throw DomainError("certification box needs positive, ordered t and h ranges");
  }
  std::vector<ParamPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream rng(seed, i);
    const Interval& band = rho_bands[i % rho_bands.size()];
    ParamPoint pt;
    pt.t = box.t.lo + (box.t.hi - box.t.lo) * rng.uniform();
    pt.h = box.h.lo + (box.h.hi - box.h.lo) * rng.uniform();
    const double rho = band.lo + (band.hi - band.lo) * rng.uniform();
    pt.mu = rho * (pt.t + pt.h) / pt.h;
    out.push_back(pt);
  }
  return out;
}

CertificationReport certify_corollary1(const CertifyBox& box, const CostModel& cost,
                                       std::size_t n_random, std::uint64_t seed,
                                       double tol) {
  static constexpr Interval kBands[] = {{-2.0, -0.01}, {0.01, 0.99}, {1.01, 3.0}};
  const auto points = seeded_points(box, kBands, n_random, seed);

  CertificationReport rep;
  rep.name = "corollary1";
  rep.seed = seed;
  rep.cost = cost_label(cost);
  rep.points_sampled = points.size();
  for (const char* key : {"skipped_boundary", "skipped_regime_crossing", "strict_checks",
                          "weak_checks", "preventive_t_increasing",
                          "preventive_t_decreasing", "preventive_t_flat"}) {
    rep.tallies[key] = 0;
  }
  bool seen_t_up = false;
  bool seen_t_down = false;

  for (const ParamPoint& pt : points) {
    if (near_boundary(pt)) {
      ++rep.tallies["skipped_boundary"];
      continue;
    }
    const Regime regime = classify_regime(pt.mu, pt.t, pt.h);
    const SignRow want = expected_signs(regime);
    const double k0 = solve_k(Setting::opaque, pt, cost, tol);
    ++rep.points_checked;

    struct Bump {
      const char* name;
      ParamPoint moved;
      Expect expect;
    };
    const Bump bumps[] = {
        {"dk/dmu", {bumped(pt.mu), pt.t, pt.h}, want.mu},
        {"dk/dh", {pt.mu, pt.t, bumped(pt.h)}, want.h},
        {"dk/dt", {pt.mu, bumped(pt.t), pt.h}, want.t},
    };
    for (const Bump& b : bumps) {
      if (classify_regime(b.moved.mu, b.moved.t, b.moved.h) != regime ||
          near_boundary(b.moved)) {
        ++rep.tallies["skipped_regime_crossing"];
        continue;
      }
      const double k1 = solve_k(Setting::opaque, b.moved, cost, tol);
      const double delta = k1 - k0;
      const bool strict = k0 > 0.0 && k1 > 0.0;

      if (b.expect == Expect::any) {
        const Trend observed = classify_change(k0, k1);
        ++rep.tallies["preventive_t_" + std::string(to_string(observed))];
        const bool up = observed == Trend::increasing;
        const bool down = observed == Trend::decreasing;
        if ((up && !seen_t_up) || (down && !seen_t_down)) {
          (up ? seen_t_up : seen_t_down) = true;
          rep.findings.push_back({up ? "preventive_t_increasing" : "preventive_t_decreasing",
                                  pt,
                                  {{"k_star", k0}, {"k_star_bumped_t", k1}, {"delta", delta}}});
        }
        continue;
      }

      ++rep.comparisons;
      ++rep.tallies[strict ? "strict_checks" : "weak_checks"];
      if (!conforms(b.expect, delta, strict)) {
        rep.counterexamples.push_back({std::string(to_string(regime)) + " " + b.name, pt,
                                       describe(b.expect, strict), delta});
      }
    }
  }
  return rep;
}

std::vector<ParamPoint> proposition1_points(const CertifyBox& box, std::size_t n,
                                            std::uint64_t seed) {
  static constexpr Interval kBands[] = {{-2.0, -0.01}, {0.01, 1.99}, {2.01, 4.0}};
  return seeded_points(box, kBands, n, seed);
}

CertificationReport certify_proposition1(std::span<const ParamPoint> points,
                                         const CostModel& cost, double tol) {
  CertificationReport rep;
  rep.name = "proposition1";
  rep.cost = cost_label(cost);
  rep.points_sampled = points.size();
  rep.tallies = {{"attenuating", 0}, {"amplifying", 0}, {"neutral", 0}};

  for (const ParamPoint& pt : points) {
    const double R = attenuation_factor(pt.mu, pt.t, pt.h);
    const double upper = 2.0 * (pt.t + pt.h) / pt.h;
    const bool in_band = pt.mu > 0.0 && pt.mu < upper;
    // R < 1 and the mu band are the same condition up to rounding at the
    // band edges.
    if (std::abs(R - 1.0) > kBoundaryTol && (R < 1.0) != in_band) {
      rep.counterexamples.push_back(
          {"R<1 iff 0<mu<2(t+h)/h", pt, in_band ? "R<1" : "R>=1", R});
    }

    const double k_opaque = solve_k(Setting::opaque, pt, cost, tol);
    const double k_none = solve_k(Setting::none, pt, cost, tol);
    const double delta = k_opaque - k_none;
    ++rep.points_checked;
    ++rep.comparisons;

    if (std::abs(R - 1.0) <= kBoundaryTol) {
      ++rep.tallies["neutral"];
      if (std::abs(delta) > kDeadBand) {
        rep.counterexamples.push_back({"k*_opaque == k*_none", pt, "=0", delta});
      }
    } else if (R < 1.0) {
      ++rep.tallies["attenuating"];
      if (delta > kDeadBand) {
        rep.counterexamples.push_back({"k*_opaque <= k*_none", pt, "<=0", delta});
      }
    } else {
      ++rep.tallies["amplifying"];
      if (delta < -kDeadBand) {
        rep.counterexamples.push_back({"k*_opaque >= k*_none", pt, ">=0", delta});
      }
    }
  }
  return rep;
}

std::vector<ParamPoint> proposition3_points(const CertifyBox& box, std::size_t n,
                                            std::uint64_t seed) {
  static constexpr Interval kBands[] = {{-2.0, 0.0}, {2.0, 4.0}};
  return seeded_points(box, kBands, n, seed);
}

CertificationReport certify_proposition3(std::span<const ParamPoint> points,
                                         const CostModel& cost, const CertifyBox& box,
                                         std::uint64_t search_seed,
                                         std::size_t search_tries, double tol) {
  static constexpr double kGrid[] = {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0};

  CertificationReport rep;
  rep.name = "proposition3";
  rep.seed = search_seed;
  rep.cost = cost_label(cost);
  rep.points_sampled = points.size();
  rep.tallies = {{"excluded_preventive_band", 0}, {"preventive_raise_found", 0},
                 {"search_tries", 0}};

  for (const ParamPoint& pt : points) {
    const ModelParams p = pt.params();
    const double upper = 2.0 * (pt.t + pt.h) / pt.h;
    if (pt.mu > 0.0 && pt.mu < upper) {
      ++rep.tallies["excluded_preventive_band"];
      const double k_op = solve_k(Setting::opaque, pt, cost, tol);
      const double k_tr = solve_k(Setting::transparent, pt, cost, tol);
      rep.findings.push_back({"excluded_point", pt,
                              {{"k_star_opaque", k_op}, {"k_star_transparent", k_tr}}});
      continue;
    }
    ++rep.points_checked;
    const double k_op = solve_k(Setting::opaque, pt, cost, tol);
    const double k_tr = solve_k(Setting::transparent, pt, cost, tol);

    std::vector<double> ks(std::begin(kGrid), std::end(kGrid));
    ks.push_back(k_op);
    ks.push_back(k_tr);
    for (double k : ks) {
      ++rep.comparisons;
      const double gap = marginal_benefit(k, Setting::transparent, pt.mu, p) -
                         marginal_benefit(k, Setting::opaque, pt.mu, p);
      if (gap > 0.0) {
        rep.counterexamples.push_back(
            {"MB_transparent(k) <= MB_opaque(k) at k=" + std::to_string(k), pt, "<=0", gap});
      }
    }
    ++rep.comparisons;
    if (k_tr - k_op > kDeadBand) {
      rep.counterexamples.push_back({"k*_transparent <= k*_opaque", pt, "<=0", k_tr - k_op});
    }
  }

  // Outside the certified band disclosure can raise k*; look for a witness.
  static constexpr Interval kPreventive[] = {{0.01, 0.99}};
  const auto candidates = seeded_points(box, kPreventive, search_tries, search_seed);
  for (const ParamPoint& pt : candidates) {
    ++rep.tallies["search_tries"];
    const double k_op = solve_k(Setting::opaque, pt, cost, tol);
    const double k_tr = solve_k(Setting::transparent, pt, cost, tol);
    if (k_tr - k_op > kDeadBand) {
      rep.tallies["preventive_raise_found"] = 1;
      rep.findings.push_back({"preventive_transparency_raises_k", pt,
                              {{"k_star_opaque", k_op}, {"k_star_transparent", k_tr}}});
      break;
    }
  }
  return rep;
}

}  // namespace infolab
