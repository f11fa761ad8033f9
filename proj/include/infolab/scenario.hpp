#pragma once

// Scenario files: a JSON object describing one model environment plus the
// optional blocks consumed by the `lab` subcommands.
//
//   {
//     "name": "corner-example",
//     "model": {
//       "prior_precision": 1.0,
//       "pm_precision": 1.0,
//       "outcome_noise_var": 0.0,
//       "mu": 1.0                          // or "policy": {...}, not both
//     },
//     "cost": {"kind": "linear", "coefficient": 0.5},
//     "settings": ["none", "opaque"],
//     "tol": 1e-10,
//     "sweep":    {"parameter": "sigma2", "grid": [0, 0.5, 1]},
//     "simulate": {"k": 1.0, "n_samples": 1000000, "seed": 7, "threads": 0},
//     "certify":  {"checks": ["corollary1"], "n_points": 500, "seed": 2024,
//                  "t_range": [0.2, 3], "h_range": [0.2, 3],
//                  "search_tries": 2000}
//   }
//
// policy objects:
//   {"kind": "point_mass", "value": 1}
//   {"kind": "uniform", "lower": 0, "upper": 2}
//   {"kind": "truncated_normal", "location": 1, "scale": 0.5,
//    "lower": -3, "upper": 3}
// cost objects: kind linear | quadratic | power, "coefficient", and
// "exponent" for power.
//
// Unknown keys anywhere are errors.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infolab/cost.hpp"
#include "infolab/model.hpp"
#include "infolab/solver.hpp"
#include "infolab/statics.hpp"

namespace infolab {

struct SweepBlock {
  SweepParameter parameter = SweepParameter::mu;
  std::vector<double> grid;

  bool operator==(const SweepBlock&) const = default;
};

struct SimulateBlock {
  double k = 0.0;
  std::size_t n_samples = 1000000;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  bool operator==(const SimulateBlock&) const = default;
};

struct CertifyBlock {
  std::vector<std::string> checks{"corollary1", "proposition1", "proposition3"};
  std::size_t n_points = 500;
  std::uint64_t seed = 2024;
  CertifyBox box;
  std::size_t search_tries = 2000;

  bool operator==(const CertifyBlock&) const = default;
};

struct Scenario {
  std::string name;
  ModelParams params;
  CostModel cost;
  std::vector<Setting> settings{Setting::opaque};
  double tol = kDefaultSolveTol;
  std::optional<SweepBlock> sweep;
  std::optional<SimulateBlock> simulate;
  std::optional<CertifyBlock> certify;

  double mu() const { return params.policy.mean(); }
  double sigma2() const { return params.policy.variance(); }

  bool operator==(const Scenario&) const = default;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"corollary1", "proposition1", "proposition3"};
  return names;
}

/// Parses scenario JSON text. Throws ScenarioError naming the line (syntax
/// errors) or the key path (schema and invariant errors).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace infolab
