#pragma once

// Output formats written by the `lab` tool.
//
// Every CSV starts with one metadata comment line
//   # lab <version> seed=<seed> scenario=<name>
// followed by a header row. Reals are printed with 17 significant digits so
// they round-trip exactly.
//
//   solve.csv     setting,regime,k_star,solution_kind,objective,first_order_residual,iterations
//   sweep.csv     setting,parameter,value,regime,k_star,solution_kind,objective,marginal_benefit_at_kstar,trend_to_next
//   simulate.csv  setting,k,n,mean,std_error,closed_form,z_score
//
// Certification reports are JSON (see report_to_json).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infolab/montecarlo.hpp"
#include "infolab/solver.hpp"
#include "infolab/statics.hpp"

namespace infolab {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// %.17g
std::string format_real(double v);

std::string csv_metadata_line(std::uint64_t seed, std::string_view scenario);

std::string solve_csv(const std::vector<SolveResult>& rows, std::span<const Regime> regimes,
                      std::uint64_t seed, std::string_view scenario);

std::string sweep_csv(const SweepTable& table, std::uint64_t seed, std::string_view scenario);

struct SimulationRow {
  Setting setting = Setting::opaque;
  double k = 0.0;
  Estimate estimate;
  double closed_form = 0.0;
};

std::string simulate_csv(const std::vector<SimulationRow>& rows, std::uint64_t seed,
                         std::string_view scenario);

std::string report_to_json(const CertificationReport& report);
CertificationReport report_from_json(std::string_view text);

/// Several reports in one JSON document: {"version": ..., "passed": ...,
/// "reports": [...]}.
std::string reports_to_json(const std::vector<CertificationReport>& reports);
std::vector<CertificationReport> reports_from_json(std::string_view text);

}  // namespace infolab
