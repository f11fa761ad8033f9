#include "infolab/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_to_json(const ParamPoint& p) {
  return {{"mu", p.mu}, {"t", p.t}, {"h", p.h}};
}

ParamPoint point_from_json(const ordered_json& j) {
  return {j.at("mu").get<double>(), j.at("t").get<double>(), j.at("h").get<double>()};
}

ordered_json to_ordered(const CertificationReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["seed"] = r.seed;
  j["cost"] = r.cost;
  j["points_sampled"] = r.points_sampled;
  j["points_checked"] = r.points_checked;
  j["comparisons"] = r.comparisons;
  ordered_json tallies = ordered_json::object();
  for (const auto& [k, v] : r.tallies) tallies[k] = v;
  j["tallies"] = tallies;
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"check", c.check},
                   {"point", point_to_json(c.point)},
                   {"expected", c.expected},
                   {"observed", c.observed}});
  }
  j["counterexamples"] = ces;
  ordered_json fs = ordered_json::array();
  for (const auto& f : r.findings) {
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : f.values) values[k] = v;
    fs.push_back({{"label", f.label}, {"point", point_to_json(f.point)}, {"values", values}});
  }
  j["findings"] = fs;
  return j;
}

CertificationReport from_ordered(const ordered_json& j) {
  CertificationReport r;
  r.name = j.at("name").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.cost = j.at("cost").get<std::string>();
  r.points_sampled = j.at("points_sampled").get<std::size_t>();
  r.points_checked = j.at("points_checked").get<std::size_t>();
  r.comparisons = j.at("comparisons").get<std::size_t>();
  for (const auto& [k, v] : j.at("tallies").items()) r.tallies[k] = v.get<std::size_t>();
  for (const auto& c : j.at("counterexamples")) {
    r.counterexamples.push_back({c.at("check").get<std::string>(),
                                 point_from_json(c.at("point")),
                                 c.at("expected").get<std::string>(),
                                 c.at("observed").get<double>()});
  }
  for (const auto& f : j.at("findings")) {
    Finding finding{f.at("label").get<std::string>(), point_from_json(f.at("point")), {}};
    for (const auto& [k, v] : f.at("values").items()) finding.values[k] = v.get<double>();
    r.findings.push_back(std::move(finding));
  }
  return r;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_metadata_line(std::uint64_t seed, std::string_view scenario) {
  std::ostringstream os;
  os << "# lab " << kToolVersion << " seed=" << seed << " scenario=" << scenario << "\n";
  return os.str();
}

std::string solve_csv(const std::vector<SolveResult>& rows, std::span<const Regime> regimes,
                      std::uint64_t seed, std::string_view scenario) {
  std::ostringstream os;
  os << csv_metadata_line(seed, scenario);
  os << "setting,regime,k_star,solution_kind,objective,first_order_residual,iterations\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SolveResult& r = rows[i];
    os << to_string(r.setting) << ',' << to_string(regimes[i]) << ',' << format_real(r.k_star)
       << ',' << to_string(r.solution_kind) << ',' << format_real(r.objective_value) << ','
       << format_real(r.first_order_residual) << ',' << r.iterations << '\n';
  }
  return os.str();
}

std::string sweep_csv(const SweepTable& table, std::uint64_t seed, std::string_view scenario) {
  std::ostringstream os;
  os << csv_metadata_line(seed, scenario);
  os << "setting,parameter,value,regime,k_star,solution_kind,objective,"
        "marginal_benefit_at_kstar,trend_to_next\n";
  for (const SweepSeries& s : table.series) {
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const SweepRow& r = s.rows[i];
      os << to_string(s.setting) << ',' << to_string(table.parameter) << ','
         << format_real(r.value) << ',' << to_string(r.regime) << ','
         << format_real(r.result.k_star) << ',' << to_string(r.result.solution_kind) << ','
         << format_real(r.result.objective_value) << ','
         << format_real(r.marginal_benefit_at_kstar) << ','
         << (i < s.signs.size() ? to_string(s.signs[i]) : std::string_view{}) << '\n';
    }
  }
  return os.str();
}

std::string simulate_csv(const std::vector<SimulationRow>& rows, std::uint64_t seed,
                         std::string_view scenario) {
  std::ostringstream os;
  os << csv_metadata_line(seed, scenario);
  os << "setting,k,n,mean,std_error,closed_form,z_score\n";
  for (const SimulationRow& r : rows) {
    os << to_string(r.setting) << ',' << format_real(r.k) << ',' << r.estimate.n << ','
       << format_real(r.estimate.mean) << ',' << format_real(r.estimate.std_error) << ','
       << format_real(r.closed_form) << ',' << format_real(r.estimate.z_score(r.closed_form))
       << '\n';
  }
  return os.str();
}

std::string report_to_json(const CertificationReport& report) {
  return to_ordered(report).dump(2) + "\n";
}

CertificationReport report_from_json(std::string_view text) {
  try {
    return from_ordered(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string reports_to_json(const std::vector<CertificationReport>& reports) {
  ordered_json j;
  j["tool"] = "lab";
  j["version"] = kToolVersion;
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  j["passed"] = all;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_ordered(r));
  j["reports"] = arr;
  return j.dump(2) + "\n";
}

std::vector<CertificationReport> reports_from_json(std::string_view text) {
  try {
    const ordered_json j = parse(text);
    std::vector<CertificationReport> out;
    for (const auto& r : j.at("reports")) out.push_back(from_ordered(r));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace infolab
