#include "infolab/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Cursor over one JSON object; rejects keys it was not told about.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail("", "must be an object");
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, value] : node_.items()) {
      bool known = false;
      for (auto k : keys) known = known || k == key;
      if (!known) fail(key, "unknown key");
    }
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json& at(const std::string& key) const {
    if (!node_.contains(key)) fail(key, "missing required key");
    return node_.at(key);
  }

  double number(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_number()) fail(key, "must be a number");
    return v.get<double>();
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::uint64_t unsigned_integer(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_number_unsigned()) fail(key, "must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::string string(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_string()) fail(key, "must be a string");
    return v.get<std::string>();
  }

  Section child(const std::string& key) const { return Section(at(key), join(key)); }

  std::string join(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  [[noreturn]] void fail(std::string_view key, std::string_view msg) const {
    std::string where = key.empty() ? path_ : join(std::string(key));
    if (where.empty()) where = "<root>";
    throw ScenarioError("scenario key '" + where + "': " + std::string(msg));
  }

 private:
  const json& node_;
  std::string path_;
};

// Runs `fn`, turning model-level DomainErrors into ScenarioErrors at `key`.
template <class Fn>
auto guarded(const Section& s, std::string_view key, Fn fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    s.fail(key, e.what());
  }
}

PolicyStrengthDist parse_policy(const Section& s) {
  const std::string kind = s.string("kind");
  return guarded(s, "", [&] {
    if (kind == "point_mass") {
      s.allow_only({"kind", "value"});
      return PolicyStrengthDist::point_mass(s.number("value"));
    }
    if (kind == "uniform") {
      s.allow_only({"kind", "lower", "upper"});
      return PolicyStrengthDist::uniform(s.number("lower"), s.number("upper"));
    }
    if (kind == "truncated_normal") {
      s.allow_only({"kind", "location", "scale", "lower", "upper"});
      return PolicyStrengthDist::truncated_normal(s.number("location"), s.number("scale"),
                                                  s.number("lower"), s.number("upper"));
    }
    s.fail("kind", "expected point_mass, uniform or truncated_normal, got '" + kind + "'");
  });
}

ModelParams parse_model(const Section& s) {
  s.allow_only({"prior_precision", "pm_precision", "outcome_noise_var", "mu", "policy"});
  ModelParams p;
  p.prior_precision = s.number("prior_precision");
  p.pm_precision = s.number("pm_precision");
  p.outcome_noise_var = s.number_or("outcome_noise_var", 0.0);
  if (s.has("mu") && s.has("policy")) s.fail("mu", "give either mu or policy, not both");
  if (s.has("policy")) {
    p.policy = parse_policy(s.child("policy"));
  } else {
    p.policy = guarded(s, "mu", [&] { return PolicyStrengthDist::point_mass(s.number("mu")); });
  }
  guarded(s, "", [&] { p.validate(); });
  return p;
}

CostModel parse_cost(const Section& s) {
  const std::string kind = s.string("kind");
  CostModel c;
  if (kind == "linear" || kind == "quadratic") {
    s.allow_only({"kind", "coefficient"});
    c.kind = kind == "linear" ? CostModel::Kind::linear : CostModel::Kind::quadratic;
    c.exponent = kind == "linear" ? 1.0 : 2.0;
  } else if (kind == "power") {
    s.allow_only({"kind", "coefficient", "exponent"});
    c.kind = CostModel::Kind::power;
    c.exponent = s.number("exponent");
  } else {
    s.fail("kind", "expected linear, quadratic or power, got '" + kind + "'");
  }
  c.coefficient = s.number("coefficient");
  guarded(s, "", [&] { c.validate(); });
  return c;
}

std::vector<double> number_list(const Section& s, const std::string& key) {
  const json& v = s.at(key);
  if (!v.is_array()) s.fail(key, "must be an array of numbers");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) s.fail(key, "must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Interval parse_range(const Section& s, const std::string& key, Interval fallback) {
  if (!s.has(key)) return fallback;
  const auto v = number_list(s, key);
  if (v.size() != 2 || !(v[0] > 0.0) || !(v[1] >= v[0])) {
    s.fail(key, "must be [lo, hi] with 0 < lo <= hi");
  }
  return {v[0], v[1]};
}

SweepBlock parse_sweep(const Section& s) {
  s.allow_only({"parameter", "grid"});
  SweepBlock b;
  b.parameter = guarded(s, "parameter",
                        [&] { return parse_sweep_parameter(s.string("parameter")); });
  b.grid = number_list(s, "grid");
  if (b.grid.size() < 3) s.fail("grid", "needs at least 3 points");
  for (std::size_t i = 1; i < b.grid.size(); ++i) {
    if (!(b.grid[i] > b.grid[i - 1])) s.fail("grid", "must be strictly increasing");
  }
  return b;
}

SimulateBlock parse_simulate(const Section& s) {
  s.allow_only({"k", "n_samples", "seed", "threads"});
  SimulateBlock b;
  b.k = s.number("k");
  if (!(b.k >= 0.0)) s.fail("k", "must be non-negative");
  if (s.has("n_samples")) b.n_samples = s.unsigned_integer("n_samples");
  if (b.n_samples < 10000) s.fail("n_samples", "must be at least 10000");
  if (s.has("seed")) b.seed = s.unsigned_integer("seed");
  if (s.has("threads")) b.threads = static_cast<unsigned>(s.unsigned_integer("threads"));
  return b;
}

CertifyBlock parse_certify(const Section& s) {
  s.allow_only({"checks", "n_points", "seed", "t_range", "h_range", "search_tries"});
  CertifyBlock b;
  if (s.has("checks")) {
    const json& v = s.at("checks");
    if (!v.is_array() || v.empty()) s.fail("checks", "must be a non-empty array of names");
    b.checks.clear();
    for (const json& x : v) {
      if (!x.is_string()) s.fail("checks", "must be an array of strings");
      const auto name = x.get<std::string>();
      bool known = false;
      for (const auto& k : known_checks()) known = known || k == name;
      if (!known) s.fail("checks", "unknown check '" + name + "'");
      b.checks.push_back(name);
    }
  }
  if (s.has("n_points")) b.n_points = s.unsigned_integer("n_points");
  if (b.n_points == 0) s.fail("n_points", "must be positive");
  if (s.has("seed")) b.seed = s.unsigned_integer("seed");
  b.box.t = parse_range(s, "t_range", b.box.t);
  b.box.h = parse_range(s, "h_range", b.box.h);
  if (s.has("search_tries")) b.search_tries = s.unsigned_integer("search_tries");
  return b;
}

ordered_json policy_to_json(const PolicyStrengthDist& d) {
  ordered_json j;
  j["kind"] = to_string(d.kind());
  switch (d.kind()) {
    case PolicyStrengthDist::Kind::point_mass:
      j["value"] = d.mean();
      break;
    case PolicyStrengthDist::Kind::uniform:
      j["lower"] = d.lower();
      j["upper"] = d.upper();
      break;
    case PolicyStrengthDist::Kind::truncated_normal:
      j["location"] = d.location();
      j["scale"] = d.scale();
      j["lower"] = d.lower();
      j["upper"] = d.upper();
      break;
  }
  return j;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  const Section s(root, "");
  s.allow_only({"name", "model", "cost", "settings", "tol", "sweep", "simulate", "certify"});

  Scenario sc;
  sc.name = s.string("name");
  sc.params = parse_model(s.child("model"));
  sc.cost = parse_cost(s.child("cost"));
  if (s.has("settings")) {
    const json& v = s.at("settings");
    if (!v.is_array() || v.empty()) s.fail("settings", "must be a non-empty array");
    sc.settings.clear();
    for (const json& x : v) {
      if (!x.is_string()) s.fail("settings", "must be an array of strings");
      sc.settings.push_back(
          guarded(s, "settings", [&] { return parse_setting(x.get<std::string>()); }));
    }
  }
  sc.tol = s.number_or("tol", kDefaultSolveTol);
  if (!(sc.tol > 0.0 && sc.tol <= 1e-3)) s.fail("tol", "must lie in (0, 1e-3]");
  if (s.has("sweep")) sc.sweep = parse_sweep(s.child("sweep"));
  if (s.has("simulate")) sc.simulate = parse_simulate(s.child("simulate"));
  if (s.has("certify")) sc.certify = parse_certify(s.child("certify"));
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& sc) {
  ordered_json j;
  j["name"] = sc.name;
  ordered_json model;
  model["prior_precision"] = sc.params.prior_precision;
  model["pm_precision"] = sc.params.pm_precision;
  model["outcome_noise_var"] = sc.params.outcome_noise_var;
  model["policy"] = policy_to_json(sc.params.policy);
  j["model"] = model;
  ordered_json cost;
  cost["kind"] = to_string(sc.cost.kind);
  cost["coefficient"] = sc.cost.coefficient;
  if (sc.cost.kind == CostModel::Kind::power) cost["exponent"] = sc.cost.exponent;
  j["cost"] = cost;
  ordered_json settings = ordered_json::array();
  for (Setting s : sc.settings) settings.push_back(to_string(s));
  j["settings"] = settings;
  j["tol"] = sc.tol;
  if (sc.sweep) {
    j["sweep"] = {{"parameter", to_string(sc.sweep->parameter)}, {"grid", sc.sweep->grid}};
  }
  if (sc.simulate) {
    ordered_json sim;
    sim["k"] = sc.simulate->k;
    sim["n_samples"] = sc.simulate->n_samples;
    sim["seed"] = sc.simulate->seed;
    sim["threads"] = sc.simulate->threads;
    j["simulate"] = sim;
  }
  if (sc.certify) {
    ordered_json c;
    c["checks"] = sc.certify->checks;
    c["n_points"] = sc.certify->n_points;
    c["seed"] = sc.certify->seed;
    c["t_range"] = {sc.certify->box.t.lo, sc.certify->box.t.hi};
    c["h_range"] = {sc.certify->box.h.lo, sc.certify->box.h.hi};
    c["search_tries"] = sc.certify->search_tries;
    j["certify"] = c;
  }
  return j.dump(2) + "\n";
}

}  // namespace infolab
