#include <doctest.h>

#include <string>

#include "infolab/errors.hpp"
#include "infolab/scenario.hpp"

using namespace infolab;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, std::string_view needle) {
  return s.find(needle) != std::string::npos;
}

constexpr std::string_view kMinimal = R"({
  "name": "m",
  "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
  "cost": {"kind": "linear", "coefficient": 0.5}
})";

}  // namespace

TEST_CASE("minimal scenario takes defaults") {
  const Scenario sc = parse_scenario(kMinimal);
  CHECK(sc.name == "m");
  CHECK(sc.params.prior_precision == 1.0);
  CHECK(sc.params.outcome_noise_var == 0.0);
  CHECK(sc.params.policy == PolicyStrengthDist::point_mass(1.0));
  CHECK(sc.mu() == 1.0);
  CHECK(sc.sigma2() == 0.0);
  CHECK(sc.cost == CostModel::linear(0.5));
  CHECK(sc.settings == std::vector<Setting>{Setting::opaque});
  CHECK(sc.tol == kDefaultSolveTol);
  CHECK_FALSE(sc.sweep);
  CHECK_FALSE(sc.simulate);
  CHECK_FALSE(sc.certify);
}

TEST_CASE("full scenario parses every block") {
  const Scenario sc = parse_scenario(R"({
    "name": "full",
    "model": {"prior_precision": 2, "pm_precision": 0.5, "outcome_noise_var": 0.1,
              "policy": {"kind": "uniform", "lower": -1, "upper": 3}},
    "cost": {"kind": "power", "coefficient": 0.2, "exponent": 1.5},
    "settings": ["transparent", "none"],
    "tol": 1e-8,
    "sweep": {"parameter": "h", "grid": [0.5, 1, 2]},
    "simulate": {"k": 0.3, "n_samples": 20000, "seed": 9, "threads": 2},
    "certify": {"checks": ["proposition1"], "n_points": 40, "seed": 3,
                "t_range": [0.5, 1], "h_range": [1, 2], "search_tries": 10}
  })");
  CHECK(sc.params.policy == PolicyStrengthDist::uniform(-1, 3));
  CHECK(sc.mu() == doctest::Approx(1.0));
  CHECK(sc.sigma2() == doctest::Approx(16.0 / 12.0));
  CHECK(sc.cost == CostModel::power(0.2, 1.5));
  CHECK(sc.settings == std::vector<Setting>{Setting::transparent, Setting::none});
  CHECK(sc.tol == 1e-8);
  REQUIRE(sc.sweep);
  CHECK(sc.sweep->parameter == SweepParameter::h);
  CHECK(sc.sweep->grid == std::vector<double>{0.5, 1, 2});
  REQUIRE(sc.simulate);
  CHECK(sc.simulate->n_samples == 20000);
  CHECK(sc.simulate->threads == 2);
  REQUIRE(sc.certify);
  CHECK(sc.certify->checks == std::vector<std::string>{"proposition1"});
  CHECK(sc.certify->box.t.hi == 1.0);
  CHECK(sc.certify->box.h.lo == 1.0);
  CHECK(sc.certify->search_tries == 10);
}

TEST_CASE("unknown keys are rejected with their path") {
  const auto msg = error_of(R"({
    "name": "m",
    "model": {"prior_precision": 1, "pm_precison": 1, "mu": 1},
    "cost": {"kind": "linear", "coefficient": 0.5}
  })");
  CHECK(contains(msg, "model.pm_precison"));
  CHECK(contains(msg, "unknown key"));

  CHECK(contains(error_of(R"({"name": "m", "colour": 1,
    "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
    "cost": {"kind": "linear", "coefficient": 0.5}})"),
                 "'colour'"));
  CHECK(contains(error_of(R"({"name": "m",
    "model": {"prior_precision": 1, "pm_precision": 1,
              "policy": {"kind": "uniform", "lower": 0, "upper": 1, "mean": 2}},
    "cost": {"kind": "linear", "coefficient": 0.5}})"),
                 "model.policy.mean"));
  CHECK(contains(error_of(R"({"name": "m",
    "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
    "cost": {"kind": "linear", "coefficient": 0.5, "exponent": 2}})"),
                 "cost.exponent"));
}

TEST_CASE("syntax errors report a line") {
  const auto msg = error_of("{\n  \"name\": \"m\",\n  \"model\": {,\n}");
  CHECK(contains(msg, "line 3"));
}

TEST_CASE("invariant violations are scenario errors") {
  auto with_model = [](std::string_view model) {
    return error_of(std::string(R"({"name": "m", "model": )") + std::string(model) +
                    R"(, "cost": {"kind": "linear", "coefficient": 0.5}})");
  };
  CHECK(contains(with_model(R"({"prior_precision": 0, "pm_precision": 1, "mu": 1})"), "model"));
  CHECK(contains(with_model(R"({"prior_precision": 1, "pm_precision": -1, "mu": 1})"), "model"));
  CHECK(contains(with_model(R"({"prior_precision": 1, "pm_precision": 1})"), "model.mu"));
  CHECK(contains(with_model(R"({"prior_precision": 1, "pm_precision": 1, "mu": 1,
                                "policy": {"kind": "point_mass", "value": 1}})"),
                 "either mu or policy"));
  CHECK(contains(with_model(R"({"prior_precision": 1, "pm_precision": 1,
                                "policy": {"kind": "uniform", "lower": 2, "upper": 1}})"),
                 "model.policy"));
  CHECK(contains(with_model(R"({"prior_precision": "1", "pm_precision": 1, "mu": 1})"),
                 "must be a number"));

  auto with_extra = [](std::string_view extra) {
    return error_of(std::string(R"({"name": "m",
      "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
      "cost": {"kind": "linear", "coefficient": 0.5}, )") +
                    std::string(extra) + "}");
  };
  CHECK(contains(with_extra(R"("tol": 0.1)"), "tol"));
  CHECK(contains(with_extra(R"("settings": ["murky"])"), "settings"));
  CHECK(contains(with_extra(R"("sweep": {"parameter": "tau", "grid": [1, 2, 3]})"),
                 "sweep.parameter"));
  CHECK(contains(with_extra(R"("sweep": {"parameter": "h", "grid": [1, 3, 2]})"),
                 "sweep.grid"));
  CHECK(contains(with_extra(R"("sweep": {"parameter": "h", "grid": [1, 2]})"), "sweep.grid"));
  CHECK(contains(with_extra(R"("simulate": {"k": 1, "n_samples": 500})"),
                 "simulate.n_samples"));
  CHECK(contains(with_extra(R"("simulate": {"k": -1})"), "simulate.k"));
  CHECK(contains(with_extra(R"("certify": {"checks": ["lemma9"]})"), "certify.checks"));
  CHECK(contains(with_extra(R"("certify": {"t_range": [0, 1]})"), "certify.t_range"));

  CHECK(contains(error_of(R"({"name": "m",
    "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
    "cost": {"kind": "linear", "coefficient": -1}})"),
                 "cost"));
  CHECK(contains(error_of(R"({"name": "m",
    "model": {"prior_precision": 1, "pm_precision": 1, "mu": 1},
    "cost": {"kind": "power", "coefficient": 1, "exponent": 0.5}})"),
                 "cost"));
}

TEST_CASE("serialize and re-parse gives the same scenario") {
  Scenario sc = parse_scenario(kMinimal);
  CHECK(parse_scenario(serialize_scenario(sc)) == sc);

  sc.params.outcome_noise_var = 0.123456789012345;
  sc.params.policy = PolicyStrengthDist::truncated_normal(0.3, 1.1, -2.0, 5.0);
  sc.cost = CostModel::power(0.7, 2.25);
  sc.settings = {Setting::none, Setting::transparent, Setting::opaque};
  sc.tol = 3e-9;
  sc.sweep = SweepBlock{SweepParameter::sigma2, {0.0, 0.1 / 3.0, 1.0}};
  sc.simulate = SimulateBlock{0.7, 123456, 99, 3};
  sc.certify = CertifyBlock{};
  sc.certify->box.t = {0.4, 0.9};
  const std::string text = serialize_scenario(sc);
  const Scenario back = parse_scenario(text);
  CHECK(back == sc);
  CHECK(serialize_scenario(back) == text);

  sc.params.policy = PolicyStrengthDist::uniform(-0.1, 0.7);
  sc.cost = CostModel::quadratic(1.5);
  CHECK(parse_scenario(serialize_scenario(sc)) == sc);
}

TEST_CASE("load_scenario reads files and reports missing ones") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ScenarioError);
}
