#include <doctest.h>

#include "infolab/cost.hpp"
#include "infolab/errors.hpp"

using namespace infolab;

TEST_CASE("cost values and marginals") {
  const auto lin = CostModel::linear(0.5);
  CHECK(lin.value(0.0) == 0.0);
  CHECK(lin.value(3.0) == 1.5);
  CHECK(lin.marginal(0.0) == 0.5);
  CHECK(lin.marginal(7.0) == 0.5);

  const auto quad = CostModel::quadratic(0.25);
  CHECK(quad.value(2.0) == 0.5);
  CHECK(quad.marginal(2.0) == 0.5);
  CHECK(quad.marginal_at_zero() == 0.0);

  const auto pw = CostModel::power(2.0, 3.0);
  CHECK(pw.value(2.0) == doctest::Approx(16.0));
  CHECK(pw.marginal(2.0) == doctest::Approx(24.0));
  CHECK(pw.marginal_at_zero() == 0.0);
  CHECK(CostModel::power(2.0, 1.0).marginal_at_zero() == 2.0);
}

TEST_CASE("marginal cost matches finite differences and is non-decreasing") {
  const CostModel costs[] = {CostModel::linear(0.3), CostModel::quadratic(1.7),
                             CostModel::power(0.4, 1.3), CostModel::power(2.0, 4.0)};
  for (const auto& c : costs) {
    double prev = c.marginal(0.0);
    for (double k = 0.05; k < 10.0; k += 0.05) {
      const double fd = (c.value(k + 1e-6) - c.value(k - 1e-6)) / 2e-6;
      CHECK(fd == doctest::Approx(c.marginal(k)).epsilon(1e-6));
      CHECK(c.marginal(k) >= prev);
      prev = c.marginal(k);
    }
  }
}

TEST_CASE("cost validation") {
  CHECK_THROWS_AS(CostModel::linear(0.0), DomainError);
  CHECK_THROWS_AS(CostModel::quadratic(-1.0), DomainError);
  CHECK_THROWS_AS(CostModel::power(1.0, 0.5), DomainError);
  CHECK(std::string(to_string(CostModel::Kind::power)) == "power");
}
