#include "infolab/cost.hpp"

#include <cmath>

#include "infolab/errors.hpp"

namespace infolab {

CostModel CostModel::linear(double c) {
  CostModel m{Kind::linear, c, 1.0};
  m.validate();
  return m;
}

CostModel CostModel::quadratic(double c) {
  CostModel m{Kind::quadratic, c, 2.0};
  m.validate();
  return m;
}

CostModel CostModel::power(double c, double p) {
  CostModel m{Kind::power, c, p};
  m.validate();
  return m;
}

void CostModel::validate() const {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    throw DomainError("cost coefficient must be positive and finite");
  }
  if (kind == Kind::power && (!(exponent >= 1.0) || !std::isfinite(exponent))) {
    throw DomainError("power cost exponent must be >= 1");
  }
}

double CostModel::value(double k) const {
  switch (kind) {
    case Kind::linear:
      return coefficient * k;
    case Kind::quadratic:
      return 0.5 * coefficient * k * k;
    case Kind::power:
      return coefficient * std::pow(k, exponent);
  }
  return 0.0;
}

double CostModel::marginal(double k) const {
  switch (kind) {
    case Kind::linear:
      return coefficient;
    case Kind::quadratic:
      return coefficient * k;
    case Kind::power:
      if (exponent == 1.0) return coefficient;
      return coefficient * exponent * std::pow(k, exponent - 1.0);
  }
  return 0.0;
}

const char* to_string(CostModel::Kind kind) {
  switch (kind) {
    case CostModel::Kind::linear:
      return "linear";
    case CostModel::Kind::quadratic:
      return "quadratic";
    case CostModel::Kind::power:
      return "power";
  }
  return "?";
}

}  // namespace infolab
