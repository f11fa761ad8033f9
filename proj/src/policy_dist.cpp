#include "infolab/policy_dist.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

const boost::math::normal_distribution<double> kStdNormal{};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string("policy distribution: ") + what +
                      " must be finite");
  }
}

}  // namespace

PolicyStrengthDist PolicyStrengthDist::point_mass(double value) {
  require_finite(value, "value");
  PolicyStrengthDist d;
  d.kind_ = Kind::point_mass;
  d.lower_ = d.upper_ = value;
  d.mean_ = value;
  d.variance_ = 0.0;
  return d;
}

PolicyStrengthDist PolicyStrengthDist::uniform(double lower, double upper) {
  require_finite(lower, "lower");
  require_finite(upper, "upper");
  if (!(lower < upper)) {
    throw DomainError("uniform policy distribution needs lower < upper");
  }
  PolicyStrengthDist d;
  d.kind_ = Kind::uniform;
  d.lower_ = lower;
  d.upper_ = upper;
  d.mean_ = 0.5 * (lower + upper);
  const double width = upper - lower;
  d.variance_ = width * width / 12.0;
  return d;
}

PolicyStrengthDist PolicyStrengthDist::truncated_normal(double location,
                                                        double scale,
                                                        double lower,
                                                        double upper) {
  require_finite(location, "location");
  require_finite(scale, "scale");
  require_finite(lower, "lower");
  require_finite(upper, "upper");
  if (!(scale > 0.0)) {
    throw DomainError("truncated normal policy distribution needs scale > 0");
  }
  if (!(lower < upper)) {
    throw DomainError("truncated normal policy distribution needs lower < upper");
  }
  PolicyStrengthDist d;
  d.kind_ = Kind::truncated_normal;
  d.location_ = location;
  d.scale_ = scale;
  d.lower_ = lower;
  d.upper_ = upper;

  const double alpha = (lower - location) / scale;
  const double beta = (upper - location) / scale;
  d.cdf_lower_ = boost::math::cdf(kStdNormal, alpha);
  d.cdf_upper_ = boost::math::cdf(kStdNormal, beta);
  const double mass = d.cdf_upper_ - d.cdf_lower_;
  if (!(mass > 0.0)) {
    throw DomainError("truncated normal policy distribution has no mass in [lower, upper]");
  }
  const double pdf_a = boost::math::pdf(kStdNormal, alpha);
  const double pdf_b = boost::math::pdf(kStdNormal, beta);
  const double ratio = (pdf_a - pdf_b) / mass;
  d.mean_ = location + scale * ratio;
  d.variance_ =
      scale * scale * (1.0 + (alpha * pdf_a - beta * pdf_b) / mass - ratio * ratio);
  return d;
}

double PolicyStrengthDist::support_bound() const noexcept {
  return std::max(std::abs(lower_), std::abs(upper_));
}

double PolicyStrengthDist::quantile(double u) const {
  switch (kind_) {
    case Kind::point_mass:
      return mean_;
    case Kind::uniform:
      return lower_ + (upper_ - lower_) * u;
    case Kind::truncated_normal: {
      const double p = cdf_lower_ + (cdf_upper_ - cdf_lower_) * u;
      const double x = location_ + scale_ * boost::math::quantile(kStdNormal, p);
      // Rounding in the CDF round trip can land a hair outside the support.
      return std::clamp(x, lower_, upper_);
    }
  }
  return mean_;
}

const char* to_string(PolicyStrengthDist::Kind kind) {
  switch (kind) {
    case PolicyStrengthDist::Kind::point_mass:
      return "point_mass";
    case PolicyStrengthDist::Kind::uniform:
      return "uniform";
    case PolicyStrengthDist::Kind::truncated_normal:
      return "truncated_normal";
  }
  return "?";
}

}  // namespace infolab
