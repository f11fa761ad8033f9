#pragma once

namespace infolab {

/// Law of the intervention strength x.
///
/// Every family has bounded support, so the policy-maker's response stays
/// within [-support_bound(), support_bound()]. Moments are computed once at
/// construction; second_moment() is always variance() + mean()^2.
class PolicyStrengthDist {
 public:
  enum class Kind { point_mass, uniform, truncated_normal };

  static PolicyStrengthDist point_mass(double value);
  static PolicyStrengthDist uniform(double lower, double upper);
  /// N(location, scale^2) restricted to [lower, upper].
  static PolicyStrengthDist truncated_normal(double location, double scale,
                                             double lower, double upper);

  Kind kind() const noexcept { return kind_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }
  double second_moment() const noexcept { return variance_ + mean_ * mean_; }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  // Only meaningful for truncated_normal.
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }

  double support_bound() const noexcept;

  /// Inverse CDF; u must lie in the open interval (0, 1).
  double quantile(double u) const;

  bool operator==(const PolicyStrengthDist&) const = default;

 private:
  PolicyStrengthDist() = default;

  Kind kind_ = Kind::point_mass;
  double lower_ = 0.0;
  double upper_ = 0.0;
  double location_ = 0.0;
  double scale_ = 0.0;
  double mean_ = 0.0;
  double variance_ = 0.0;
  // Standard-normal CDF at the standardized truncation points.
  double cdf_lower_ = 0.0;
  double cdf_upper_ = 0.0;
};

const char* to_string(PolicyStrengthDist::Kind kind);

}  // namespace infolab
