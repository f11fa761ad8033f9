#pragma once

namespace infolab {

/// Information cost C(k) of a signal with precision k.
///
///   linear     C(k) = c k
///   quadratic  C(k) = (c/2) k^2
///   power      C(k) = c k^p,  p >= 1
///
/// All kinds have C(0) = 0 and are convex and non-decreasing on k >= 0
/// whenever c > 0 (and p >= 1).
struct CostModel {
  enum class Kind { linear, quadratic, power };

  Kind kind = Kind::linear;
  double coefficient = 1.0;
  double exponent = 1.0;  // used by Kind::power only

  static CostModel linear(double c);
  static CostModel quadratic(double c);
  static CostModel power(double c, double p);

  /// Throws DomainError unless c > 0 and (for power) p >= 1.
  void validate() const;

  double value(double k) const;
  /// C'(k); at k = 0 this is the right derivative C'(0+).
  double marginal(double k) const;
  double marginal_at_zero() const { return marginal(0.0); }

  bool operator==(const CostModel&) const = default;
};

const char* to_string(CostModel::Kind kind);

}  // namespace infolab
