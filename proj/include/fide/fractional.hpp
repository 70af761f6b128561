#pragma once

namespace fide {

/// Fractional order of the evolution equation. The solver theory lives on
/// (1,2); the closed endpoints are admitted so the operator module can be
/// exercised against the classical semigroup (alpha = 1) and cosine-family
/// (alpha = 2) identities.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha);

  double value() const { return alpha_; }
  bool strictly_fractional() const { return alpha_ > 1.0 && alpha_ < 2.0; }

  /// pi / (alpha sin(pi/alpha)); the |mu|-free part of the decay integral.
  /// Only defined on the open interval (1,2).
  double decay_integral_factor() const;

  /// Sector half-angle bound pi (1 - alpha/2).
  double sector_angle_bound() const;

 private:
  double alpha_;
};

}  // namespace fide
