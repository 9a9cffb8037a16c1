#pragma once

// Chart between lbit parameters (α, J) and directions (θ, φ) on the sphere:
// α = 1 - cos θ for θ in [0, π], α = 3 + cos θ for θ in [π, 2π], and
// φ = π·J / (2M).

#include <string>

#include "invset/rational.hpp"
#include "invset/rationality.hpp"
#include "invset/root_family.hpp"

namespace invset {

/// Which half of the θ circle a direction lies on; cos θ alone is two-valued.
enum class Hemisphere { Upper, Lower };

/// A direction stored as exact cos θ, a branch flag, and φ as a rational
/// multiple of π.
struct Direction {
  Rational cos_theta;
  Hemisphere branch = Hemisphere::Upper;
  RationalAngle phi{0, 1};

  /// Throws InvalidArgument when |cos θ| > 1.
  Direction(Rational cos_theta, Hemisphere branch, RationalAngle phi);

  std::string str() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Throws OffLattice when cos θ is not a lattice member.
Q2Exponent alpha_from_direction(const Direction& d, const AmbientConfig& config);

/// J = 2M·φ/π reduced into 1..4M, with φ ≡ 0 mapping to J = 4M. Throws
/// NonRepresentablePhi when 2M·φ/π is not an integer.
CircleCoord J_from_phi(const RationalAngle& phi, const AmbientConfig& config);

/// φ given in radians: only φ = 0 is a rational multiple of π, so every
/// nonzero input throws NonRepresentablePhi.
CircleCoord J_from_phi_radians(const Rational& radians, const AmbientConfig& config);

/// φ = π·J / (2M), reduced.
RationalAngle phi_from_J(CircleCoord J, const AmbientConfig& config);

/// Total on the lattice: α <= 2 lands on the upper branch with cos θ = 1 - α,
/// otherwise on the lower branch with cos θ = α - 3.
Direction direction_from_lbit(const Q2Exponent& alpha, CircleCoord J, const AmbientConfig& config);

}  // namespace invset
