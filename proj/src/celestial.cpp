#include "invset/celestial.hpp"

#include "invset/errors.hpp"

namespace invset {

Direction::Direction(Rational c, Hemisphere b, RationalAngle p)
    : cos_theta(std::move(c)), branch(b), phi(p.reduced()) {
  if (cos_theta.abs() > Rational(1)) throw InvalidArgument("cos θ = " + cos_theta.str() + " has magnitude above 1");
}

std::string Direction::str() const {
  return "(cosθ=" + cos_theta.str() + ", " + (branch == Hemisphere::Upper ? "upper" : "lower") +
         ", φ=" + phi.str() + ")";
}

Q2Exponent alpha_from_direction(const Direction& d, const AmbientConfig& config) {
  if (!q2_member(d.cos_theta, config)) {
    throw OffLattice("cos θ = " + d.cos_theta.str() + " is not on the dyadic lattice at n_tot=" +
                     std::to_string(config.n_tot()));
  }
  const Rational alpha = d.branch == Hemisphere::Upper ? Rational(1) - d.cos_theta : Rational(3) + d.cos_theta;
  return Q2Exponent::from_rational(alpha, config);
}

CircleCoord J_from_phi(const RationalAngle& phi, const AmbientConfig& config) {
  const long twoM = 2 * static_cast<long>(config.M());
  const RationalAngle p = phi.reduced();
  if ((twoM * p.m()) % p.n() != 0) {
    throw NonRepresentablePhi("φ = " + phi.str() + " is not a multiple of π/" + std::to_string(twoM));
  }
  const long J = twoM * p.m() / p.n();
  return CircleCoord(J == 0 ? config.circle_size() : static_cast<unsigned>(J), config);
}

CircleCoord J_from_phi_radians(const Rational& radians, const AmbientConfig& config) {
  if (!radians.is_zero()) {
    throw NonRepresentablePhi("φ = " + radians.str() + " rad is not a rational multiple of π");
  }
  return CircleCoord(config.circle_size(), config);
}

RationalAngle phi_from_J(CircleCoord J, const AmbientConfig& config) {
  return RationalAngle(static_cast<long>(J.value()), 2 * static_cast<long>(config.M())).reduced();
}

Direction direction_from_lbit(const Q2Exponent& alpha, CircleCoord J, const AmbientConfig& config) {
  const Rational a = alpha.value();
  const RationalAngle phi = phi_from_J(J, config);
  if (a <= Rational(2)) return Direction(Rational(1) - a, Hemisphere::Upper, phi);
  return Direction(a - Rational(3), Hemisphere::Lower, phi);
}

}  // namespace invset
