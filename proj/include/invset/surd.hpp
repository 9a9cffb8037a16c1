#pragma once

#include <optional>
#include <string>

#include "invset/rational.hpp"

namespace invset {

/// An exact value coeff·√radicand with a non-negative rational radicand.
///
/// The radicand is kept as given (not reduced to its square-free part); a
/// surd is rational exactly when its radicand is the square of a rational.
class Surd {
 public:
  Surd() : coeff_(0), radicand_(1) {}
  explicit Surd(Rational value) : coeff_(std::move(value)), radicand_(1) {}
  Surd(Rational coeff, Rational radicand);

  /// √x
  static Surd sqrt_of(const Rational& x) { return Surd(Rational(1), x); }

  const Rational& coeff() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  std::optional<Rational> rational_value() const;
  bool is_rational() const { return rational_value().has_value(); }
  bool is_zero() const { return coeff_.is_zero() || radicand_.is_zero(); }

  /// The exact square coeff²·radicand, with the sign of coeff.
  Rational signed_square() const;

  double to_double() const;
  std::string str() const;

  friend Surd operator*(const Surd& a, const Surd& b) {
    return Surd(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
  }
  Surd operator-() const { return Surd(-coeff_, radicand_); }

 private:
  Rational coeff_;
  Rational radicand_;
};

}  // namespace invset
