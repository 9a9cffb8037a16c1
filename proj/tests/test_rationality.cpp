#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "invset/errors.hpp"
#include "invset/rationality.hpp"

using namespace invset;
using Big = boost::multiprecision::cpp_dec_float_100;

TEST_CASE("angle normalization") {
  CHECK(RationalAngle(2, 4) == RationalAngle(1, 2));
  CHECK(RationalAngle(-1, 3).reduced() == RationalAngle(5, 3));
  CHECK(RationalAngle(5, 3).folded() == RationalAngle(1, 3));
  CHECK(RationalAngle::parse("3/6") == RationalAngle(1, 2));
  CHECK_THROWS_AS(RationalAngle(1, 0), InvalidArgument);
}

TEST_CASE("rational cosines of rational angles") {
  CHECK(niven_classify(RationalAngle(0, 1)).value == Rational(1));
  CHECK(niven_classify(RationalAngle(1, 1)).value == Rational(-1));
  CHECK(niven_classify(RationalAngle(1, 2)).value == Rational(0));
  CHECK(niven_classify(RationalAngle(1, 3)).value == Rational(1, 2));
  CHECK(niven_classify(RationalAngle(2, 3)).value == Rational(-1, 2));
  CHECK(niven_classify(RationalAngle(5, 3)).value == Rational(1, 2));
  CHECK_FALSE(niven_classify(RationalAngle(1, 4)).is_rational());
  CHECK_FALSE(niven_classify(RationalAngle(1, 5)).is_rational());
  CHECK_FALSE(niven_classify(RationalAngle(1, 6)).is_rational());
}

TEST_CASE("the doubling orbit route agrees with the closed form") {
  for (long n = 1; n <= 60; ++n) {
    for (long m = -n; m <= 3 * n; ++m) {
      const RationalAngle t(m, n);
      REQUIRE(niven_classify_by_orbit(t).value == niven_classify(t).value);
    }
  }
}

TEST_CASE("non-integer orbit starts have squaring denominators") {
  for (const Rational& x0 : {Rational(1, 2), Rational(3, 2), Rational(-5, 3), Rational(7, 4)}) {
    const auto dens = doubling_orbit_denominators(x0, 5);
    for (std::size_t k = 1; k < dens.size(); ++k) {
      CHECK(dens[k] == dens[k - 1] * dens[k - 1]);
      CHECK(dens[k] > dens[k - 1]);
    }
  }
  const auto ints = doubling_orbit_denominators(Rational(1), 4);
  for (const auto& d : ints) CHECK(d == 1);
}

TEST_CASE("closed form matches 64-digit evaluation for small denominators") {
  const Big pi = boost::math::constants::pi<Big>();
  const Big tol("1e-60");
  for (long n = 1; n <= 24; ++n) {
    for (long m = 0; m < 2 * n; ++m) {
      const RationalAngle t(m, n);
      if (t.n() != n) continue;
      const Big c = cos(pi * Big(m) / Big(n));
      const CosineClass k = niven_classify(t);
      if (k.is_rational()) {
        const Big v = Big(k.value->num().get_si()) / Big(k.value->den().get_si());
        CHECK(abs(c - v) < tol);
      }
    }
  }
}

TEST_CASE("rational sine partners") {
  CHECK(rational_sine_partner(Rational(3, 5)).value == Rational(4, 5));
  CHECK(rational_sine_partner(Rational(-5, 13)).value == Rational(12, 13));
  CHECK(rational_sine_partner(Rational(1)).value == Rational(0));
  CHECK(rational_sine_partner(Rational(0)).value == Rational(1));
  CHECK_FALSE(rational_sine_partner(Rational(1, 2)).is_rational());
  CHECK_FALSE(rational_sine_partner(Rational(7, 8)).is_rational());
  CHECK_THROWS_AS(rational_sine_partner(Rational(5, 4)), InvalidArgument);
}

TEST_CASE("lattice membership") {
  const AmbientConfig cfg(2);
  CHECK(q2_member(Rational(3, 4), cfg));
  CHECK(q2_member(Rational(-7, 4), cfg));
  CHECK(q2_member(Rational(5), cfg));
  CHECK_FALSE(q2_member(Rational(1, 8), cfg));
  CHECK_FALSE(q2_member(Rational(1, 3), cfg));
  CHECK(lattice_excess_bits(Rational(1, 32), cfg) == 3U);
  CHECK(lattice_excess_bits(Rational(1, 4), cfg) == 0U);
  CHECK_FALSE(lattice_excess_bits(Rational(1, 6), cfg).has_value());
}

TEST_CASE("sum and difference cosines") {
  const AmbientConfig cfg(3);
  const Definability same = sum_cosine_defined(Rational(1), Rational(1), AngleBranch::Difference, cfg);
  REQUIRE(same.defined());
  CHECK(*same.value == Rational(1));

  const Definability surd = sum_cosine_defined(Rational(1, 2), Rational(1, 4), AngleBranch::Difference, cfg);
  CHECK_FALSE(surd.defined());
  CHECK(surd.reason == UndefinedReason::IrrationalSurd);
  CHECK(surd.surd_part.signed_square() == Rational(45, 64));
  CHECK(surd.rational_part == Rational(1, 8));
  CHECK(surd.numeric == doctest::Approx(0.125 + std::sqrt(45.0 / 64.0)));

  // Equal cosines: the difference is 0, the sum has cosine 2c² - 1.
  const AmbientConfig small(2);
  const Definability back = sum_cosine_defined(Rational(1, 4), Rational(1, 4), AngleBranch::Difference, small);
  CHECK(*back.value == Rational(1));
  const Definability twice = sum_cosine_defined(Rational(1, 4), Rational(1, 4), AngleBranch::Sum, small);
  CHECK_FALSE(twice.defined());
  CHECK(twice.reason == UndefinedReason::RationalButOffLattice);
  CHECK(twice.rational_part + *twice.surd_part.rational_value() == Rational(-7, 8));
  CHECK(*sum_cosine_defined(Rational(1, 4), Rational(1, 4), AngleBranch::Sum, cfg).value == Rational(-7, 8));

  CHECK_THROWS_AS(sum_cosine_defined(Rational(1, 3), Rational(1), AngleBranch::Sum, cfg), OffLattice);
  CHECK_THROWS_AS(sum_cosine_defined(Rational(3, 2), Rational(1), AngleBranch::Sum, cfg), InvalidArgument);
}

TEST_CASE("spherical third side") {
  const AmbientConfig cfg(3);
  const Definability d = triangle_third_side(Rational(1, 2), Rational(1, 2), RationalAngle(1, 3), cfg);
  REQUIRE(d.defined());
  CHECK(*d.value == Rational(5, 8));

  const Definability u = triangle_third_side(Rational(1, 2), Rational(1, 4), RationalAngle(1, 3), cfg);
  CHECK_FALSE(u.defined());
  CHECK(u.reason == UndefinedReason::IrrationalSurd);

  const Definability right = triangle_third_side(Rational(1, 2), Rational(1, 4), RationalAngle(1, 2), cfg);
  CHECK(*right.value == Rational(1, 8));

  // P = π is the sum branch, P = 0 the difference branch.
  const Definability flat = triangle_third_side(Rational(1, 4), Rational(1, 4), RationalAngle(1, 1), cfg);
  CHECK(*flat.value == Rational(-7, 8));
  CHECK(*triangle_third_side(Rational(1, 4), Rational(1, 4), RationalAngle(0, 1), cfg).value == Rational(1));

  const Definability quarter = triangle_third_side(Rational(1, 2), Rational(1, 2), RationalAngle(1, 4), cfg);
  CHECK(quarter.reason == UndefinedReason::IrrationalSurd);
  CHECK(quarter.numeric == doctest::Approx(0.25 + 0.75 * std::sqrt(0.5)));

  const Definability fifth = triangle_third_side(Rational(1, 2), Rational(1, 2), RationalAngle(1, 5), cfg);
  CHECK(fifth.reason == UndefinedReason::IrrationalSurd);
  CHECK(fifth.numeric == doctest::Approx(0.25 + 0.75 * std::cos(std::numbers::pi / 5)));

  // A pole makes the included angle irrelevant.
  const Definability pole = triangle_third_side(Rational(1), Rational(1, 4), RationalAngle(1, 5), cfg);
  CHECK(*pole.value == Rational(1, 4));
}

TEST_CASE("product diagnostic tracks its exact rate") {
  const AmbientConfig cfg(3);
  const ProductLatticeDiagnostic d = product_lattice_diagnostic(cfg, 40000, 3);
  CHECK(d.expected_rate == doctest::Approx(7.0 / 64.0));
  const double rate = static_cast<double>(d.on_lattice) / static_cast<double>(d.samples);
  CHECK(std::abs(rate - d.expected_rate) < 4 * std::sqrt(d.expected_rate * (1 - d.expected_rate) / 40000));
}
