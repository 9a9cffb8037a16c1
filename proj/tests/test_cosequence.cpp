#include <doctest.h>

#include "invset/cosequence.hpp"
#include "invset/errors.hpp"

using namespace invset;

TEST_CASE("co-sequence construction and rendering") {
  CHECK_THROWS_AS(CoSequence("a", {1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(CoSequence("a", {1, 0}), InvalidArgument);
  CHECK(CoSequence("b", {1, -1}).render() == "b ¬b");
}

TEST_CASE("frequency and agreement by count") {
  const CoSequence s("a", {1, 1, 1, -1, 1, 1, 1, 1});
  const CoSequence t("a", {1, -1, 1, -1, 1, 1, -1, 1});
  CHECK(frequency(s).frequency == Rational(7, 8));
  CHECK(frequency(s).plus_count == 7);
  const CorrelationReport c = agreement(s, t);
  CHECK(c.agreement == Rational(6, 8));
  CHECK(c.correlation == Rational(1, 2));
  CHECK_THROWS_AS(agreement(s, CoSequence::all_plus("a", 4)), DimensionMismatch);
}

TEST_CASE("dispersion is exact and bounded by 1/4") {
  const CoSequence half("a", {1, -1, 1, -1});
  const DispersionReport d = dispersion(half, half);
  CHECK(d.variance1 == Rational(1, 4));
  CHECK(d.product.rational_value() == Rational(1, 4));
  const CoSequence skew("a", {1, 1, 1, -1});
  const DispersionReport e = dispersion(half, skew);
  CHECK(e.variance2 == Rational(3, 16));
  CHECK_FALSE(e.product.is_rational());
  CHECK(e.product.signed_square() == Rational(3, 64));
}

TEST_CASE("sampling is deterministic and independent of worker count") {
  std::vector<std::int8_t> signs(1024);
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = (i % 3 == 0) ? -1 : 1;
  const CoSequence s("a", signs);
  const auto v = IndexedCoSequence::view(s);
  const EmpiricalEstimate one = sample_frequency(v, 50000, 42, 1);
  const EmpiricalEstimate four = sample_frequency(v, 50000, 42, 4);
  CHECK(one.hits == four.hits);
  CHECK(one.hits == sample_frequency(v, 50000, 42, 3).hits);
  CHECK(sample(s, 100, 9) == sample(s, 100, 9));
  const double p = frequency(s).frequency.to_double();
  CHECK(one.within(p, 4.0));
  CHECK_THROWS_AS(sample_frequency(v, 0, 1), InvalidArgument);
}

TEST_CASE("sampled agreement matches paired draws") {
  const CoSequence a("a", {1, 1, -1, -1});
  const CoSequence b("b", {1, -1, -1, 1});
  const EmpiricalEstimate e =
      sample_agreement(IndexedCoSequence::view(a), IndexedCoSequence::view(b), 40000, 5, 2);
  CHECK(e.samples == 40000);
  CHECK(e.within(0.5, 4.0));
}

TEST_CASE("binomial sigma") {
  const EmpiricalEstimate e{100, 50};
  CHECK(e.sigma(0.5) == doctest::Approx(0.05));
  CHECK(e.within(0.5, 0.0));
}
