#include "invset/rationality.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <unordered_map>

#include "invset/errors.hpp"

namespace invset {

RationalAngle::RationalAngle(long m, long n) {
  if (n == 0) throw InvalidArgument("rational angle with zero denominator");
  if (n < 0) {
    m = -m;
    n = -n;
  }
  const long g = std::gcd(m < 0 ? -m : m, n);
  m_ = g == 0 ? 0 : m / g;
  n_ = g == 0 ? 1 : n / g;
}

RationalAngle RationalAngle::reduced() const {
  const long period = 2 * n_;
  long m = m_ % period;
  if (m < 0) m += period;
  return RationalAngle(m, n_);
}

RationalAngle RationalAngle::folded() const {
  const RationalAngle r = reduced();
  return r.m_ > r.n_ ? RationalAngle(2 * r.n_ - r.m_, r.n_) : r;
}

double RationalAngle::radians() const {
  return std::numbers::pi * static_cast<double>(m_) / static_cast<double>(n_);
}

std::string RationalAngle::str() const {
  if (n_ == 1) return "π·" + std::to_string(m_);
  return "π·" + std::to_string(m_) + "/" + std::to_string(n_);
}

RationalAngle RationalAngle::parse(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (!r.num().fits_slong_p() || !r.den().fits_slong_p()) throw InvalidArgument("angle out of range: " + text);
  return RationalAngle(r.num().get_si(), r.den().get_si());
}

// ---------------------------------------------------------------------------
// Niven

CosineClass niven_classify(const RationalAngle& theta) {
  const RationalAngle f = theta.folded();
  switch (f.n()) {
    case 1:
      return CosineClass::rational(f.m() == 0 ? Rational(1) : Rational(-1));
    case 2:
      return CosineClass::rational(Rational(0));
    case 3:
      return CosineClass::rational(f.m() == 1 ? Rational(1, 2) : Rational(-1, 2));
    default:
      return CosineClass::irrational();
  }
}

std::vector<mpz_class> doubling_orbit_denominators(const Rational& x0, unsigned steps) {
  std::vector<mpz_class> out;
  out.reserve(steps);
  Rational x = x0;
  for (unsigned k = 0; k < steps; ++k) {
    out.push_back(x.den());
    x = x * x - Rational(2);
  }
  return out;
}

CosineClass niven_classify_by_orbit(const RationalAngle& theta) {
  const RationalAngle t = theta.reduced();
  const long n = t.n();
  const long period = 2 * n;

  // Angle orbit 2^k·m mod 2n until the first repeated state; folded values
  // in [0, n] index distinct cosines.
  std::vector<long> folded;
  std::unordered_map<long, std::size_t> seen;
  long state = t.m();
  while (!seen.contains(state)) {
    seen.emplace(state, folded.size());
    folded.push_back(state > n ? period - state : state);
    state = (2 * state) % period;
  }
  // One extra term so the repeat itself is part of the compared pattern.
  folded.push_back(state > n ? period - state : state);
  const std::size_t K = folded.size();

  std::optional<long> accepted;
  for (long x0 = -2; x0 <= 2; ++x0) {
    std::vector<long> x(K);
    x[0] = x0;
    for (std::size_t k = 1; k < K; ++k) x[k] = x[k - 1] * x[k - 1] - 2;

    bool consistent = true;
    for (std::size_t k = 0; k < K && consistent; ++k) {
      const bool at_zero = folded[k] == 0;
      const bool at_pi = folded[k] == n;
      const bool at_half_pi = 2 * folded[k] == n;
      if ((x[k] == 2) != at_zero || (x[k] == -2) != at_pi || (x[k] == 0) != at_half_pi) consistent = false;
      for (std::size_t j = 0; j < k && consistent; ++j) {
        if ((folded[j] == folded[k]) != (x[j] == x[k])) consistent = false;
      }
    }
    if (consistent) {
      if (accepted) throw Error("doubling-orbit classification accepted two candidates for " + theta.str());
      accepted = x0;
    }
  }
  if (!accepted) return CosineClass::irrational();
  return CosineClass::rational(Rational(*accepted, 2));
}

// ---------------------------------------------------------------------------
// Pythagorean and lattice tests

CosineClass rational_sine_partner(const Rational& c) {
  if (c.abs() > Rational(1)) throw InvalidArgument("cosine " + c.str() + " has magnitude above 1");
  const mpz_class& p = c.num();
  const mpz_class& q = c.den();
  const mpz_class diff = q * q - p * p;
  if (!is_perfect_square(diff)) return CosineClass::irrational();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), diff.get_mpz_t());
  return CosineClass::rational(Rational(root, q));
}

bool q2_member(const Rational& x, const AmbientConfig& config) {
  const auto k = x.dyadic_exponent();
  return k.has_value() && *k <= config.max_resolution();
}

std::optional<unsigned> lattice_excess_bits(const Rational& x, const AmbientConfig& config) {
  const auto k = x.dyadic_exponent();
  if (!k) return std::nullopt;
  return *k > config.max_resolution() ? *k - config.max_resolution() : 0U;
}

std::string to_string(AngleBranch b) { return b == AngleBranch::Sum ? "sum" : "difference"; }

std::string to_string(UndefinedReason r) {
  return r == UndefinedReason::IrrationalSurd ? "IrrationalSurd" : "RationalButOffLattice";
}

namespace {

void require_lattice_cosine(const Rational& c, const char* name, const AmbientConfig& config) {
  if (c.abs() > Rational(1)) throw InvalidArgument(std::string(name) + " = " + c.str() + " has magnitude above 1");
  if (!q2_member(c, config)) {
    throw OffLattice(std::string(name) + " = " + c.str() + " is not on the dyadic lattice at n_tot=" +
                     std::to_string(config.n_tot()));
  }
}

Definability classify(Rational rational_part, Surd surd_part, const AmbientConfig& config) {
  Definability d{std::nullopt, std::nullopt, std::move(rational_part), std::move(surd_part), 0.0};
  d.numeric = d.rational_part.to_double() + d.surd_part.to_double();
  const auto surd_value = d.surd_part.rational_value();
  if (!surd_value) {
    d.reason = UndefinedReason::IrrationalSurd;
    return d;
  }
  const Rational v = d.rational_part + *surd_value;
  if (q2_member(v, config)) {
    d.value = v;
  } else {
    d.reason = UndefinedReason::RationalButOffLattice;
  }
  return d;
}

/// sin θ sin θ' for θ, θ' in [0, π].
Surd sine_product(const Rational& c1, const Rational& c2) {
  const Rational one(1);
  return Surd::sqrt_of((one - c1 * c1) * (one - c2 * c2));
}

}  // namespace

Definability sum_cosine_defined(const Rational& c1, const Rational& c2, AngleBranch branch,
                                const AmbientConfig& config) {
  require_lattice_cosine(c1, "c1", config);
  require_lattice_cosine(c2, "c2", config);
  const Surd s = sine_product(c1, c2);
  return classify(c1 * c2, branch == AngleBranch::Sum ? -s : s, config);
}

Definability triangle_third_side(const Rational& c1, const Rational& c2, const RationalAngle& P,
                                 const AmbientConfig& config) {
  require_lattice_cosine(c1, "c1", config);
  require_lattice_cosine(c2, "c2", config);
  const RationalAngle f = P.folded();
  if (f.n() == 1) {
    return sum_cosine_defined(c1, c2, f.m() == 1 ? AngleBranch::Sum : AngleBranch::Difference, config);
  }

  const Surd sines = sine_product(c1, c2);
  const Rational base = c1 * c2;
  if (const CosineClass cosP = niven_classify(f); cosP.is_rational()) {
    return classify(base, Surd(sines.coeff() * *cosP.value, sines.radicand()), config);
  }
  // cos(π/4), cos(3π/4) = ±√2/2 and cos(π/6), cos(5π/6) = ±√3/2 are single
  // surds; multiply radicands and keep the exact product.
  if (f.n() == 4 || f.n() == 6) {
    const long d = f.n() == 4 ? 2 : 3;
    const Rational half_signed = 2 * f.m() < f.n() ? Rational(1, 2) : Rational(-1, 2);
    return classify(base, sines * Surd(half_signed, Rational(d)), config);
  }
  // Remaining cosines are a + b√d with a != 0 or have degree > 2; their
  // product with a nonzero quadratic surd is irrational.
  if (sines.is_zero()) return classify(base, Surd(), config);
  Definability d{std::nullopt, UndefinedReason::IrrationalSurd, base, sines, 0.0};
  d.numeric = base.to_double() + sines.to_double() * std::cos(f.radians());
  return d;
}

// ---------------------------------------------------------------------------
// Diagnostics

ProductLatticeDiagnostic product_lattice_diagnostic(const AmbientConfig& config, std::uint64_t samples,
                                                    std::uint64_t seed) {
  const unsigned R = config.max_resolution();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << R) - 1);
  ProductLatticeDiagnostic d;
  d.samples = samples;
  // P(v2(p1) + v2(p2) >= R) for independent uniform numerators.
  d.expected_rate = static_cast<double>(R + 2) * std::ldexp(1.0, -static_cast<int>(R) - 1);
  double excess_total = 0.0;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, R);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Rational a(mpz_class(static_cast<unsigned long>(pick(rng))), den);
    const Rational b(mpz_class(static_cast<unsigned long>(pick(rng))), den);
    const auto excess = lattice_excess_bits(a * b, config);
    if (*excess == 0) ++d.on_lattice;
    excess_total += *excess;
  }
  d.mean_excess_bits = samples ? excess_total / static_cast<double>(samples) : 0.0;
  return d;
}

}  // namespace invset
