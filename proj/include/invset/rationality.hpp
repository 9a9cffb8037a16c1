#pragma once

// Exact number theory behind counterfactual incompleteness: which rational
// angles have rational cosines, which rational cosines have rational sines,
// and whether cosines of sums/differences of lattice angles land back on the
// dyadic lattice. Every decision here is made with exact integer arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invset/rational.hpp"
#include "invset/root_family.hpp"
#include "invset/surd.hpp"

namespace invset {

/// θ = π·m/n with gcd(|m|, n) = 1 and n >= 1.
class RationalAngle {
 public:
  RationalAngle(long m, long n);

  long m() const { return m_; }
  long n() const { return n_; }

  /// Representative with 0 <= m < 2n.
  RationalAngle reduced() const;
  /// The angle in [0, π] with the same cosine.
  RationalAngle folded() const;
  double radians() const;
  /// "π·m/n"
  std::string str() const;

  /// Parses "m/n" or "m" as a multiple of π.
  static RationalAngle parse(const std::string& text);

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  long m_;
  long n_;
};

/// Either a rational value or the verdict "irrational".
struct CosineClass {
  std::optional<Rational> value;

  bool is_rational() const { return value.has_value(); }
  static CosineClass rational(Rational v) { return {std::move(v)}; }
  static CosineClass irrational() { return {}; }
};

/// cos θ is rational exactly when θ folded into [0, π] has reduced
/// denominator 1, 2 or 3; the value is then one of 0, ±1/2, ±1.
CosineClass niven_classify(const RationalAngle& theta);

/// Independent decision by the doubling orbit x_{k+1} = x_k² - 2 of
/// x_k = 2cos(2^k θ). A rational start with denominator > 1 has strictly
/// growing denominators and cannot fit the finite angle orbit, so only
/// integer starts in [-2, 2] remain; each is accepted only if its orbit
/// matches the coincidence pattern of the angle orbit {2^k θ mod 2π} and
/// takes the values 2, -2, 0 exactly at the angles 0, π, π/2.
CosineClass niven_classify_by_orbit(const RationalAngle& theta);

/// Denominators of the first `steps` orbit terms of x ↦ x² - 2 from x0.
std::vector<mpz_class> doubling_orbit_denominators(const Rational& x0, unsigned steps);

/// For c = p/q: rational sine iff q² - p² is a perfect square, the sine being
/// √(q² - p²)/q >= 0. Throws InvalidArgument when |c| > 1.
CosineClass rational_sine_partner(const Rational& c);

/// x mod 4 lies on the exponent lattice: its denominator divides
/// 2^max_resolution.
bool q2_member(const Rational& x, const AmbientConfig& config);

/// Bits by which the denominator of a dyadic x exceeds the lattice
/// resolution (0 when on the lattice); nullopt when x is not dyadic.
std::optional<unsigned> lattice_excess_bits(const Rational& x, const AmbientConfig& config);

enum class AngleBranch { Sum, Difference };
enum class UndefinedReason { IrrationalSurd, RationalButOffLattice };

std::string to_string(AngleBranch b);
std::string to_string(UndefinedReason r);

/// Verdict on whether a derived cosine is on the lattice.
struct Definability {
  /// Set exactly when the cosine is defined.
  std::optional<Rational> value;
  /// Set exactly when the cosine is undefined.
  std::optional<UndefinedReason> reason;
  /// c1·c2 and the exact sine-product term. When the third factor cos P is
  /// itself irrational beyond a single surd, surd_part holds sin θ sin θ'
  /// alone and only `numeric` carries the full value.
  Rational rational_part;
  Surd surd_part;
  double numeric = 0.0;

  bool defined() const { return value.has_value(); }
};

/// cos(θ ∓ θ') = c1·c2 ± √((1 - c1²)(1 - c2²)) with θ, θ' in [0, π]. The sum
/// branch takes the minus sign. Throws InvalidArgument for |c| > 1 and
/// OffLattice for inputs that are not lattice members.
Definability sum_cosine_defined(const Rational& c1, const Rational& c2, AngleBranch branch,
                                const AmbientConfig& config);

/// Spherical cosine rule cos θ'' = c1·c2 + sin θ sin θ' cos P. P ≡ π reduces
/// to the sum branch and P ≡ 0 to the difference branch.
Definability triangle_third_side(const Rational& c1, const Rational& c2, const RationalAngle& P,
                                 const AmbientConfig& config);

/// Diagnostic for the normal-number argument: draws pairs of lattice cosines
/// in [0, 1) with uniform numerators and counts how often their product
/// stays on the lattice.
struct ProductLatticeDiagnostic {
  std::uint64_t samples = 0;
  std::uint64_t on_lattice = 0;
  double mean_excess_bits = 0.0;
  /// (R + 2) / 2^(R + 1) for resolution R: the exact on-lattice probability
  /// of such a product.
  double expected_rate = 0.0;
};

ProductLatticeDiagnostic product_lattice_diagnostic(const AmbientConfig& config, std::uint64_t samples,
                                                    std::uint64_t seed);

}  // namespace invset
