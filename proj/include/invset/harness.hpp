#pragma once

// Experiments: each takes validated parameters and run options and returns a
// Report. Exact predictions come from the library modules; sampled values are
// labelled as estimates with their sample counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invset/rational.hpp"
#include "invset/rationality.hpp"
#include "invset/report.hpp"
#include "invset/root_family.hpp"

namespace invset {

struct RunOptions {
  AmbientConfig config{3};
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
};

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  /// Flip the sign of row 0 of this family member before checking.
  std::optional<unsigned> mutate_member;
};

Report run_verify(const RunOptions& opts, const VerifyOptions& verify = {});

// ---------------------------------------------------------------------------
// pow

Report run_pow(const RunOptions& opts, unsigned J, const Rational& alpha);

// ---------------------------------------------------------------------------
// sequential Stern-Gerlach toy

enum class Orientation { PlusX, MinusX, PlusZ, MinusZ };

Orientation parse_orientation(const std::string& token);
std::string to_string(Orientation o);

/// Power g in 1..4 of the bar-replicated imaginary unit labelling the
/// grouping seen by a device: same orientation as the previous device -> 2,
/// opposite -> 4, perpendicular -> 1 for +x/+z and 3 for -x/-z. The first
/// device sees an unpolarized source and uses 1 or 3 by its sign.
unsigned sg_grouping(std::optional<Orientation> previous, Orientation current);

/// Labels of the grouping ī^g|+) at dimension 4.
CoSequence sg_grouping_labels(unsigned g, const std::string& label);

/// C(m, j) p^j (1 - p)^(m - j).
Rational binomial_probability(unsigned m, unsigned j, const Rational& p);

/// Trajectory symbols after t radix shifts: ".x1x2x3" -> ".x2x3" -> ".x3".
std::string radix_shift(const std::vector<std::string>& symbols, unsigned shifts);

Report run_sg_chain(const RunOptions& opts, const std::vector<Orientation>& devices);

// ---------------------------------------------------------------------------
// Bell

struct BellAssessment {
  /// Third setting cos(θ - θ').
  Definability third;
  /// |C(θ) - C(θ')| - C(θ - θ'), present only when the third setting is
  /// defined.
  std::optional<Rational> bell_value;

  bool evaluable() const { return bell_value.has_value(); }
};

/// Pure verdict used by run_bell; throws OffLattice for off-lattice inputs.
BellAssessment assess_bell(const Rational& cos_theta, const Rational& cos_theta_prime, const AmbientConfig& config);

Report run_bell(const RunOptions& opts, const Rational& cos_theta, const Rational& cos_theta_prime);

// ---------------------------------------------------------------------------
// GHZ, precession, Niven, definability

/// alphas holds α_1 .. α_7.
Report run_ghz(const RunOptions& opts, const std::vector<Rational>& alphas, unsigned J1, unsigned J7);

/// Admissible times in [0, t_max] for precession at frequency ω; t_max
/// defaults to one period π²/ω.
Report run_precession(const RunOptions& opts, const Rational& omega, std::optional<double> t_max);

Report run_niven(const RunOptions& opts, const std::vector<RationalAngle>& angles);

/// Sum/difference branch for two cosines, or the spherical third side when
/// `P` is given.
Report run_defined(const RunOptions& opts, const Rational& c1, const Rational& c2, AngleBranch branch,
                   std::optional<RationalAngle> P);

}  // namespace invset
