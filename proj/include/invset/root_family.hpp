#pragma once

// The self-similar family of square-root-of-minus-one operators and their
// fractional powers on the dyadic exponent lattice.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invset/rational.hpp"
#include "invset/sign_algebra.hpp"

namespace invset {

/// Universe constants: N = 2^n_tot, M = N/2 - 1, co-sequence length L = 2^N.
class AmbientConfig {
 public:
  /// Largest n_tot whose co-sequence length fits in 64-bit indices.
  static constexpr unsigned kMaxNTot = 5;
  /// Largest n_tot whose co-sequences are materialized (L = 65536).
  static constexpr unsigned kMaxMaterializedNTot = 4;

  explicit AmbientConfig(unsigned n_tot);

  unsigned n_tot() const { return n_tot_; }
  unsigned N() const { return 1U << n_tot_; }
  unsigned M() const { return N() / 2 - 1; }
  /// 2^N
  std::uint64_t length() const { return std::uint64_t{1} << N(); }
  /// Finest exponent resolution: exponents are multiples of 2^-(N - n_tot).
  unsigned max_resolution() const { return N() - n_tot_; }
  /// Number of lattice exponents in [0, 4): 2^(max_resolution + 2).
  std::uint64_t lattice_size() const { return std::uint64_t{4} << max_resolution(); }
  /// Number of circle coordinates, 4M.
  unsigned circle_size() const { return 4 * M(); }
  bool materializable() const { return n_tot_ <= kMaxMaterializedNTot; }

  friend bool operator==(const AmbientConfig&, const AmbientConfig&) = default;

 private:
  unsigned n_tot_;
};

/// A discrete coordinate 1 <= J <= 4M on the circle.
class CircleCoord {
 public:
  CircleCoord(unsigned J, const AmbientConfig& config);

  unsigned value() const { return J_; }
  /// J + M with wraparound; corresponds to pre-multiplication by E_{N-1}.
  CircleCoord advanced(const AmbientConfig& config) const;

  friend bool operator==(const CircleCoord&, const CircleCoord&) = default;

 private:
  unsigned J_;
};

/// A dyadic exponent α = k / 2^R taken mod 4, stored in lowest terms
/// (k odd or R = 0).
class Q2Exponent {
 public:
  Q2Exponent() = default;

  /// Throws UndefinedExponent unless the reduced denominator divides
  /// 2^max_resolution.
  static Q2Exponent from_rational(const Rational& alpha, const AmbientConfig& config);
  /// k / 2^R, reduced mod 4.
  static Q2Exponent from_lattice(std::uint64_t k, unsigned R, const AmbientConfig& config);
  static Q2Exponent zero() { return {}; }

  /// Every lattice exponent in [0, 4) in increasing order.
  static std::vector<Q2Exponent> lattice(const AmbientConfig& config);

  std::uint64_t numerator() const { return k_; }
  unsigned resolution() const { return R_; }
  Rational value() const;
  bool is_integer() const { return R_ == 0; }
  /// k·2^(R' - R): the numerator at a finer resolution R' >= R.
  std::uint64_t numerator_at(unsigned resolution) const;

  friend Q2Exponent operator+(const Q2Exponent& a, const Q2Exponent& b);
  friend Q2Exponent operator-(const Q2Exponent& a, const Q2Exponent& b);
  friend bool operator==(const Q2Exponent&, const Q2Exponent&) = default;

 private:
  Q2Exponent(std::uint64_t k, unsigned R);
  std::uint64_t k_ = 0;
  unsigned R_ = 0;
};

/// E_1 .. E_{N-1}, each of dimension N.
class RootFamily {
 public:
  /// Builds the family by the self-similar block recursion starting from the
  /// 2x2 imaginary unit.
  static RootFamily build(const AmbientConfig& config);

  /// Wraps an arbitrary member list without checking the family invariants.
  /// Used to exercise the verification paths with corrupted families.
  static RootFamily from_members(const AmbientConfig& config, std::vector<SignedPermOp> members);

  const AmbientConfig& config() const { return config_; }
  std::size_t size() const { return members_.size(); }
  /// 1-based, 1 <= j <= N - 1.
  const SignedPermOp& member(unsigned j) const;

  /// E_J for J in 1..2M, -E_{J-2M} for J in 2M+1..4M.
  SignedPermOp cycle_coordinate(CircleCoord J) const;

 private:
  RootFamily(AmbientConfig config, std::vector<SignedPermOp> members)
      : config_(config), members_(std::move(members)) {}

  AmbientConfig config_;
  std::vector<SignedPermOp> members_;
};

/// Outcome of checking one quaternionic triple (E_j, E_{j+M}, E_{N-1}).
struct QuaternionCheck {
  bool ok = true;
  /// The first relation that failed, e.g. "E[1]∘E[2] == E[3]".
  std::string failed_relation;
  /// Member indices taking part in the failed relation.
  std::vector<unsigned> witness_members;
  /// First row at which the two sides differ.
  std::optional<std::size_t> witness_row;
};

/// Checks E_j² = E_{j+M}² = E_{N-1}² = -1, E_j∘E_{j+M} = E_{N-1},
/// E_{N-1}∘E_j = E_{j+M} and E_{N-1}∘E_{j+M} = -E_j.
QuaternionCheck quaternion_triple_check(const RootFamily& family, unsigned j);

/// [[0, 1], [A, 0]] of twice the dimension; root(A)∘root(A) == diag(A, A).
SignedPermOp root(const SignedPermOp& a);

/// Ē_J^α at the ambient dimension 2^N: root applied R times to the circle
/// operator, raised to the k-th power, bar-replicated. Requires a
/// materializable configuration.
SignedPermOp pow(const RootFamily& family, CircleCoord J, const Q2Exponent& alpha);

/// Entry-on-demand view of Ē_J^α for configurations too large to
/// materialize. Entry r is computed in O(R) from the block-counter structure
/// of the iterated root, independently of the composition route used by pow.
class PowerView {
 public:
  PowerView(const RootFamily& family, CircleCoord J, const Q2Exponent& alpha);

  std::uint64_t dim() const { return dim_; }
  Entry entry(std::uint64_t row) const;

 private:
  SignedPermOp base_;  // the circle operator, dimension N
  std::uint64_t dim_;
  unsigned n_tot_;
  unsigned resolution_;
  std::uint64_t steps_;
};

/// The row-r entry of a product P_1∘P_2∘...∘P_k of views.
Entry compose_entries(const std::vector<PowerView>& factors, std::uint64_t row);

}  // namespace invset
