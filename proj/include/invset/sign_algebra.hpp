#pragma once

// Signed-permutation operators acting on co-sequences of signed symbols.
//
// An operator of dimension d is a d x d matrix with exactly one nonzero
// entry per row and column, that entry being 1 (identity) or the negation
// symbol, encoded as +1 / -1. Row r of the operator reads position
// target[r] of its input and multiplies it by sign[r].

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace invset {

class CoSequence;

/// One row of a signed permutation: the column holding the nonzero entry and
/// its sign.
struct Entry {
  std::uint64_t target = 0;
  int sign = 1;

  friend bool operator==(const Entry&, const Entry&) = default;
};

bool is_power_of_two(std::uint64_t n);

class SignedPermOp {
 public:
  using Index = std::uint32_t;

  /// Validates that `target` is a bijection and the dimension is a power of
  /// two; throws InvalidArgument otherwise.
  SignedPermOp(std::vector<Index> target, std::vector<std::int8_t> sign);

  static SignedPermOp identity(std::size_t dim);

  /// The 2x2 operator [[0, 1], [-1, 0]] which squares to minus the identity.
  static SignedPermOp imaginary_unit();

  std::size_t dim() const { return target_.size(); }
  Index target(std::size_t row) const { return target_[row]; }
  int sign(std::size_t row) const { return sign_[row]; }
  Entry entry(std::size_t row) const { return {target_[row], sign_[row]}; }
  std::span<const Index> targets() const { return target_; }
  std::span<const std::int8_t> signs() const { return sign_; }

  /// Number of rows whose nonzero entry is +1.
  std::size_t plus_count() const;

  /// Dense rendering with blanks for zeros, "1" and "¬" for the signs.
  std::string render() const;

  friend bool operator==(const SignedPermOp&, const SignedPermOp&) = default;

 private:
  struct Unchecked {};
  SignedPermOp(Unchecked, std::vector<Index> target, std::vector<std::int8_t> sign)
      : target_(std::move(target)), sign_(std::move(sign)) {}

  friend SignedPermOp compose(const SignedPermOp&, const SignedPermOp&);
  friend SignedPermOp negate(const SignedPermOp&);
  friend SignedPermOp adjoint(const SignedPermOp&);
  friend SignedPermOp bar_replicate(const SignedPermOp&, std::size_t);
  friend SignedPermOp block_diag(const SignedPermOp&, const SignedPermOp&);
  friend SignedPermOp block_antidiag(const SignedPermOp&, const SignedPermOp&);

  std::vector<Index> target_;
  std::vector<std::int8_t> sign_;
};

/// Matrix product A∘B: apply(compose(A, B), s) == apply(A, apply(B, s)).
SignedPermOp compose(const SignedPermOp& a, const SignedPermOp& b);

SignedPermOp negate(const SignedPermOp& a);

/// Transpose; the sign travels with its entry.
SignedPermOp adjoint(const SignedPermOp& a);

/// Block-diagonal operator holding ambient_dim / a.dim() copies of `a`.
SignedPermOp bar_replicate(const SignedPermOp& a, std::size_t ambient_dim);

/// [[a, 0], [0, b]]
SignedPermOp block_diag(const SignedPermOp& a, const SignedPermOp& b);

/// [[0, a], [b, 0]]
SignedPermOp block_antidiag(const SignedPermOp& a, const SignedPermOp& b);

/// a∘a∘...∘a (m factors) by binary exponentiation; power(a, 0) is the identity.
SignedPermOp power(const SignedPermOp& a, std::uint64_t m);

CoSequence apply(const SignedPermOp& a, const CoSequence& s);

bool equals(const SignedPermOp& a, const SignedPermOp& b);

/// adjoint(A)∘A == identity.
bool is_unitary(const SignedPermOp& a);

/// Self-adjoint either directly (A* == A, e.g. ±identity) or under the
/// imaginary-unit convention (iA)* == iA, where i is the 2x2 imaginary unit
/// bar-replicated to the dimension of A.
bool is_hermitian(const SignedPermOp& a);

/// The imaginary-unit convention on its own: adjoint(i∘A) == i∘A.
bool is_i_hermitian(const SignedPermOp& a);

}  // namespace invset
