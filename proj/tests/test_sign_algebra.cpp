#include <doctest.h>

#include <random>

#include "invset/cosequence.hpp"
#include "invset/errors.hpp"
#include "invset/sign_algebra.hpp"
#include "oracles.hpp"

using namespace invset;

namespace {

SignedPermOp random_op(std::size_t dim, std::mt19937_64& rng) {
  std::vector<SignedPermOp::Index> t(dim);
  for (std::size_t i = 0; i < dim; ++i) t[i] = static_cast<SignedPermOp::Index>(i);
  std::shuffle(t.begin(), t.end(), rng);
  std::vector<std::int8_t> s(dim);
  for (auto& x : s) x = (rng() & 1U) ? 1 : -1;
  return SignedPermOp(t, s);
}

std::vector<int> as_ints(const CoSequence& s) {
  std::vector<int> v;
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(s[i]);
  return v;
}

}  // namespace

TEST_CASE("construction rejects malformed operators") {
  CHECK_THROWS_AS(SignedPermOp({0, 0}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(SignedPermOp({0, 1, 2}, {1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(SignedPermOp({1, 0}, {1, 2}), InvalidArgument);
  CHECK_NOTHROW(SignedPermOp({1, 0}, {1, -1}));
}

TEST_CASE("imaginary unit is [[0,1],[¬,0]] and squares to minus one") {
  const SignedPermOp i = SignedPermOp::imaginary_unit();
  CHECK(oracle::dense(i) == oracle::unit_i());
  CHECK(compose(i, i) == negate(SignedPermOp::identity(2)));
  CHECK(power(i, 4) == SignedPermOp::identity(2));
  CHECK(i.render() == ". 1\n¬ .\n");
}

TEST_CASE("compose, negate and adjoint agree with dense matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t dim : {2U, 4U, 8U, 16U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SignedPermOp a = random_op(dim, rng);
      const SignedPermOp b = random_op(dim, rng);
      CHECK(oracle::dense(compose(a, b)) == oracle::mul(oracle::dense(a), oracle::dense(b)));
      CHECK(oracle::dense(negate(a)) == oracle::neg(oracle::dense(a)));
      CHECK(oracle::dense(adjoint(a)) == oracle::transpose(oracle::dense(a)));
      CHECK(is_unitary(a));
      CHECK(oracle::dense(power(a, 5)) == oracle::power(oracle::dense(a), 5));
    }
  }
}

TEST_CASE("apply is the matrix-vector product and composes in written order") {
  std::mt19937_64 rng(11);
  const SignedPermOp a = random_op(8, rng);
  const SignedPermOp b = random_op(8, rng);
  std::vector<std::int8_t> signs(8);
  for (auto& x : signs) x = (rng() & 1U) ? 1 : -1;
  const CoSequence s("a", signs);
  std::vector<int> v(signs.begin(), signs.end());
  CHECK(as_ints(apply(a, s)) == oracle::mul(oracle::dense(a), v));
  CHECK(apply(compose(a, b), s) == apply(a, apply(b, s)));
  CHECK_THROWS_AS(apply(a, CoSequence::all_plus("a", 4)), DimensionMismatch);
}

TEST_CASE("bar replication and block builders") {
  const SignedPermOp i = SignedPermOp::imaginary_unit();
  CHECK(oracle::dense(bar_replicate(i, 8)) == oracle::kron_eye(oracle::unit_i(), 8));
  CHECK_THROWS_AS(bar_replicate(i, 6), InvalidArgument);
  CHECK_THROWS_AS(bar_replicate(SignedPermOp::identity(4), 2), InvalidArgument);
  const auto z = oracle::zeros(2);
  CHECK(oracle::dense(block_diag(i, negate(i))) == oracle::blocks(oracle::unit_i(), z, z, oracle::neg(oracle::unit_i())));
  CHECK(oracle::dense(block_antidiag(i, i)) == oracle::blocks(z, oracle::unit_i(), oracle::unit_i(), z));
}

TEST_CASE("powers of the replicated unit give the four SG groupings") {
  const SignedPermOp i4 = bar_replicate(SignedPermOp::imaginary_unit(), 4);
  const CoSequence a = CoSequence::all_plus("a", 4);
  CHECK(apply(power(i4, 1), a).render() == "a ¬a a ¬a");
  CHECK(apply(power(i4, 2), a).render() == "¬a ¬a ¬a ¬a");
  CHECK(apply(power(i4, 3), a).render() == "¬a a ¬a a");
  CHECK(apply(power(i4, 4), a).render() == "a a a a");
}

TEST_CASE("hermiticity conventions") {
  const SignedPermOp one = SignedPermOp::identity(4);
  CHECK(is_hermitian(one));
  CHECK(is_hermitian(negate(one)));
  CHECK_FALSE(is_i_hermitian(one));
  const SignedPermOp i4 = bar_replicate(SignedPermOp::imaginary_unit(), 4);
  CHECK(is_i_hermitian(i4));
  CHECK(is_hermitian(i4));
  // A plain permutation swapping two rows is symmetric but not i-Hermitian.
  const SignedPermOp swap({1, 0, 2, 3}, {1, 1, 1, 1});
  CHECK(is_hermitian(swap));
  CHECK_FALSE(is_i_hermitian(swap));
}
