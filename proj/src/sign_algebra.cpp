#include "invset/sign_algebra.hpp"

#include <numeric>
#include <sstream>

#include "invset/cosequence.hpp"
#include "invset/errors.hpp"

namespace invset {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

SignedPermOp::SignedPermOp(std::vector<Index> target, std::vector<std::int8_t> sign)
    : target_(std::move(target)), sign_(std::move(sign)) {
  const std::size_t d = target_.size();
  if (sign_.size() != d) throw InvalidArgument("target and sign arrays differ in length");
  if (!is_power_of_two(d)) throw InvalidArgument("operator dimension " + std::to_string(d) + " is not a power of two");
  std::vector<bool> seen(d, false);
  for (std::size_t r = 0; r < d; ++r) {
    const Index t = target_[r];
    if (t >= d || seen[t]) throw InvalidArgument("target is not a bijection at row " + std::to_string(r));
    seen[t] = true;
    if (sign_[r] != 1 && sign_[r] != -1) throw InvalidArgument("sign must be +1 or -1 at row " + std::to_string(r));
  }
}

SignedPermOp SignedPermOp::identity(std::size_t dim) {
  if (!is_power_of_two(dim)) throw InvalidArgument("operator dimension " + std::to_string(dim) + " is not a power of two");
  std::vector<Index> t(dim);
  std::iota(t.begin(), t.end(), Index{0});
  return SignedPermOp(Unchecked{}, std::move(t), std::vector<std::int8_t>(dim, 1));
}

SignedPermOp SignedPermOp::imaginary_unit() { return SignedPermOp({1, 0}, {1, -1}); }

std::size_t SignedPermOp::plus_count() const {
  std::size_t n = 0;
  for (auto s : sign_) n += s > 0 ? 1 : 0;
  return n;
}

std::string SignedPermOp::render() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < dim(); ++c) {
      if (c) os << ' ';
      if (target_[r] == c) {
        os << (sign_[r] > 0 ? "1" : "¬");
      } else {
        os << '.';
      }
    }
    os << '\n';
  }
  return os.str();
}

SignedPermOp compose(const SignedPermOp& a, const SignedPermOp& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("compose: dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  const std::size_t d = a.dim();
  std::vector<SignedPermOp::Index> t(d);
  std::vector<std::int8_t> s(d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto k = a.target_[r];
    t[r] = b.target_[k];
    s[r] = static_cast<std::int8_t>(a.sign_[r] * b.sign_[k]);
  }
  return SignedPermOp(SignedPermOp::Unchecked{}, std::move(t), std::move(s));
}

SignedPermOp negate(const SignedPermOp& a) {
  std::vector<std::int8_t> s(a.sign_.size());
  for (std::size_t r = 0; r < s.size(); ++r) s[r] = static_cast<std::int8_t>(-a.sign_[r]);
  return SignedPermOp(SignedPermOp::Unchecked{}, a.target_, std::move(s));
}

SignedPermOp adjoint(const SignedPermOp& a) {
  const std::size_t d = a.dim();
  std::vector<SignedPermOp::Index> t(d);
  std::vector<std::int8_t> s(d);
  for (std::size_t r = 0; r < d; ++r) {
    t[a.target_[r]] = static_cast<SignedPermOp::Index>(r);
    s[a.target_[r]] = a.sign_[r];
  }
  return SignedPermOp(SignedPermOp::Unchecked{}, std::move(t), std::move(s));
}

SignedPermOp bar_replicate(const SignedPermOp& a, std::size_t ambient_dim) {
  const std::size_t d = a.dim();
  if (!is_power_of_two(ambient_dim) || ambient_dim % d != 0) {
    throw InvalidArgument("bar_replicate: ambient dimension " + std::to_string(ambient_dim) +
                          " is not a power-of-two multiple of " + std::to_string(d));
  }
  std::vector<SignedPermOp::Index> t(ambient_dim);
  std::vector<std::int8_t> s(ambient_dim);
  for (std::size_t base = 0; base < ambient_dim; base += d) {
    for (std::size_t r = 0; r < d; ++r) {
      t[base + r] = static_cast<SignedPermOp::Index>(base + a.target_[r]);
      s[base + r] = a.sign_[r];
    }
  }
  return SignedPermOp(SignedPermOp::Unchecked{}, std::move(t), std::move(s));
}

SignedPermOp block_diag(const SignedPermOp& a, const SignedPermOp& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("block_diag: block dimensions differ");
  const std::size_t d = a.dim();
  std::vector<SignedPermOp::Index> t(2 * d);
  std::vector<std::int8_t> s(2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    t[r] = a.target_[r];
    s[r] = a.sign_[r];
    t[d + r] = static_cast<SignedPermOp::Index>(d + b.target_[r]);
    s[d + r] = b.sign_[r];
  }
  return SignedPermOp(SignedPermOp::Unchecked{}, std::move(t), std::move(s));
}

SignedPermOp block_antidiag(const SignedPermOp& a, const SignedPermOp& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("block_antidiag: block dimensions differ");
  const std::size_t d = a.dim();
  std::vector<SignedPermOp::Index> t(2 * d);
  std::vector<std::int8_t> s(2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    t[r] = static_cast<SignedPermOp::Index>(d + a.target_[r]);
    s[r] = a.sign_[r];
    t[d + r] = b.target_[r];
    s[d + r] = b.sign_[r];
  }
  return SignedPermOp(SignedPermOp::Unchecked{}, std::move(t), std::move(s));
}

SignedPermOp power(const SignedPermOp& a, std::uint64_t m) {
  SignedPermOp result = SignedPermOp::identity(a.dim());
  SignedPermOp base = a;
  while (m > 0) {
    if (m & 1U) result = compose(result, base);
    m >>= 1U;
    if (m > 0) base = compose(base, base);
  }
  return result;
}

CoSequence apply(const SignedPermOp& a, const CoSequence& s) {
  if (a.dim() != s.size()) {
    throw DimensionMismatch("apply: operator dimension " + std::to_string(a.dim()) + " vs co-sequence length " +
                            std::to_string(s.size()));
  }
  std::vector<std::int8_t> out(s.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = static_cast<std::int8_t>(a.sign(r) * s[a.target(r)]);
  return CoSequence(s.label(), std::move(out));
}

bool equals(const SignedPermOp& a, const SignedPermOp& b) { return a == b; }

bool is_unitary(const SignedPermOp& a) { return compose(adjoint(a), a) == SignedPermOp::identity(a.dim()); }

bool is_i_hermitian(const SignedPermOp& a) {
  if (a.dim() < 2) return false;
  const SignedPermOp ia = compose(bar_replicate(SignedPermOp::imaginary_unit(), a.dim()), a);
  return adjoint(ia) == ia;
}

bool is_hermitian(const SignedPermOp& a) { return adjoint(a) == a || is_i_hermitian(a); }

}  // namespace invset
