#pragma once

// Reference implementations used only by tests. They share no code with the
// library: operators are dense integer matrices multiplied the textbook way.

#include <cstdint>
#include <vector>

#include "invset/sign_algebra.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<int>(n, 0)); }

inline Dense eye(std::size_t n) {
  Dense d = zeros(n);
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense neg(Dense a) {
  for (auto& row : a)
    for (auto& x : row) x = -x;
  return a;
}

inline Dense transpose(const Dense& a) {
  Dense t = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// [[tl, tr], [bl, br]]
inline Dense blocks(const Dense& tl, const Dense& tr, const Dense& bl, const Dense& br) {
  const std::size_t n = tl.size();
  Dense d = zeros(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = tl[i][j];
      d[i][j + n] = tr[i][j];
      d[i + n][j] = bl[i][j];
      d[i + n][j + n] = br[i][j];
    }
  return d;
}

/// diag(a, a, ..., a) of size n.
inline Dense kron_eye(const Dense& a, std::size_t n) {
  Dense d = zeros(n);
  const std::size_t m = a.size();
  for (std::size_t b = 0; b < n / m; ++b)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d[b * m + i][b * m + j] = a[i][j];
  return d;
}

inline Dense power(const Dense& a, std::uint64_t k) {
  Dense r = eye(a.size());
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

inline Dense dense(const invset::SignedPermOp& op) {
  Dense d = zeros(op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r) d[r][op.target(r)] = op.sign(r);
  return d;
}

/// Matrix-vector product on ±1 vectors.
inline std::vector<int> mul(const Dense& a, const std::vector<int>& v) {
  std::vector<int> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

/// The 2x2 unit [[0, 1], [-1, 0]].
inline Dense unit_i() { return {{0, 1}, {-1, 0}}; }

/// The family at dimension 2^k built by the block recursion, densely.
inline std::vector<Dense> family(unsigned dim) {
  std::vector<Dense> level{unit_i()};
  for (std::size_t d = 2; d < dim; d *= 2) {
    std::vector<Dense> next;
    const Dense z = zeros(d);
    for (const auto& e : level) next.push_back(blocks(e, z, z, neg(e)));
    for (const auto& e : level) next.push_back(blocks(z, e, e, z));
    next.push_back(blocks(z, neg(eye(d)), eye(d), z));
    level = std::move(next);
  }
  return level;
}

}  // namespace oracle
