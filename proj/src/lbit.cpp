#include "invset/lbit.hpp"

#include <algorithm>
#include <map>

#include "invset/errors.hpp"

namespace invset {

namespace {

unsigned param_count(unsigned n) { return (1U << n) - 1; }

/// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> pick(k);
  for (unsigned i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<std::vector<unsigned>> LbitConfig::explicit_assignment(unsigned n) {
  switch (n) {
    case 1:
      return {{1}};
    case 2:
      return {{1, 3}, {2, 3}};
    case 3:
      return {{1, 3, 5, 7}, {2, 3, 6, 7}, {2, 4, 5, 7}};
    case 4:
      return {{1, 3, 5, 7, 9, 11, 13, 15},
              {2, 3, 6, 7, 9, 12, 14, 15},
              {2, 4, 5, 7, 10, 11, 14, 15},
              {1, 4, 6, 8, 9, 11, 14, 15}};
    default:
      throw InvalidArgument("explicit lbit tables exist for n = 1..4 only, got " + std::to_string(n));
  }
}

std::vector<std::vector<unsigned>> LbitConfig::ansatz_assignment(unsigned n) {
  if (n < 1 || n > 16) throw InvalidArgument("lbit size must be in 1..16, got " + std::to_string(n));
  // Each column is the set of rows sharing the majority operator; built
  // right to left, so blocks are prepended.
  std::vector<std::vector<bool>> columns;
  columns.emplace_back(n, true);
  for (unsigned k = n - 1; k >= (n + 1) / 2 && k >= 1; --k) {
    std::vector<std::vector<bool>> block;
    for (const auto& subset : combinations(n, k)) {
      std::vector<bool> in(n, false);
      for (unsigned r : subset) in[r] = true;
      // For k = n/2 the split {S, complement} appears twice; keep the copy
      // whose k-group contains the first row.
      if (2 * k == n && !in[0]) continue;
      block.push_back(std::move(in));
    }
    columns.insert(columns.begin(), block.begin(), block.end());
  }

  std::vector<std::vector<unsigned>> rows(n);
  const auto ncol = static_cast<unsigned>(columns.size());
  for (unsigned c = 0; c < ncol; ++c) {
    const bool last = c + 1 == ncol;
    for (unsigned r = 0; r < n; ++r) {
      unsigned index = param_count(n);
      if (!last) index = columns[c][r] == columns[c][0] ? 2 * c + 1 : 2 * c + 2;
      rows[r].push_back(index);
    }
  }
  return rows;
}

std::vector<std::vector<unsigned>> LbitConfig::assignment_for(unsigned n) {
  return n <= 4 ? explicit_assignment(n) : ansatz_assignment(n);
}

LbitConfig LbitConfig::make(unsigned n, std::vector<LbitParam> params) {
  LbitConfig c{n, std::move(params), assignment_for(n)};
  c.validate();
  return c;
}

void LbitConfig::validate() const {
  if (n < 1) throw InvalidArgument("an lbit needs at least one label");
  const unsigned count = param_count(n);
  if (params.size() != count) {
    throw InvalidArgument(std::to_string(n) + "-lbit needs " + std::to_string(count) + " parameter pairs, got " +
                          std::to_string(params.size()));
  }
  if (free_parameter_count() != (2U << n) - 2) throw Error("lbit free-parameter count mismatch");
  if (assignment.size() != n) {
    throw InvalidArgument("assignment has " + std::to_string(assignment.size()) + " rows, expected " +
                          std::to_string(n));
  }
  const std::size_t ncol = std::size_t{1} << (n - 1);
  for (std::size_t r = 0; r < assignment.size(); ++r) {
    if (assignment[r].size() != ncol) {
      throw InvalidArgument("assignment row " + lbit_label(static_cast<unsigned>(r)) + " has " +
                            std::to_string(assignment[r].size()) + " operators, expected " + std::to_string(ncol));
    }
    for (unsigned idx : assignment[r]) {
      if (idx < 1 || idx > count) throw InvalidArgument("assignment index " + std::to_string(idx) + " out of range");
    }
  }
}

std::vector<std::vector<unsigned>> column_groups(const std::vector<std::vector<unsigned>>& assignment) {
  std::vector<std::vector<unsigned>> out;
  if (assignment.empty()) return out;
  for (std::size_t c = 0; c < assignment[0].size(); ++c) {
    std::vector<unsigned> group;
    for (std::size_t r = 0; r < assignment.size(); ++r) {
      if (assignment[r][c] == assignment[0][c]) group.push_back(static_cast<unsigned>(r) + 1);
    }
    out.push_back(std::move(group));
  }
  return out;
}

std::string lbit_label(unsigned row) {
  if (row < 26) return std::string(1, static_cast<char>('a' + row));
  return "a" + std::to_string(row + 1);
}

LbitState build_lbit(const LbitConfig& config, const RootFamily& family) {
  config.validate();
  const AmbientConfig& ambient = family.config();
  std::map<unsigned, SignedPermOp> cache;
  auto factor = [&](unsigned idx) -> const SignedPermOp& {
    auto it = cache.find(idx);
    if (it == cache.end()) {
      const LbitParam& p = config.params[idx - 1];
      it = cache.emplace(idx, pow(family, p.J, p.alpha)).first;
    }
    return it->second;
  };

  LbitState state;
  for (unsigned r = 0; r < config.n; ++r) {
    const auto& row = config.assignment[r];
    SignedPermOp product = factor(row.front());
    for (std::size_t c = 1; c < row.size(); ++c) product = compose(product, factor(row[c]));
    state.rows.push_back(apply(product, CoSequence::all_plus(lbit_label(r), ambient.length())));
  }
  return state;
}

LbitView view_lbit(const LbitConfig& config, const RootFamily& family) {
  config.validate();
  LbitView view;
  for (unsigned r = 0; r < config.n; ++r) {
    std::vector<PowerView> factors;
    for (unsigned idx : config.assignment[r]) {
      const LbitParam& p = config.params[idx - 1];
      factors.emplace_back(family, p.J, p.alpha);
    }
    view.rows.push_back({lbit_label(r), family.config().length(),
                         [factors = std::move(factors)](std::uint64_t i) { return compose_entries(factors, i).sign; }});
  }
  return view;
}

LbitConfig entangled_pair_config(const Q2Exponent& alpha1, const Q2Exponent& alpha2, const Q2Exponent& alpha3,
                                 CircleCoord J1, CircleCoord J3) {
  return LbitConfig::make(2, {{J1, alpha1}, {J1, alpha2}, {J3, alpha3}});
}

LbitState entangle_pair(const Q2Exponent& alpha1, const Q2Exponent& alpha2, const Q2Exponent& alpha3,
                        CircleCoord J1, CircleCoord J3, const RootFamily& family) {
  return build_lbit(entangled_pair_config(alpha1, alpha2, alpha3, J1, J3), family);
}

Rational predicted_agreement(const Q2Exponent& alpha1, const Q2Exponent& alpha2) {
  const Rational delta = (alpha2 - alpha1).value();
  return (Rational(1) - delta / Rational(2)).abs();
}

LbitConfig ghz_config(const std::vector<Q2Exponent>& alphas, CircleCoord J1, CircleCoord J7) {
  if (alphas.size() != 7) throw InvalidArgument("a GHZ triple takes seven exponents");
  std::vector<LbitParam> params;
  for (unsigned i = 0; i < 6; ++i) params.push_back({J1, alphas[i]});
  params.push_back({J7, alphas[6]});
  return LbitConfig::make(3, std::move(params));
}

LbitState ghz_triple(const std::vector<Q2Exponent>& alphas, CircleCoord J1, CircleCoord J7,
                     const RootFamily& family) {
  return build_lbit(ghz_config(alphas, J1, J7), family);
}

std::vector<Q2Exponent> ghz_betas(const std::vector<Q2Exponent>& a) {
  if (a.size() != 7) throw InvalidArgument("a GHZ triple takes seven exponents");
  return {a[0] + a[2] + a[4], a[1] + a[2] + a[5], a[1] + a[3] + a[4]};
}

}  // namespace invset
