#pragma once

// n-label co-sequence families ("lbits") built from ordered products of
// fractional family powers, and the entangled configurations obtained by
// sharing circle coordinates between rows.

#include <string>
#include <vector>

#include "invset/cosequence.hpp"
#include "invset/root_family.hpp"

namespace invset {

struct LbitParam {
  CircleCoord J;
  Q2Exponent alpha;
};

/// Row r of an n-lbit is the product of the parameters listed in
/// assignment[r], in written order, applied to an all-plus base.
struct LbitConfig {
  unsigned n = 0;
  /// params[i - 1] holds (J_i, α_i), i = 1 .. 2^n - 1.
  std::vector<LbitParam> params;
  /// 1-based parameter indices per row.
  std::vector<std::vector<unsigned>> assignment;

  /// The explicit index tables for n = 1..4.
  static std::vector<std::vector<unsigned>> explicit_assignment(unsigned n);
  /// Generated tables: columns built right to left, one shared last column,
  /// then for k = n-1 down to ceil(n/2) one column per split of the rows into
  /// a group of k and a group of n-k (unordered splits when k = n/2). Within
  /// a block the k-groups run in lexicographic order left to right. Column j
  /// uses indices 2j-1 (the group containing the first row) and 2j; the last
  /// column uses 2^n - 1.
  static std::vector<std::vector<unsigned>> ansatz_assignment(unsigned n);
  /// explicit_assignment for n <= 4, ansatz_assignment beyond.
  static std::vector<std::vector<unsigned>> assignment_for(unsigned n);

  /// Uses assignment_for(params count); params.size() must be 2^n - 1.
  static LbitConfig make(unsigned n, std::vector<LbitParam> params);

  /// 2·(2^n - 1)
  unsigned free_parameter_count() const { return 2 * static_cast<unsigned>(params.size()); }

  /// Throws InvalidArgument on a malformed shape: wrong parameter count,
  /// wrong row count, rows not of length 2^(n-1), or indices out of range.
  void validate() const;
};

/// The row split realized by each column of an assignment table: for column
/// c, the rows sharing the operator of the first row (1-based row numbers).
/// Tables with the same splits per column block describe the same linkage
/// structure.
std::vector<std::vector<unsigned>> column_groups(const std::vector<std::vector<unsigned>>& assignment);

/// Row labels a, b, c, ...
std::string lbit_label(unsigned row);

struct LbitState {
  std::vector<CoSequence> rows;
};

/// Requires a materializable configuration.
LbitState build_lbit(const LbitConfig& config, const RootFamily& family);

/// Entry-on-demand rows for configurations too large to materialize.
struct LbitView {
  std::vector<IndexedCoSequence> rows;
};

LbitView view_lbit(const LbitConfig& config, const RootFamily& family);

/// 2-lbit with J_2 = J_1.
LbitConfig entangled_pair_config(const Q2Exponent& alpha1, const Q2Exponent& alpha2, const Q2Exponent& alpha3,
                                 CircleCoord J1, CircleCoord J3);
LbitState entangle_pair(const Q2Exponent& alpha1, const Q2Exponent& alpha2, const Q2Exponent& alpha3,
                        CircleCoord J1, CircleCoord J3, const RootFamily& family);

/// |1 - δ/2| with δ = α2 - α1 mod 4.
Rational predicted_agreement(const Q2Exponent& alpha1, const Q2Exponent& alpha2);

/// 3-lbit with J_1 = ... = J_6; alphas holds α_1 .. α_7.
LbitConfig ghz_config(const std::vector<Q2Exponent>& alphas, CircleCoord J1, CircleCoord J7);
LbitState ghz_triple(const std::vector<Q2Exponent>& alphas, CircleCoord J1, CircleCoord J7,
                     const RootFamily& family);

/// β_1 = α1+α3+α5, β_2 = α2+α3+α6, β_3 = α2+α4+α5.
std::vector<Q2Exponent> ghz_betas(const std::vector<Q2Exponent>& alphas);

}  // namespace invset
