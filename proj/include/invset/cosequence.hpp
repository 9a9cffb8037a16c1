#pragma once

// Co-sequences of signed symbols and the statistics computed over them.
//
// Exact statistics (FrequencyReport, CorrelationReport, DispersionReport) are
// rationals obtained by counting every position. Monte-Carlo estimates are a
// separate type, EmpiricalEstimate, which always carries its sample count.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "invset/rational.hpp"
#include "invset/surd.hpp"

namespace invset {

class CoSequence {
 public:
  /// `signs` holds +1 for the label and -1 for its negation; the length must
  /// be a power of two.
  CoSequence(std::string label, std::vector<std::int8_t> signs);

  static CoSequence all_plus(std::string label, std::size_t length);

  const std::string& label() const { return label_; }
  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const std::int8_t> signs() const { return signs_; }

  /// "a ¬a a ¬a"
  std::string render() const;

  friend bool operator==(const CoSequence&, const CoSequence&) = default;

 private:
  std::string label_;
  std::vector<std::int8_t> signs_;
};

/// A co-sequence whose entries are computed on demand. Used when the length
/// 2^N is too large to materialize.
struct IndexedCoSequence {
  std::string label;
  std::uint64_t length = 0;
  std::function<int(std::uint64_t)> sign_at;

  static IndexedCoSequence view(const CoSequence& s);
};

struct FrequencyReport {
  std::uint64_t total = 0;
  std::uint64_t plus_count = 0;
  Rational frequency;
};

struct CorrelationReport {
  Rational agreement;
  Rational correlation;  // 2 * agreement - 1
};

struct DispersionReport {
  Rational variance1;  // Δ₁²
  Rational variance2;  // Δ₂²
  Surd product;        // Δ₁Δ₂, exact
};

FrequencyReport frequency(const CoSequence& s);

/// Positional agreement; throws DimensionMismatch on unequal lengths.
CorrelationReport agreement(const CoSequence& s1, const CoSequence& s2);

/// Population standard deviations with a ↦ +1/2, ¬a ↦ -1/2.
DispersionReport dispersion(const CoSequence& s1, const CoSequence& s2);

/// Population variance of a ±1/2 valued sequence whose +1/2 frequency is p.
Rational half_spin_variance(const Rational& p);

// ---------------------------------------------------------------------------
// Sampling

/// A Monte-Carlo estimate of a proportion.
struct EmpiricalEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;

  double estimate() const { return samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples); }
  /// Binomial standard error of the proportion for a reference probability p.
  double sigma(double p) const;
  /// |estimate - p| <= k * sigma(p)
  bool within(double p, double k) const;
};

/// Draws are allocated to fixed chunks of this size; chunk c uses seed
/// `seed + c`. The result is therefore independent of the worker count.
inline constexpr std::uint64_t kSampleChunk = 8192;

/// n uniform draws with replacement from the positions of `s`, returning the
/// drawn signs. Deterministic for a given (n, seed).
std::vector<std::int8_t> sample(const CoSequence& s, std::uint64_t n, std::uint64_t seed);

/// Drawn positions only; shared by the paired estimators below.
std::vector<std::uint64_t> sample_positions(std::uint64_t length, std::uint64_t n, std::uint64_t seed);

EmpiricalEstimate sample_frequency(const IndexedCoSequence& s, std::uint64_t n, std::uint64_t seed,
                                   unsigned workers = 1);

/// Fraction of jointly drawn positions at which the two co-sequences agree.
EmpiricalEstimate sample_agreement(const IndexedCoSequence& s1, const IndexedCoSequence& s2, std::uint64_t n,
                                   std::uint64_t seed, unsigned workers = 1);

}  // namespace invset
