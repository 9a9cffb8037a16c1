#include "invset/cosequence.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "invset/errors.hpp"
#include "invset/sign_algebra.hpp"

namespace invset {

// ---------------------------------------------------------------------------
// Surd

Surd::Surd(Rational coeff, Rational radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw InvalidArgument("surd radicand must be non-negative");
}

std::optional<Rational> Surd::rational_value() const {
  if (coeff_.is_zero()) return Rational(0);
  if (auto root = radicand_.sqrt()) return coeff_ * *root;
  return std::nullopt;
}

Rational Surd::signed_square() const {
  Rational sq = coeff_ * coeff_ * radicand_;
  return coeff_.sign() < 0 ? -sq : sq;
}

double Surd::to_double() const { return coeff_.to_double() * std::sqrt(radicand_.to_double()); }

std::string Surd::str() const {
  if (auto r = rational_value()) return r->str();
  if (coeff_ == Rational(1)) return "sqrt(" + radicand_.str() + ")";
  return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
}

// ---------------------------------------------------------------------------
// CoSequence

CoSequence::CoSequence(std::string label, std::vector<std::int8_t> signs)
    : label_(std::move(label)), signs_(std::move(signs)) {
  if (!is_power_of_two(signs_.size())) {
    throw InvalidArgument("co-sequence length " + std::to_string(signs_.size()) + " is not a power of two");
  }
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("co-sequence entries must be +1 or -1");
  }
}

CoSequence CoSequence::all_plus(std::string label, std::size_t length) {
  return CoSequence(std::move(label), std::vector<std::int8_t>(length, 1));
}

std::string CoSequence::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) os << ' ';
    os << (signs_[i] > 0 ? "" : "¬") << label_;
  }
  return os.str();
}

IndexedCoSequence IndexedCoSequence::view(const CoSequence& s) {
  return {s.label(), s.size(), [&s](std::uint64_t i) { return s[static_cast<std::size_t>(i)]; }};
}

FrequencyReport frequency(const CoSequence& s) {
  const auto plus = static_cast<std::uint64_t>(std::count(s.signs().begin(), s.signs().end(), std::int8_t{1}));
  return {s.size(), plus, Rational(static_cast<long>(plus), static_cast<long>(s.size()))};
}

CorrelationReport agreement(const CoSequence& s1, const CoSequence& s2) {
  if (s1.size() != s2.size()) {
    throw DimensionMismatch("agreement: lengths " + std::to_string(s1.size()) + " and " + std::to_string(s2.size()));
  }
  long agree = 0;
  for (std::size_t i = 0; i < s1.size(); ++i) agree += s1[i] == s2[i] ? 1 : 0;
  Rational a(agree, static_cast<long>(s1.size()));
  return {a, Rational(2) * a - Rational(1)};
}

Rational half_spin_variance(const Rational& p) { return p * (Rational(1) - p); }

DispersionReport dispersion(const CoSequence& s1, const CoSequence& s2) {
  const Rational v1 = half_spin_variance(frequency(s1).frequency);
  const Rational v2 = half_spin_variance(frequency(s2).frequency);
  return {v1, v2, Surd::sqrt_of(v1 * v2)};
}

// ---------------------------------------------------------------------------
// Sampling

double EmpiricalEstimate::sigma(double p) const {
  if (samples == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

bool EmpiricalEstimate::within(double p, double k) const {
  return std::abs(estimate() - p) <= k * sigma(p) + 1e-15;
}

namespace {

template <class ChunkFn>
void for_each_chunk(std::uint64_t n, unsigned workers, ChunkFn&& fn) {
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = w; c < chunks; c += workers) fn(c);
    });
  }
  for (auto& t : pool) t.join();
}

template <class Visit>
void draw_chunk(std::uint64_t length, std::uint64_t n, std::uint64_t seed, std::uint64_t chunk, Visit&& visit) {
  std::mt19937_64 rng(seed + chunk);
  std::uniform_int_distribution<std::uint64_t> pick(0, length - 1);
  const std::uint64_t begin = chunk * kSampleChunk;
  const std::uint64_t end = std::min(n, begin + kSampleChunk);
  for (std::uint64_t k = begin; k < end; ++k) visit(k, pick(rng));
}

}  // namespace

std::vector<std::uint64_t> sample_positions(std::uint64_t length, std::uint64_t n, std::uint64_t seed) {
  if (length == 0) throw InvalidArgument("cannot sample an empty co-sequence");
  std::vector<std::uint64_t> out(n);
  for_each_chunk(n, 1, [&](std::uint64_t c) {
    draw_chunk(length, n, seed, c, [&](std::uint64_t k, std::uint64_t pos) { out[k] = pos; });
  });
  return out;
}

std::vector<std::int8_t> sample(const CoSequence& s, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample size must be at least 1");
  const auto pos = sample_positions(s.size(), n, seed);
  std::vector<std::int8_t> out(n);
  for (std::uint64_t k = 0; k < n; ++k) out[k] = static_cast<std::int8_t>(s[static_cast<std::size_t>(pos[k])]);
  return out;
}

EmpiricalEstimate sample_frequency(const IndexedCoSequence& s, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  if (n == 0) throw InvalidArgument("sample size must be at least 1");
  if (s.length == 0) throw InvalidArgument("cannot sample an empty co-sequence");
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  for_each_chunk(n, workers, [&](std::uint64_t c) {
    std::uint64_t h = 0;
    draw_chunk(s.length, n, seed, c, [&](std::uint64_t, std::uint64_t pos) { h += s.sign_at(pos) > 0 ? 1 : 0; });
    hits[c] = h;
  });
  EmpiricalEstimate e;
  e.samples = n;
  for (auto h : hits) e.hits += h;
  return e;
}

EmpiricalEstimate sample_agreement(const IndexedCoSequence& s1, const IndexedCoSequence& s2, std::uint64_t n,
                                   std::uint64_t seed, unsigned workers) {
  if (n == 0) throw InvalidArgument("sample size must be at least 1");
  if (s1.length != s2.length) throw DimensionMismatch("sample_agreement: co-sequence lengths differ");
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  for_each_chunk(n, workers, [&](std::uint64_t c) {
    std::uint64_t h = 0;
    draw_chunk(s1.length, n, seed, c,
               [&](std::uint64_t, std::uint64_t pos) { h += s1.sign_at(pos) == s2.sign_at(pos) ? 1 : 0; });
    hits[c] = h;
  });
  EmpiricalEstimate e;
  e.samples = n;
  for (auto h : hits) e.hits += h;
  return e;
}

}  // namespace invset
