#include "invset/root_family.hpp"

#include "invset/errors.hpp"

namespace invset {

AmbientConfig::AmbientConfig(unsigned n_tot) : n_tot_(n_tot) {
  if (n_tot < 2 || n_tot > kMaxNTot) {
    throw InvalidArgument("n_tot must be in 2.." + std::to_string(kMaxNTot) + ", got " + std::to_string(n_tot));
  }
}

CircleCoord::CircleCoord(unsigned J, const AmbientConfig& config) : J_(J) {
  if (J < 1 || J > config.circle_size()) {
    throw InvalidArgument("circle coordinate J=" + std::to_string(J) + " outside 1.." +
                          std::to_string(config.circle_size()));
  }
}

CircleCoord CircleCoord::advanced(const AmbientConfig& config) const {
  const unsigned size = config.circle_size();
  return CircleCoord((J_ - 1 + config.M()) % size + 1, config);
}

// ---------------------------------------------------------------------------
// Q2Exponent

namespace {

constexpr unsigned kMaxStoredResolution = 60;

std::pair<std::uint64_t, unsigned> reduce_dyadic(std::uint64_t k, unsigned R) {
  const std::uint64_t period = std::uint64_t{4} << R;
  k %= period;
  if (k == 0) return {0, 0};
  while (R > 0 && (k & 1U) == 0) {
    k >>= 1U;
    --R;
  }
  return {k, R};
}

}  // namespace

Q2Exponent::Q2Exponent(std::uint64_t k, unsigned R) {
  auto [rk, rR] = reduce_dyadic(k, R);
  k_ = rk;
  R_ = rR;
}

Q2Exponent Q2Exponent::from_lattice(std::uint64_t k, unsigned R, const AmbientConfig& config) {
  Q2Exponent e(k, R);
  if (e.R_ > config.max_resolution()) {
    throw UndefinedExponent("exponent " + e.value().str() + " is finer than the lattice resolution 2^-" +
                            std::to_string(config.max_resolution()));
  }
  return e;
}

Q2Exponent Q2Exponent::from_rational(const Rational& alpha, const AmbientConfig& config) {
  const auto exponent = alpha.dyadic_exponent();
  if (!exponent || *exponent > config.max_resolution()) {
    throw UndefinedExponent("exponent " + alpha.str() + " is not on the dyadic lattice with resolution 2^-" +
                            std::to_string(config.max_resolution()));
  }
  const Rational reduced = alpha.mod(4);
  const mpz_class& num = reduced.num();
  return Q2Exponent(num.get_ui(), *exponent);
}

std::vector<Q2Exponent> Q2Exponent::lattice(const AmbientConfig& config) {
  const unsigned R = config.max_resolution();
  std::vector<Q2Exponent> out;
  out.reserve(config.lattice_size());
  for (std::uint64_t k = 0; k < config.lattice_size(); ++k) out.push_back(Q2Exponent(k, R));
  return out;
}

Rational Q2Exponent::value() const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, R_);
  mpz_class num;
  mpz_set_ui(num.get_mpz_t(), k_);
  return Rational(num, den);
}

std::uint64_t Q2Exponent::numerator_at(unsigned resolution) const {
  if (resolution < R_) throw InvalidArgument("numerator_at: resolution below the exponent's own");
  return k_ << (resolution - R_);
}

Q2Exponent operator+(const Q2Exponent& a, const Q2Exponent& b) {
  const unsigned R = std::max(a.R_, b.R_);
  if (R > kMaxStoredResolution) throw InvalidArgument("exponent resolution overflow");
  return Q2Exponent(a.numerator_at(R) + b.numerator_at(R), R);
}

Q2Exponent operator-(const Q2Exponent& a, const Q2Exponent& b) {
  const unsigned R = std::max(a.R_, b.R_);
  const std::uint64_t period = std::uint64_t{4} << R;
  return Q2Exponent(a.numerator_at(R) + (period - b.numerator_at(R) % period), R);
}

// ---------------------------------------------------------------------------
// RootFamily

RootFamily RootFamily::build(const AmbientConfig& config) {
  std::vector<SignedPermOp> level{SignedPermOp::imaginary_unit()};
  for (unsigned dim = 2; dim < config.N(); dim *= 2) {
    const SignedPermOp one = SignedPermOp::identity(dim);
    std::vector<SignedPermOp> next;
    next.reserve(2 * level.size() + 1);
    for (const auto& e : level) next.push_back(block_diag(e, negate(e)));
    for (const auto& e : level) next.push_back(block_antidiag(e, e));
    next.push_back(block_antidiag(negate(one), one));
    level = std::move(next);
  }
  return RootFamily(config, std::move(level));
}

RootFamily RootFamily::from_members(const AmbientConfig& config, std::vector<SignedPermOp> members) {
  if (members.size() != config.N() - 1) {
    throw InvalidArgument("a root family at n_tot=" + std::to_string(config.n_tot()) + " has " +
                          std::to_string(config.N() - 1) + " members");
  }
  for (const auto& m : members) {
    if (m.dim() != config.N()) throw DimensionMismatch("family member has the wrong dimension");
  }
  return RootFamily(config, std::move(members));
}

const SignedPermOp& RootFamily::member(unsigned j) const {
  if (j < 1 || j > members_.size()) {
    throw InvalidArgument("family index " + std::to_string(j) + " outside 1.." + std::to_string(members_.size()));
  }
  return members_[j - 1];
}

SignedPermOp RootFamily::cycle_coordinate(CircleCoord J) const {
  const unsigned twoM = 2 * config_.M();
  const unsigned j = J.value();
  return j <= twoM ? member(j) : negate(member(j - twoM));
}

// ---------------------------------------------------------------------------
// Quaternion triples

namespace {

std::optional<std::size_t> first_difference(const SignedPermOp& a, const SignedPermOp& b) {
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (a.entry(r) != b.entry(r)) return r;
  }
  return std::nullopt;
}

}  // namespace

QuaternionCheck quaternion_triple_check(const RootFamily& family, unsigned j) {
  const AmbientConfig& cfg = family.config();
  const unsigned M = cfg.M();
  if (j < 1 || j > M) {
    throw InvalidArgument("triple index " + std::to_string(j) + " outside 1.." + std::to_string(M));
  }
  const unsigned jm = j + M;
  const unsigned k = cfg.N() - 1;
  const SignedPermOp& ej = family.member(j);
  const SignedPermOp& ejm = family.member(jm);
  const SignedPermOp& ek = family.member(k);
  const SignedPermOp minus_one = negate(SignedPermOp::identity(cfg.N()));

  auto idx = [](unsigned n) { return "E[" + std::to_string(n) + "]"; };
  struct Relation {
    std::string name;
    SignedPermOp lhs;
    SignedPermOp rhs;
    std::vector<unsigned> members;
  };
  const Relation relations[] = {
      {idx(j) + "∘" + idx(j) + " == -1", compose(ej, ej), minus_one, {j}},
      {idx(jm) + "∘" + idx(jm) + " == -1", compose(ejm, ejm), minus_one, {jm}},
      {idx(k) + "∘" + idx(k) + " == -1", compose(ek, ek), minus_one, {k}},
      {idx(j) + "∘" + idx(jm) + " == " + idx(k), compose(ej, ejm), ek, {j, jm, k}},
      {idx(k) + "∘" + idx(j) + " == " + idx(jm), compose(ek, ej), ejm, {k, j, jm}},
      {idx(k) + "∘" + idx(jm) + " == -" + idx(j), compose(ek, ejm), negate(ej), {k, jm, j}},
  };
  for (const auto& rel : relations) {
    if (auto row = first_difference(rel.lhs, rel.rhs)) {
      return {false, rel.name, rel.members, row};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Fractional powers

SignedPermOp root(const SignedPermOp& a) { return block_antidiag(SignedPermOp::identity(a.dim()), a); }

SignedPermOp pow(const RootFamily& family, CircleCoord J, const Q2Exponent& alpha) {
  const AmbientConfig& cfg = family.config();
  if (!cfg.materializable()) {
    throw InvalidArgument("pow: n_tot=" + std::to_string(cfg.n_tot()) + " is too large to materialize; use PowerView");
  }
  if (alpha.resolution() > cfg.max_resolution()) {
    throw UndefinedExponent("exponent " + alpha.value().str() + " is finer than the lattice resolution");
  }
  SignedPermOp block = family.cycle_coordinate(J);
  for (unsigned r = 0; r < alpha.resolution(); ++r) block = root(block);
  return bar_replicate(power(block, alpha.numerator()), static_cast<std::size_t>(cfg.length()));
}

namespace {

std::uint64_t reverse_bits(std::uint64_t x, unsigned width) {
  std::uint64_t out = 0;
  for (unsigned b = 0; b < width; ++b) {
    out = (out << 1U) | (x & 1U);
    x >>= 1U;
  }
  return out;
}

}  // namespace

PowerView::PowerView(const RootFamily& family, CircleCoord J, const Q2Exponent& alpha)
    : base_(family.cycle_coordinate(J)),
      dim_(family.config().length()),
      n_tot_(family.config().n_tot()),
      resolution_(alpha.resolution()),
      steps_(alpha.numerator()) {
  if (resolution_ > family.config().max_resolution()) {
    throw UndefinedExponent("exponent " + alpha.value().str() + " is finer than the lattice resolution");
  }
}

Entry PowerView::entry(std::uint64_t row) const {
  // The iterated root acts on a block of 2^R·N rows as a counter: the R
  // block bits, read least-significant-first from the top, are incremented
  // once per application, and each carry out of the counter applies the base
  // operator to the inner index.
  const unsigned inner_bits = n_tot_;
  const std::uint64_t block_bits = resolution_ + inner_bits;
  const std::uint64_t outer = row >> block_bits;
  const std::uint64_t local = row & ((std::uint64_t{1} << block_bits) - 1);
  const std::uint64_t h = local >> inner_bits;
  std::uint64_t inner = local & ((std::uint64_t{1} << inner_bits) - 1);

  const std::uint64_t counter = reverse_bits(h, resolution_) + steps_;
  const std::uint64_t carries = counter >> resolution_;
  const std::uint64_t new_h = reverse_bits(counter & ((std::uint64_t{1} << resolution_) - 1), resolution_);

  int sign = 1;
  for (std::uint64_t c = 0; c < carries; ++c) {
    sign *= base_.sign(static_cast<std::size_t>(inner));
    inner = base_.target(static_cast<std::size_t>(inner));
  }
  return {(outer << block_bits) | (new_h << inner_bits) | inner, sign};
}

Entry compose_entries(const std::vector<PowerView>& factors, std::uint64_t row) {
  Entry e{row, 1};
  for (const auto& f : factors) {
    const Entry step = f.entry(e.target);
    e.target = step.target;
    e.sign *= step.sign;
  }
  return e;
}

}  // namespace invset
