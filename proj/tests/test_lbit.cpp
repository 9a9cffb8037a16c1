#include <doctest.h>

#include <algorithm>
#include <random>

#include "invset/errors.hpp"
#include "invset/lbit.hpp"
#include "invset/sign_algebra.hpp"

using namespace invset;

namespace {

std::vector<LbitParam> params_for(unsigned n, const AmbientConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pickJ(1, cfg.circle_size());
  std::uniform_int_distribution<std::uint64_t> pickk(0, cfg.lattice_size() - 1);
  std::vector<LbitParam> out;
  for (unsigned i = 0; i < (1U << n) - 1; ++i) {
    out.push_back({CircleCoord(pickJ(rng), cfg), Q2Exponent::from_lattice(pickk(rng), cfg.max_resolution(), cfg)});
  }
  return out;
}

}  // namespace

TEST_CASE("explicit tables") {
  CHECK(LbitConfig::explicit_assignment(2) == std::vector<std::vector<unsigned>>{{1, 3}, {2, 3}});
  const auto t3 = LbitConfig::explicit_assignment(3);
  CHECK(t3[0] == std::vector<unsigned>{1, 3, 5, 7});
  CHECK(t3[1] == std::vector<unsigned>{2, 3, 6, 7});
  CHECK(t3[2] == std::vector<unsigned>{2, 4, 5, 7});
  CHECK_THROWS_AS(LbitConfig::explicit_assignment(5), InvalidArgument);
}

TEST_CASE("the ansatz generator against the explicit tables") {
  CHECK(LbitConfig::ansatz_assignment(1) == LbitConfig::explicit_assignment(1));
  CHECK(LbitConfig::ansatz_assignment(2) == LbitConfig::explicit_assignment(2));
  // For n = 3, 4 the column orders differ; the multiset of row partitions
  // agrees.
  for (unsigned n : {3U, 4U}) {
    auto a = column_groups(LbitConfig::ansatz_assignment(n));
    auto p = column_groups(LbitConfig::explicit_assignment(n));
    CHECK(a.back() == p.back());
    std::sort(a.begin(), a.end());
    std::sort(p.begin(), p.end());
    CHECK(a == p);
  }
}

TEST_CASE("shape and parameter counts") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto t = LbitConfig::assignment_for(n);
    CHECK(t.size() == n);
    for (const auto& row : t) {
      CHECK(row.size() == (1U << (n - 1)));
      CHECK(row.back() == (1U << n) - 1);
    }
  }
  const AmbientConfig cfg(2);
  const LbitConfig c = LbitConfig::make(5, params_for(5, cfg, 1));
  CHECK(c.free_parameter_count() == 62);
  CHECK_THROWS_AS(LbitConfig::make(3, params_for(2, cfg, 1)), InvalidArgument);
}

TEST_CASE("one label is a single power") {
  const AmbientConfig cfg(3);
  const RootFamily family = RootFamily::build(cfg);
  const auto params = params_for(1, cfg, 4);
  const LbitState s = build_lbit(LbitConfig::make(1, params), family);
  CHECK(s.rows[0] == apply(pow(family, params[0].J, params[0].alpha), CoSequence::all_plus("a", cfg.length())));
}

TEST_CASE("operators compose in written order") {
  const AmbientConfig cfg(2);
  const RootFamily family = RootFamily::build(cfg);
  const auto params = params_for(2, cfg, 11);
  const LbitState s = build_lbit(LbitConfig::make(2, params), family);
  const auto base = CoSequence::all_plus("a", cfg.length());
  const auto f = [&](unsigned i) { return pow(family, params[i - 1].J, params[i - 1].alpha); };
  CHECK(s.rows[0] == apply(f(1), apply(f(3), base)));
}

TEST_CASE("zeroing the added parameters recovers the smaller lbit") {
  const AmbientConfig cfg(2);
  const RootFamily family = RootFamily::build(cfg);
  const auto lattice = Q2Exponent::lattice(cfg);
  for (unsigned n = 2; n <= 3; ++n) {
    for (std::size_t a = 0; a < lattice.size(); ++a) {
      for (std::size_t b = 0; b < lattice.size(); ++b) {
        for (std::size_t c = 0; c < lattice.size(); ++c) {
          const std::vector<Q2Exponent> alphas{lattice[a], lattice[b], lattice[c]};
          std::vector<LbitParam> small;
          for (unsigned i = 0; i < (1U << (n - 1)) - 1; ++i) {
            small.push_back({CircleCoord(1 + (i % cfg.circle_size()), cfg), alphas[i]});
          }
          std::vector<LbitParam> big = small;
          while (big.size() < (1U << n) - 1) big.push_back({CircleCoord(2, cfg), Q2Exponent::zero()});
          const LbitState s = build_lbit(LbitConfig::make(n - 1, small), family);
          const LbitState t = build_lbit(LbitConfig::make(n, big), family);
          for (unsigned r = 0; r + 1 < n; ++r) REQUIRE(s.rows[r] == t.rows[r]);
        }
      }
    }
  }
}

TEST_CASE("a zero third exponent decouples the pair") {
  const AmbientConfig cfg(3);
  const RootFamily family = RootFamily::build(cfg);
  const CircleCoord J(2, cfg);
  const auto a1 = Q2Exponent::from_rational(Rational(1, 2), cfg);
  const auto a2 = Q2Exponent::from_rational(Rational(5, 4), cfg);
  const LbitState s = entangle_pair(a1, a2, Q2Exponent::zero(), J, J, family);
  CHECK(s.rows[0] == apply(pow(family, J, a1), CoSequence::all_plus("a", cfg.length())));
  CHECK(s.rows[1] == apply(pow(family, J, a2), CoSequence::all_plus("b", cfg.length())));
}

TEST_CASE("entangled pair agreement examples") {
  const AmbientConfig cfg(3);
  const RootFamily family = RootFamily::build(cfg);
  const CircleCoord J(1, cfg);
  const auto q = [&](long p, long d) { return Q2Exponent::from_rational(Rational(p, d), cfg); };
  const auto corr = [&](const Q2Exponent& a1, const Q2Exponent& a2) {
    const LbitState s = entangle_pair(a1, a2, Q2Exponent::zero(), J, J, family);
    return agreement(s.rows[0], s.rows[1]);
  };
  CHECK(corr(q(3, 8), q(3, 8)).correlation == Rational(1));
  CHECK(corr(q(0, 1), q(1, 1)).correlation == Rational(0));
  CHECK(corr(q(0, 1), q(1, 4)).agreement == Rational(7, 8));
  CHECK(corr(q(0, 1), q(1, 4)).correlation == Rational(3, 4));
  CHECK(predicted_agreement(q(0, 1), q(1, 4)) == Rational(7, 8));
}

TEST_CASE("exact agreement law for every lattice pair at n_tot=2") {
  const AmbientConfig cfg(2);
  const RootFamily family = RootFamily::build(cfg);
  const auto lattice = Q2Exponent::lattice(cfg);
  for (unsigned Jv = 1; Jv <= cfg.circle_size(); ++Jv) {
    const CircleCoord J(Jv, cfg);
    for (const auto& a1 : lattice) {
      for (const auto& a2 : lattice) {
        const LbitState s = entangle_pair(a1, a2, Q2Exponent::zero(), J, J, family);
        REQUIRE(agreement(s.rows[0], s.rows[1]).agreement == predicted_agreement(a1, a2));
      }
    }
  }
}

TEST_CASE("marginal frequencies ignore the partner") {
  const AmbientConfig cfg(2);
  const RootFamily family = RootFamily::build(cfg);
  const auto lattice = Q2Exponent::lattice(cfg);
  const CircleCoord J(1, cfg);
  for (const auto& a1 : lattice) {
    for (const auto& a2 : lattice) {
      const LbitState s = entangle_pair(a1, a2, Q2Exponent::zero(), J, J, family);
      REQUIRE(frequency(s.rows[0]).frequency == (Rational(1) - a1.value() / Rational(2)).abs());
    }
  }
}

TEST_CASE("three-row configuration collapses to beta powers") {
  const AmbientConfig cfg(3);
  const RootFamily family = RootFamily::build(cfg);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pickk(0, cfg.lattice_size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Q2Exponent> alphas;
    for (int i = 0; i < 7; ++i) alphas.push_back(Q2Exponent::from_lattice(pickk(rng), cfg.max_resolution(), cfg));
    const CircleCoord J1(1 + trial % cfg.circle_size(), cfg);
    const CircleCoord J7(1 + (3 * trial) % cfg.circle_size(), cfg);
    const LbitState s = ghz_triple(alphas, J1, J7, family);
    const auto betas = ghz_betas(alphas);
    for (unsigned i = 0; i < 3; ++i) {
      const SignedPermOp collapsed = compose(pow(family, J1, betas[i]), pow(family, J7, alphas[6]));
      REQUIRE(s.rows[i] == apply(collapsed, CoSequence::all_plus(lbit_label(i), cfg.length())));
    }
  }
  std::vector<Q2Exponent> zeros(7);
  const LbitState z = ghz_triple(zeros, CircleCoord(1, cfg), CircleCoord(1, cfg), family);
  for (const auto& row : z.rows) CHECK(frequency(row).frequency == Rational(1));
  CHECK(agreement(z.rows[0], z.rows[2]).correlation == Rational(1));
}

TEST_CASE("view matches the materialized state") {
  const AmbientConfig cfg(3);
  const RootFamily family = RootFamily::build(cfg);
  for (unsigned n = 1; n <= 4; ++n) {
    const LbitConfig c = LbitConfig::make(n, params_for(n, cfg, 20 + n));
    const LbitState s = build_lbit(c, family);
    const LbitView v = view_lbit(c, family);
    for (unsigned r = 0; r < n; ++r) {
      for (std::uint64_t i = 0; i < cfg.length(); ++i) REQUIRE(v.rows[r].sign_at(i) == s.rows[r][i]);
    }
  }
}

TEST_CASE("agreement law with a nonzero third exponent") {
  const AmbientConfig cfg(2);
  const RootFamily family = RootFamily::build(cfg);
  const auto lattice = Q2Exponent::lattice(cfg);
  // Shared J for all three factors: the law holds for every α3.
  for (unsigned Jv = 1; Jv <= cfg.circle_size(); ++Jv) {
    const CircleCoord J(Jv, cfg);
    for (const auto& a1 : lattice) {
      for (const auto& a2 : lattice) {
        for (const auto& a3 : lattice) {
          const LbitState s = entangle_pair(a1, a2, a3, J, J, family);
          REQUIRE(agreement(s.rows[0], s.rows[1]).agreement == predicted_agreement(a1, a2));
        }
      }
    }
  }
  // A different J3 breaks it: 3/4 instead of 7/8.
  const auto q = [&](long p, long d) { return Q2Exponent::from_rational(Rational(p, d), cfg); };
  const LbitState w = entangle_pair(q(0, 1), q(1, 4), q(1, 4), CircleCoord(1, cfg), CircleCoord(2, cfg), family);
  CHECK(predicted_agreement(q(0, 1), q(1, 4)) == Rational(7, 8));
  CHECK(agreement(w.rows[0], w.rows[1]).agreement == Rational(3, 4));
}
