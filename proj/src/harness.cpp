#include "invset/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "invset/celestial.hpp"
#include "invset/cosequence.hpp"
#include "invset/errors.hpp"
#include "invset/lbit.hpp"
#include "invset/sign_algebra.hpp"

namespace invset {

namespace {

Rational law_frequency(const Q2Exponent& alpha) { return (Rational(1) - alpha.value() / Rational(2)).abs(); }

/// "Ē_J^α|a) ∼ cos(θ/2)|a⟩ + e^{iφ} sin(θ/2)|¬a⟩" with the chart values.
std::string correspondence(unsigned J, const Q2Exponent& alpha, const AmbientConfig& config) {
  const Direction d = direction_from_lbit(alpha, CircleCoord(J, config), config);
  return "E_" + std::to_string(J) + "^(" + alpha.value().str() + ")|a) ∼ cos(θ/2)|a⟩ + e^{iφ} sin(θ/2)|¬a⟩ with cos²(θ/2)=" +
         law_frequency(alpha).str() + ", cosθ=" + d.cos_theta.str() + ", φ=" + d.phi.str();
}

std::string exact_form(const Definability& d, std::optional<RationalAngle> P = std::nullopt) {
  std::string s = d.rational_part.str();
  if (d.surd_part.is_zero()) return s;
  std::string surd = d.surd_part.str();
  const bool irrational_cosP = P && d.reason == UndefinedReason::IrrationalSurd && !niven_classify(*P).is_rational() &&
                               P->folded().n() != 4 && P->folded().n() != 6;
  if (irrational_cosP) surd += "*cos(" + P->str() + ")";
  if (surd.front() == '-') return s + " - " + surd.substr(1);
  return s + " + " + surd;
}

Record definability_record(Record r, const Definability& d, const AmbientConfig& config,
                           std::optional<RationalAngle> P = std::nullopt) {
  r["verdict"] = d.defined() ? "Defined" : "Undefined";
  r["reason"] = d.reason ? to_string(*d.reason) : "";
  r["value"] = d.defined() ? exact_field(*d.value) : Record(nullptr);
  r["exact_form"] = exact_form(d, P);
  if (d.reason == UndefinedReason::RationalButOffLattice) {
    const Rational v = d.rational_part + *d.surd_part.rational_value();
    const auto excess = lattice_excess_bits(v, config);
    r["excess_bits"] = excess ? std::to_string(*excess) : "non-dyadic";
  }
  return r;
}

/// Accumulates one invariant check.
struct Check {
  Check(std::string n, std::string s) : name(std::move(n)), scope(std::move(s)) {}

  std::string name;
  std::string scope;
  std::uint64_t cases = 0;
  std::optional<std::string> witness;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && !witness) witness = describe();
  }
};

void add_check(Report& rep, const Check& c) {
  Record& r = rep.add("check");
  r["check"] = c.name;
  r["scope"] = c.scope;
  r["cases"] = c.cases;
  r["passed"] = !c.witness.has_value();
  r["witness"] = c.witness.value_or("");
  if (c.witness) rep.ok = false;
}

std::string case_str(unsigned J, const Q2Exponent& a) {
  return "J=" + std::to_string(J) + " α=" + a.value().str();
}

/// Exponents checked for a configuration: the whole lattice when small,
/// otherwise 2^-r for every resolution plus random lattice points.
std::vector<Q2Exponent> verify_exponents(const AmbientConfig& cfg, std::uint64_t seed, std::uint64_t extra,
                                         std::string& scope) {
  if (cfg.n_tot() <= 3) {
    scope = "exhaustive";
    return Q2Exponent::lattice(cfg);
  }
  std::vector<Q2Exponent> out;
  for (unsigned r = 0; r <= cfg.max_resolution(); ++r) out.push_back(Q2Exponent::from_lattice(1, r, cfg));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, cfg.lattice_size() - 1);
  for (std::uint64_t i = 0; i < extra; ++i) out.push_back(Q2Exponent::from_lattice(pick(rng), cfg.max_resolution(), cfg));
  scope = "2^-r ladder + " + std::to_string(extra) + " sampled";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// verify

Report run_verify(const RunOptions& opts, const VerifyOptions& verify) {
  const AmbientConfig& cfg = opts.config;
  Report rep("verify", cfg, opts.seed, opts.samples);

  RootFamily family = RootFamily::build(cfg);
  if (verify.mutate_member) {
    std::vector<SignedPermOp> members;
    for (unsigned j = 1; j <= family.size(); ++j) members.push_back(family.member(j));
    const unsigned m = *verify.mutate_member;
    if (m < 1 || m > members.size()) throw InvalidArgument("mutated member index out of range");
    const SignedPermOp& victim = members[m - 1];
    std::vector<SignedPermOp::Index> t(victim.targets().begin(), victim.targets().end());
    std::vector<std::int8_t> s(victim.signs().begin(), victim.signs().end());
    s[0] = static_cast<std::int8_t>(-s[0]);
    members[m - 1] = SignedPermOp(std::move(t), std::move(s));
    family = RootFamily::from_members(cfg, std::move(members));
    Record& r = rep.add("mutation");
    r["member"] = m;
    r["row"] = 0;
  }

  // Family relations at dimension N.
  Check quat{"quaternion_triples", "exhaustive"};
  for (unsigned j = 1; j <= cfg.M(); ++j) {
    const QuaternionCheck q = quaternion_triple_check(family, j);
    quat.expect(q.ok, [&] {
      std::string w = q.failed_relation + " members";
      for (unsigned m : q.witness_members) w += " " + std::to_string(m);
      if (q.witness_row) w += " row " + std::to_string(*q.witness_row);
      return w;
    });
  }
  add_check(rep, quat);

  Check circle{"circle_advance", "exhaustive"};
  const SignedPermOp& top = family.member(cfg.N() - 1);
  for (unsigned J = 1; J <= cfg.circle_size(); ++J) {
    const CircleCoord c(J, cfg);
    circle.expect(compose(top, family.cycle_coordinate(c)) == family.cycle_coordinate(c.advanced(cfg)),
                  [&] { return "E[N-1]∘E_J != E_(J+M) at J=" + std::to_string(J); });
  }
  add_check(rep, circle);

  Check members_unitary{"member_unitary", "exhaustive"};
  for (unsigned j = 1; j <= family.size(); ++j) {
    members_unitary.expect(is_unitary(family.member(j)), [&] { return "E[" + std::to_string(j) + "]"; });
  }
  add_check(rep, members_unitary);

  std::string scope;
  const auto exponents = verify_exponents(cfg, opts.seed, std::min<std::uint64_t>(opts.samples, 64), scope);

  if (cfg.materializable()) {
    Check unitary{"power_unitary", scope};
    Check law{"frequency_law", scope};
    Check herm{"hermitian_iff_integer", scope};
    Check view{"powerview_matches_pow", scope};
    const CoSequence base = CoSequence::all_plus("a", cfg.length());
    for (unsigned J = 1; J <= cfg.circle_size(); ++J) {
      const CircleCoord c(J, cfg);
      for (const auto& a : exponents) {
        const SignedPermOp p = pow(family, c, a);
        unitary.expect(is_unitary(p), [&] { return case_str(J, a); });
        law.expect(frequency(apply(p, base)).frequency == law_frequency(a), [&] { return case_str(J, a); });
        herm.expect(is_hermitian(p) == a.is_integer(), [&] { return case_str(J, a); });
        const PowerView pv(family, c, a);
        bool same = true;
        for (std::uint64_t r = 0; r < p.dim() && same; ++r) same = pv.entry(r) == p.entry(static_cast<std::size_t>(r));
        view.expect(same, [&] { return case_str(J, a); });
      }
    }
    add_check(rep, unitary);
    add_check(rep, law);
    add_check(rep, herm);
    add_check(rep, view);

    // Additivity: all pairs for small lattices, a sampled subset otherwise.
    Check add{"exponent_additivity", ""};
    const bool all_pairs = cfg.n_tot() <= 3;
    add.scope = all_pairs ? "exhaustive" : "sampled";
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_int_distribution<std::uint64_t> pickk(0, cfg.lattice_size() - 1);
    std::uniform_int_distribution<unsigned> pickJ(1, cfg.circle_size());
    if (all_pairs) {
      const auto lattice = Q2Exponent::lattice(cfg);
      for (unsigned J = 1; J <= cfg.circle_size(); ++J) {
        const CircleCoord c(J, cfg);
        std::vector<SignedPermOp> ops;
        ops.reserve(lattice.size());
        for (const auto& a : lattice) ops.push_back(pow(family, c, a));
        for (std::size_t i = 0; i < lattice.size(); ++i) {
          for (std::size_t k = 0; k < lattice.size(); ++k) {
            // (i + k) mod lattice size indexes α + β mod 4.
            add.expect(compose(ops[i], ops[k]) == ops[(i + k) % lattice.size()], [&] {
              return case_str(J, lattice[i]) + " β=" + lattice[k].value().str();
            });
          }
        }
      }
    } else {
      const std::uint64_t trials = std::min<std::uint64_t>(opts.samples, 200);
      for (std::uint64_t t = 0; t < trials; ++t) {
        const unsigned J = pickJ(rng);
        const auto a = Q2Exponent::from_lattice(pickk(rng), cfg.max_resolution(), cfg);
        const auto b = Q2Exponent::from_lattice(pickk(rng), cfg.max_resolution(), cfg);
        const CircleCoord c(J, cfg);
        add.expect(compose(pow(family, c, a), pow(family, c, b)) == pow(family, c, a + b),
                   [&] { return case_str(J, a) + " β=" + b.value().str(); });
      }
    }
    add_check(rep, add);
  } else {
    // Entry-on-demand: frequencies by sampling, additivity on sampled rows.
    Check law{"frequency_law_sampled", scope + ", 3σ"};
    Check add{"exponent_additivity_rows", "sampled rows"};
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_int_distribution<std::uint64_t> pickrow(0, cfg.length() - 1);
    std::uniform_int_distribution<std::uint64_t> pickk(0, cfg.lattice_size() - 1);
    const std::uint64_t n = std::min<std::uint64_t>(opts.samples, 20000);
    for (unsigned J = 1; J <= cfg.circle_size(); J += cfg.M()) {
      const CircleCoord c(J, cfg);
      for (const auto& a : exponents) {
        const PowerView pv(family, c, a);
        const IndexedCoSequence s{"a", cfg.length(), [&pv](std::uint64_t i) { return pv.entry(i).sign; }};
        const EmpiricalEstimate e = sample_frequency(s, n, opts.seed, opts.workers);
        const double p = law_frequency(a).to_double();
        law.expect(e.within(p, 3.0), [&] { return case_str(J, a) + " estimate " + decimal12(e.estimate()); });

        const auto b = Q2Exponent::from_lattice(pickk(rng), cfg.max_resolution(), cfg);
        const std::vector<PowerView> chain{PowerView(family, c, a), PowerView(family, c, b)};
        const PowerView sum(family, c, a + b);
        for (int k = 0; k < 16; ++k) {
          const std::uint64_t row = pickrow(rng);
          add.expect(compose_entries(chain, row) == sum.entry(row),
                     [&] { return case_str(J, a) + " β=" + b.value().str() + " row " + std::to_string(row); });
        }
      }
    }
    add_check(rep, law);
    add_check(rep, add);
  }

  Record& lat = rep.add("lattice");
  lat["exponents_per_period"] = cfg.lattice_size();
  lat["resolution"] = "2^-" + std::to_string(cfg.max_resolution());
  lat["distinct_cosines"] = (std::uint64_t{2} << cfg.max_resolution()) + 1;
  lat["circle_coordinates"] = cfg.circle_size();
  lat["note"] = "exponents k/2^R mod 4 with R <= N - n_tot; the count is constructive, not a closed-form claim";
  const auto diag = product_lattice_diagnostic(cfg, std::min<std::uint64_t>(opts.samples, 10000), opts.seed);
  Record& d = rep.add("product_diagnostic");
  d["pairs"] = diag.samples;
  d["product_on_lattice"] = diag.on_lattice;
  d["rate"] = decimal12(diag.samples ? static_cast<double>(diag.on_lattice) / static_cast<double>(diag.samples) : 0.0);
  d["expected_rate"] = decimal12(diag.expected_rate);
  d["mean_excess_bits"] = decimal12(diag.mean_excess_bits);
  return rep;
}

// ---------------------------------------------------------------------------
// pow

Report run_pow(const RunOptions& opts, unsigned J, const Rational& alpha_in) {
  const AmbientConfig& cfg = opts.config;
  const CircleCoord c(J, cfg);
  const Q2Exponent alpha = Q2Exponent::from_rational(alpha_in, cfg);
  Report rep("pow", cfg, opts.seed, opts.samples);
  const RootFamily family = RootFamily::build(cfg);
  const Rational predicted = law_frequency(alpha);

  Record& op = rep.add("operator");
  op["J"] = J;
  op["alpha"] = exact_field(alpha.value());
  op["dim"] = cfg.length();
  op["block_dim"] = std::uint64_t{cfg.N()} << alpha.resolution();

  Record& f = rep.add("frequency");
  f["predicted"] = exact_field(predicted);
  if (cfg.materializable()) {
    const SignedPermOp p = pow(family, c, alpha);
    const FrequencyReport fr = frequency(apply(p, CoSequence::all_plus("a", cfg.length())));
    f["counted"] = exact_field(fr.frequency);
    f["match"] = fr.frequency == predicted;
    if (fr.frequency != predicted) rep.ok = false;
    f["unitary"] = is_unitary(p);
    f["hermitian"] = is_hermitian(p);
  }
  const PowerView pv(family, c, alpha);
  const IndexedCoSequence s{"a", cfg.length(), [&pv](std::uint64_t i) { return pv.entry(i).sign; }};
  const EmpiricalEstimate e = sample_frequency(s, opts.samples, opts.seed, opts.workers);
  f["sampled"] = empirical_field(e, predicted.to_double());
  f["within_3sigma"] = e.within(predicted.to_double(), 3.0);

  const Direction d = direction_from_lbit(alpha, c, cfg);
  Record& dir = rep.add("direction");
  dir["cos_theta"] = exact_field(d.cos_theta);
  dir["branch"] = d.branch == Hemisphere::Upper ? "upper" : "lower";
  dir["phi"] = d.phi.str();
  dir["correspondence"] = correspondence(J, alpha, cfg);
  return rep;
}

// ---------------------------------------------------------------------------
// sequential Stern-Gerlach toy

Orientation parse_orientation(const std::string& token) {
  if (token == "+x" || token == "x") return Orientation::PlusX;
  if (token == "-x") return Orientation::MinusX;
  if (token == "+z" || token == "z") return Orientation::PlusZ;
  if (token == "-z") return Orientation::MinusZ;
  throw InvalidArgument("orientation '" + token + "' is not one of +x, -x, +z, -z");
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::PlusX:
      return "+x";
    case Orientation::MinusX:
      return "-x";
    case Orientation::PlusZ:
      return "+z";
    case Orientation::MinusZ:
      return "-z";
  }
  return "?";
}

namespace {

bool is_x(Orientation o) { return o == Orientation::PlusX || o == Orientation::MinusX; }
bool is_plus(Orientation o) { return o == Orientation::PlusX || o == Orientation::PlusZ; }

}  // namespace

unsigned sg_grouping(std::optional<Orientation> previous, Orientation current) {
  if (!previous || is_x(*previous) != is_x(current)) return is_plus(current) ? 1 : 3;
  return *previous == current ? 2 : 4;
}

CoSequence sg_grouping_labels(unsigned g, const std::string& label) {
  if (g < 1 || g > 4) throw InvalidArgument("grouping index must be in 1..4");
  const SignedPermOp i4 = bar_replicate(SignedPermOp::imaginary_unit(), 4);
  return apply(power(i4, g), CoSequence::all_plus(label, 4));
}

Rational binomial_probability(unsigned m, unsigned j, const Rational& p) {
  if (j > m) return Rational(0);
  mpz_class choose;
  mpz_bin_uiui(choose.get_mpz_t(), m, j);
  Rational out(choose, mpz_class(1));
  const Rational q = Rational(1) - p;
  for (unsigned k = 0; k < j; ++k) out = out * p;
  for (unsigned k = j; k < m; ++k) out = out * q;
  return out;
}

std::string radix_shift(const std::vector<std::string>& symbols, unsigned shifts) {
  std::string out = ".";
  for (std::size_t k = shifts; k < symbols.size(); ++k) out += symbols[k];
  return out;
}

Report run_sg_chain(const RunOptions& opts, const std::vector<Orientation>& devices) {
  if (devices.empty() || devices.size() > 3) throw InvalidArgument("an SG chain has 1 to 3 devices");
  Report rep("sg-chain", opts.config, opts.seed, opts.samples);
  const auto L = static_cast<unsigned>(devices.size());
  static const char* kLabels[] = {"a", "b", "c"};

  std::vector<CoSequence> groupings;
  std::vector<Rational> plus_prob;
  for (unsigned k = 0; k < L; ++k) {
    const std::optional<Orientation> prev = k ? std::optional<Orientation>(devices[k - 1]) : std::nullopt;
    const unsigned g = sg_grouping(prev, devices[k]);
    groupings.push_back(sg_grouping_labels(g, kLabels[k]));
    plus_prob.push_back(frequency(groupings.back()).frequency);
    Record& r = rep.add("device");
    r["device"] = k + 1;
    r["orientation"] = to_string(devices[k]);
    r["grouping"] = g;
    r["labels"] = groupings.back().render();
    r["p_plus"] = exact_field(plus_prob.back());
  }

  // Grouping table for each downstream device across all four orientations.
  for (unsigned k = 1; k < L; ++k) {
    for (Orientation o : {Orientation::PlusX, Orientation::PlusZ, Orientation::MinusX, Orientation::MinusZ}) {
      const unsigned g = sg_grouping(devices[k - 1], o);
      Record& r = rep.add("grouping_table");
      r["device"] = k + 1;
      r["orientation"] = to_string(o);
      r["grouping"] = g;
      r["p_plus"] = exact_field(frequency(sg_grouping_labels(g, kLabels[k])).frequency);
    }
  }

  // Detectors: device k < L absorbs its "+" outcome; the last device
  // registers both outcomes.
  struct Outcome {
    std::string detector;
    std::vector<std::string> symbols;
    Rational probability;
  };
  std::vector<Outcome> outcomes;
  Rational reach(1);
  std::vector<std::string> prefix;
  for (unsigned k = 0; k < L; ++k) {
    const std::string lab = kLabels[k];
    const bool last = k + 1 == L;
    const std::string plus_sym = lab;
    const std::string minus_sym = last && L == 3 ? "d" : "¬" + lab;
    {
      std::vector<std::string> sym = prefix;
      while (sym.size() < L) sym.push_back(plus_sym);
      outcomes.push_back({std::string(1, static_cast<char>('A' + k)), sym, reach * plus_prob[k]});
    }
    if (last) {
      std::vector<std::string> sym = prefix;
      sym.push_back(minus_sym);
      outcomes.push_back({std::string(1, static_cast<char>('A' + k + 1)), sym,
                          reach * (Rational(1) - plus_prob[k])});
    }
    prefix.push_back("¬" + lab);
    reach = reach * (Rational(1) - plus_prob[k]);
  }

  // Monte-Carlo trajectories: each device draws one element of its grouping.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<unsigned> pick(0, 3);
  std::vector<std::uint64_t> hits(outcomes.size(), 0);
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    for (unsigned k = 0; k < L; ++k) {
      const bool plus = groupings[k][pick(rng)] > 0;
      if (plus) {
        ++hits[k];
        break;
      }
      if (k + 1 == L) ++hits[k + 1];
    }
  }
  for (std::size_t o = 0; o < outcomes.size(); ++o) {
    Record& r = rep.add("trajectory");
    r["detector"] = outcomes[o].detector;
    r["symbols"] = radix_shift(outcomes[o].symbols, 0);
    for (unsigned s = 1; s < L; ++s) r["t" + std::to_string(s)] = radix_shift(outcomes[o].symbols, s);
    r["probability"] = exact_field(outcomes[o].probability);
    const EmpiricalEstimate e{opts.samples, hits[o]};
    r["sampled"] = empirical_field(e, outcomes[o].probability.to_double());
    r["within_3sigma"] = e.within(outcomes[o].probability.to_double(), 3.0);
  }

  // Exactly one "+" among the draws that reach device k: four trajectories
  // at the first device, one fewer at each later one.
  for (unsigned k = 0; k < L; ++k) {
    const unsigned m = L + 1 - k;
    const Rational exact = binomial_probability(m, 1, plus_prob[k]);
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      unsigned plus = 0;
      for (unsigned d = 0; d < m; ++d) plus += groupings[k][pick(rng)] > 0 ? 1 : 0;
      count += plus == 1 ? 1 : 0;
    }
    Record& r = rep.add("multinomial");
    r["device"] = k + 1;
    r["draws"] = m;
    r["event"] = "one " + std::string(kLabels[k]) + ", " + std::to_string(m - 1) + " ¬" + kLabels[k];
    r["closed_form"] = exact_field(exact);
    const EmpiricalEstimate e{opts.samples, count};
    r["sampled"] = empirical_field(e, exact.to_double());
    r["within_3sigma"] = e.within(exact.to_double(), 3.0);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bell

BellAssessment assess_bell(const Rational& c, const Rational& cp, const AmbientConfig& config) {
  BellAssessment b{sum_cosine_defined(c, cp, AngleBranch::Difference, config), std::nullopt};
  if (b.third.defined()) b.bell_value = (c - cp).abs() - *b.third.value;
  return b;
}

namespace {

void require_cosine(const Rational& c, const std::string& name, const AmbientConfig& cfg) {
  if (c.abs() > Rational(1)) throw InvalidArgument(name + " = " + c.str() + " has magnitude above 1");
  if (!q2_member(c, cfg)) {
    throw OffLattice(name + " = " + c.str() + " is not on the dyadic lattice at n_tot=" + std::to_string(cfg.n_tot()) +
                     " (resolution 2^-" + std::to_string(cfg.max_resolution()) + ")");
  }
}

struct PairStats {
  std::optional<Rational> predicted;  // correlation, when the pair law applies
  std::optional<Rational> counted;   // correlation by exact count
  EmpiricalEstimate sampled;         // agreement draws
};

PairStats pair_stats(const Q2Exponent& a1, const Q2Exponent& a2, const Q2Exponent& a3, CircleCoord J1,
                     CircleCoord J3, const RootFamily& family, const RunOptions& opts) {
  const AmbientConfig& cfg = family.config();
  PairStats s;
  // The agreement law holds when the shared factor is trivial or commutes
  // with the row factors (J3 = J1); other J3 have no closed form.
  if (a3.value().is_zero() || J3 == J1) s.predicted = Rational(2) * predicted_agreement(a1, a2) - Rational(1);
  if (cfg.materializable()) {
    const LbitState st = entangle_pair(a1, a2, a3, J1, J3, family);
    s.counted = agreement(st.rows[0], st.rows[1]).correlation;
    s.sampled = sample_agreement(IndexedCoSequence::view(st.rows[0]), IndexedCoSequence::view(st.rows[1]),
                                 opts.samples, opts.seed, opts.workers);
  } else {
    const LbitView v = view_lbit(entangled_pair_config(a1, a2, a3, J1, J3), family);
    s.sampled = sample_agreement(v.rows[0], v.rows[1], opts.samples, opts.seed, opts.workers);
  }
  return s;
}

void put_pair_stats(Record& r, const PairStats& s, Report& rep) {
  const std::optional<Rational> reference = s.predicted ? s.predicted : s.counted;
  const double agree = reference ? (reference->to_double() + 1.0) / 2.0 : s.sampled.estimate();
  r["C_predicted"] = s.predicted ? exact_field(*s.predicted) : Record(nullptr);
  r["C_counted"] = s.counted ? exact_field(*s.counted) : Record(nullptr);
  r["agreement_sampled"] = empirical_field(s.sampled, agree);
  r["C_sampled"] = decimal12(2.0 * s.sampled.estimate() - 1.0);
  r["within_3sigma"] = s.sampled.within(agree, 3.0);
  if (s.counted && s.predicted && *s.counted != *s.predicted) rep.ok = false;
}

}  // namespace

Report run_bell(const RunOptions& opts, const Rational& c, const Rational& cp) {
  const AmbientConfig& cfg = opts.config;
  require_cosine(c, "cos_theta", cfg);
  require_cosine(cp, "cos_theta_prime", cfg);
  Report rep("bell", cfg, opts.seed, opts.samples);
  const RootFamily family = RootFamily::build(cfg);
  const CircleCoord J(1, cfg);

  const std::pair<std::string, Rational> settings[] = {{"theta", c}, {"theta_prime", cp}};
  for (const auto& [name, cosv] : settings) {
    const Q2Exponent delta = Q2Exponent::from_rational(Rational(1) - cosv, cfg);
    const PairStats s = pair_stats(Q2Exponent::zero(), delta, Q2Exponent::zero(), J, J, family, opts);
    Record& r = rep.add("setting");
    r["setting"] = name;
    r["cos"] = exact_field(cosv);
    r["delta"] = exact_field(delta.value());
    put_pair_stats(r, s, rep);
  }

  const BellAssessment b = assess_bell(c, cp, cfg);
  Record third;
  third["record"] = "third_setting";
  third["setting"] = "theta - theta_prime";
  third["branch"] = to_string(AngleBranch::Difference);
  third = definability_record(std::move(third), b.third, cfg);
  third["quantum_reference_cos"] = b.third.defined() ? Record(nullptr) : approx_field(b.third.numeric);
  rep.records.push_back(std::move(third));

  Record& bell = rep.add("bell");
  bell["combination"] = "|C(θ)-C(θ')|-C(θ-θ')";
  if (b.evaluable()) {
    bell["status"] = "evaluated";
    bell["value"] = exact_field(*b.bell_value);
    bell["bound"] = 1;
    bell["satisfied"] = *b.bell_value <= Rational(1);
  } else {
    bell["status"] = "NOT EVALUABLE";
    bell["value"] = nullptr;
    bell["bound"] = 1;
    bell["satisfied"] = nullptr;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// GHZ

Report run_ghz(const RunOptions& opts, const std::vector<Rational>& alpha_in, unsigned J1v, unsigned J7v) {
  const AmbientConfig& cfg = opts.config;
  if (alpha_in.size() != 7) throw InvalidArgument("ghz takes seven exponents α1..α7");
  std::vector<Q2Exponent> alphas;
  for (const auto& a : alpha_in) alphas.push_back(Q2Exponent::from_rational(a, cfg));
  const CircleCoord J1(J1v, cfg);
  const CircleCoord J7(J7v, cfg);
  Report rep("ghz", cfg, opts.seed, opts.samples);
  const RootFamily family = RootFamily::build(cfg);
  const auto betas = ghz_betas(alphas);

  std::vector<IndexedCoSequence> rows;
  std::optional<LbitState> state;
  std::optional<LbitView> view;
  if (cfg.materializable()) {
    state = ghz_triple(alphas, J1, J7, family);
    for (const auto& r : state->rows) rows.push_back(IndexedCoSequence::view(r));
  } else {
    view = view_lbit(ghz_config(alphas, J1, J7), family);
    rows = view->rows;
  }

  // A row is pow(J1, β)∘pow(J7, α7); it is a single power, with a closed-form
  // frequency, only when α7 = 0 or J7 = J1.
  const bool single_power = alphas[6].value().is_zero() || J7 == J1;

  for (unsigned i = 0; i < 3; ++i) {
    Record& r = rep.add("row");
    r["label"] = lbit_label(i);
    r["beta"] = exact_field(betas[i].value());
    const Q2Exponent effective = betas[i] + alphas[6];
    std::optional<Rational> predicted;
    if (single_power) predicted = law_frequency(effective);
    r["frequency_predicted"] = predicted ? exact_field(*predicted) : Record(nullptr);
    if (state) {
      const Rational counted = frequency(state->rows[i]).frequency;
      r["frequency_counted"] = exact_field(counted);
      if (predicted && counted != *predicted) rep.ok = false;
      const SignedPermOp collapsed = compose(pow(family, J1, betas[i]), pow(family, J7, alphas[6]));
      const bool same = apply(collapsed, CoSequence::all_plus(lbit_label(i), cfg.length())) == state->rows[i];
      r["collapsed_form_equal"] = same;
      if (!same) rep.ok = false;
    } else {
      r["frequency_counted"] = nullptr;
      r["collapsed_form_equal"] = nullptr;
    }
    const EmpiricalEstimate e = sample_frequency(rows[i], opts.samples, opts.seed + i, opts.workers);
    if (predicted) {
      r["frequency_sampled"] = empirical_field(e, predicted->to_double());
      r["correspondence"] = correspondence(J1v, effective, cfg);
    } else {
      const double ref = state ? frequency(state->rows[i]).frequency.to_double() : e.estimate();
      r["frequency_sampled"] = empirical_field(e, ref);
      r["correspondence"] = "none: E_" + std::to_string(J7v) + "^α7 does not reduce to a power of E_" + std::to_string(J1v);
    }
  }

  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = i + 1; j < 3; ++j) {
      Record& r = rep.add("pair");
      r["pair"] = lbit_label(i) + lbit_label(j);
      const PairStats s = pair_stats(betas[i], betas[j], alphas[6], J1, J7, family, opts);
      put_pair_stats(r, s, rep);
      if (state) {
        const Rational ghz_corr = agreement(state->rows[i], state->rows[j]).correlation;
        r["C_ghz_counted"] = exact_field(ghz_corr);
        r["matches_entangle_pair"] = s.counted && *s.counted == ghz_corr;
        if (!(s.counted && *s.counted == ghz_corr)) rep.ok = false;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// precession

Report run_precession(const RunOptions& opts, const Rational& omega, std::optional<double> t_max) {
  const AmbientConfig& cfg = opts.config;
  if (omega.sign() <= 0) throw InvalidArgument("omega must be positive");
  Report rep("precession", cfg, opts.seed, opts.samples);
  const double w = omega.to_double();
  const double pi = std::numbers::pi;
  const double period = pi * pi / w;
  const double tmax = t_max.value_or(period);
  if (tmax < 0) throw InvalidArgument("t_max must be non-negative");
  const double periods = std::floor(tmax / period) + 1;
  if (periods * static_cast<double>(cfg.lattice_size()) > 1e6) {
    throw InvalidArgument("too many admissible times; lower t_max or n_tot");
  }

  const auto lattice = Q2Exponent::lattice(cfg);
  std::vector<double> times;
  std::uint64_t k = 0;
  for (std::uint64_t p = 0;; ++p) {
    bool any = false;
    for (const auto& a : lattice) {
      const Rational v = a.value();
      const double theta = v <= Rational(2) ? std::acos((Rational(1) - v).to_double())
                                            : 2 * pi - std::acos((v - Rational(3)).to_double());
      const double t = static_cast<double>(p) * period + pi * theta / (2 * w);
      if (t > tmax + 1e-12) break;
      any = true;
      const Direction d = direction_from_lbit(a, CircleCoord(cfg.circle_size(), cfg), cfg);
      Record& r = rep.add("time");
      r["k"] = k++;
      r["period"] = p;
      r["t"] = approx_field(t);
      r["alpha"] = exact_field(v);
      r["cos_theta"] = exact_field(d.cos_theta);
      r["frequency"] = exact_field(law_frequency(a));
      times.push_back(t);
    }
    if (!any) break;
  }

  double min_gap = 0.0;
  double max_gap = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double g = times[i] - times[i - 1];
    if (i == 1 || g < min_gap) min_gap = g;
    if (i == 1 || g > max_gap) max_gap = g;
  }
  const std::uint64_t cos2_values = (std::uint64_t{2} << cfg.max_resolution()) + 1;
  Record& s = rep.add("summary");
  s["omega"] = exact_field(omega);
  s["period"] = approx_field(period);
  s["admissible_per_period"] = cfg.lattice_size();
  s["cos2_lattice_values"] = cos2_values;
  s["interior_twice_plus_endpoints"] = 2 * (cos2_values - 2) + 2;
  s["min_gap"] = approx_field(min_gap);
  s["max_gap"] = approx_field(max_gap);
  s["uniform"] = max_gap - min_gap < 1e-9 * period;
  return rep;
}

// ---------------------------------------------------------------------------
// Niven and definability

Report run_niven(const RunOptions& opts, const std::vector<RationalAngle>& angles) {
  Report rep("niven", opts.config, opts.seed, opts.samples);
  for (const auto& theta : angles) {
    const CosineClass closed = niven_classify(theta);
    const CosineClass orbit = niven_classify_by_orbit(theta);
    Record& r = rep.add("angle");
    r["theta"] = theta.str();
    r["folded"] = theta.folded().str();
    r["cos_rational"] = closed.is_rational();
    r["value"] = closed.is_rational() ? exact_field(*closed.value) : Record(nullptr);
    r["approx"] = decimal12(std::cos(theta.radians()));
    const bool agree = closed.value == orbit.value;
    r["orbit_agrees"] = agree;
    if (!agree) rep.ok = false;
  }
  return rep;
}

Report run_defined(const RunOptions& opts, const Rational& c1, const Rational& c2, AngleBranch branch,
                   std::optional<RationalAngle> P) {
  const AmbientConfig& cfg = opts.config;
  require_cosine(c1, "c1", cfg);
  require_cosine(c2, "c2", cfg);
  Report rep("defined", cfg, opts.seed, opts.samples);
  for (const auto& [name, c] : {std::pair<std::string, Rational>{"c1", c1}, {"c2", c2}}) {
    const CosineClass s = rational_sine_partner(c);
    Record& r = rep.add("input");
    r["input"] = name;
    r["cos"] = exact_field(c);
    r["sine_rational"] = s.is_rational();
    r["sine"] = s.is_rational() ? exact_field(*s.value) : Record(nullptr);
  }
  Record v;
  v["record"] = "verdict";
  if (P) {
    v["rule"] = "spherical third side";
    v["P"] = P->str();
    v = definability_record(std::move(v), triangle_third_side(c1, c2, *P, cfg), cfg, P);
  } else {
    v["rule"] = "angle " + to_string(branch);
    v["P"] = "";
    v = definability_record(std::move(v), sum_cosine_defined(c1, c2, branch, cfg), cfg);
  }
  rep.records.push_back(std::move(v));
  return rep;
}

}  // namespace invset
