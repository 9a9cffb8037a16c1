// Command-line front end for the experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invset/errors.hpp"
#include "invset/harness.hpp"

namespace {

std::vector<invset::Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<invset::Rational> out;
  for (const auto& t : texts) out.push_back(invset::Rational::parse(t));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact co-sequence experiments on the dyadic invariant-set lattice"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned n_tot = 3;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
  std::string format = "table";
  std::string out_path;
  app.add_option("--n-tot", n_tot, "information content n_tot (2..5)")->capture_default_str();
  app.add_option("--seed", seed, "base seed for sampling")->capture_default_str();
  app.add_option("--samples", samples, "Monte-Carlo draws")->capture_default_str();
  app.add_option("--workers", workers, "sampling threads (results do not depend on this)")->capture_default_str();
  app.add_option("--format", format, "table | records | csv")->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the operator-algebra invariants");
  std::optional<unsigned> mutate;
  verify->add_option("--mutate-member", mutate, "flip one sign of this family member before checking");

  auto* pow = app.add_subcommand("pow", "fractional power of a family member and its frequency");
  unsigned pow_J = 1;
  std::string pow_alpha = "1";
  pow->add_option("--J", pow_J, "circle coordinate 1..4M")->capture_default_str();
  pow->add_option("--alpha", pow_alpha, "exponent, e.g. 1/4")->capture_default_str();

  auto* sg = app.add_subcommand("sg-chain", "sequential Stern-Gerlach toy model");
  std::vector<std::string> devices{"+z", "+x", "+z"};
  sg->add_option("--devices", devices, "comma-separated orientations from +x,-x,+z,-z (use --devices=...)")
      ->delimiter(',')
      ->capture_default_str();

  auto* bell = app.add_subcommand("bell", "Bell combination with definability of the third setting");
  std::string cos_a = "1/2";
  std::string cos_b = "1/4";
  bell->add_option("--cos", cos_a, "cos θ as an exact fraction")->capture_default_str();
  bell->add_option("--cos-prime", cos_b, "cos θ' as an exact fraction")->capture_default_str();

  auto* ghz = app.add_subcommand("ghz", "three-row entangled lbit");
  std::vector<std::string> alphas{"0", "0", "0", "0", "0", "0", "0"};
  unsigned ghz_J1 = 1;
  unsigned ghz_J7 = 1;
  ghz->add_option("--alphas", alphas, "seven comma-separated exponents α1..α7")->delimiter(',')->capture_default_str();
  ghz->add_option("--j1", ghz_J1, "shared circle coordinate of the first six factors")->capture_default_str();
  ghz->add_option("--j7", ghz_J7, "circle coordinate of the last factor")->capture_default_str();

  auto* prec = app.add_subcommand("precession", "admissible times of a precessing spin");
  std::string omega = "1";
  std::optional<double> t_max;
  prec->add_option("--omega", omega, "precession frequency as an exact fraction")->capture_default_str();
  prec->add_option("--t-max", t_max, "end of the time window (default one period)");

  auto* niven = app.add_subcommand("niven", "rationality of cos(π·m/n)");
  std::vector<std::string> angles;
  long max_n = 12;
  niven->add_option("--angle", angles, "m/n for θ = π·m/n (repeatable)");
  niven->add_option("--max-n", max_n, "enumerate reduced m/n in [0, 1] with n up to this bound")->capture_default_str();

  auto* defined = app.add_subcommand("defined", "lattice definability of a derived cosine");
  std::string c1 = "1/2";
  std::string c2 = "1/4";
  std::string branch = "difference";
  std::optional<std::string> P;
  defined->add_option("--c1", c1, "first cosine")->capture_default_str();
  defined->add_option("--c2", c2, "second cosine")->capture_default_str();
  defined->add_option("--branch", branch, "sum | difference")->capture_default_str();
  defined->add_option("--p", P, "included angle P = π·m/n for the spherical third side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const invset::Format fmt = invset::parse_format(format);
    invset::RunOptions opts{invset::AmbientConfig(n_tot), seed, samples, workers};
    if (samples == 0) throw invset::InvalidArgument("--samples must be at least 1");

    std::optional<invset::Report> report;
    if (verify->parsed()) {
      report = invset::run_verify(opts, {mutate});
    } else if (pow->parsed()) {
      report = invset::run_pow(opts, pow_J, invset::Rational::parse(pow_alpha));
    } else if (sg->parsed()) {
      std::vector<invset::Orientation> chain;
      for (const auto& d : devices) chain.push_back(invset::parse_orientation(d));
      report = invset::run_sg_chain(opts, chain);
    } else if (bell->parsed()) {
      report = invset::run_bell(opts, invset::Rational::parse(cos_a), invset::Rational::parse(cos_b));
    } else if (ghz->parsed()) {
      report = invset::run_ghz(opts, parse_rationals(alphas), ghz_J1, ghz_J7);
    } else if (prec->parsed()) {
      report = invset::run_precession(opts, invset::Rational::parse(omega), t_max);
    } else if (niven->parsed()) {
      std::vector<invset::RationalAngle> list;
      for (const auto& a : angles) list.push_back(invset::RationalAngle::parse(a));
      if (list.empty()) {
        if (max_n < 1) throw invset::InvalidArgument("--max-n must be at least 1");
        for (long n = 1; n <= max_n; ++n) {
          for (long m = 0; m <= n; ++m) {
            const invset::RationalAngle t(m, n);
            if (t.n() == n) list.push_back(t);
          }
        }
      }
      report = invset::run_niven(opts, list);
    } else if (defined->parsed()) {
      if (branch != "sum" && branch != "difference") throw invset::InvalidArgument("--branch must be sum or difference");
      std::optional<invset::RationalAngle> angle;
      if (P) angle = invset::RationalAngle::parse(*P);
      report = invset::run_defined(opts, invset::Rational::parse(c1), invset::Rational::parse(c2),
                                   branch == "sum" ? invset::AngleBranch::Sum : invset::AngleBranch::Difference, angle);
    }

    if (out_path.empty()) {
      invset::emit(*report, fmt, std::cout);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw invset::InvalidArgument("cannot open " + out_path + " for writing");
      invset::emit(*report, fmt, file);
    }
    return report->ok ? 0 : 1;
  } catch (const invset::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
