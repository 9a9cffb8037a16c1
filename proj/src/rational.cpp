#include "invset/rational.hpp"

#include <cctype>
#include <string>

#include "invset/errors.hpp"

namespace invset {

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class digits(std::string(int_part) + std::string(frac_part) + (int_part.empty() && frac_part.empty() ? "0" : ""), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational r(digits, scale);
    return negative ? -r : r;
  }

  return Rational(parse_integer(text, text), mpz_class(1));
}

Rational Rational::pow2_inverse(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), den);
}

std::optional<unsigned> Rational::dyadic_exponent() const {
  const mpz_class& d = v_.get_den();
  // d > 0 always; a power of two has a single set bit.
  if (mpz_popcount(d.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
}

bool is_perfect_square(const mpz_class& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& p = v_.get_num();
  const mpz_class& q = v_.get_den();
  // Lowest terms, so p/q is a rational square iff p and q are both squares.
  if (!is_perfect_square(p) || !is_perfect_square(q)) return std::nullopt;
  mpz_class rp, rq;
  mpz_sqrt(rp.get_mpz_t(), p.get_mpz_t());
  mpz_sqrt(rq.get_mpz_t(), q.get_mpz_t());
  return Rational(rp, rq);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::mod(long m) const {
  if (m <= 0) throw InvalidArgument("modulus must be positive");
  const mpz_class scaled = v_.get_num();
  const mpz_class modulus = v_.get_den() * m;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), scaled.get_mpz_t(), modulus.get_mpz_t());
  return Rational(r, v_.get_den());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  // Round half away from zero at the requested precision.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = ::abs(v_.get_num()) * scale * 2 + v_.get_den();
  const mpz_class den = v_.get_den() * 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string s = q.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  const bool negative = sign() < 0 && q != 0;
  return negative ? "-" + out : out;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace invset
