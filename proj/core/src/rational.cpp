#include "dforge/rational.hpp"

#include <cctype>
#include <string>

#include "dforge/error.hpp"

namespace dforge {
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
  if (!all_digits(s)) {
    throw Error(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::domain, "division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), mpz_class(1));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::pow2(long exponent) { return pow(2, exponent); }

Rational Rational::pow(long base, long exponent) {
  if (base == 0 && exponent < 0) throw Error(ErrorCode::domain, "division by zero");
  mpz_class p;
  mpz_class b(base);
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx(int significant) const {
  if (is_zero()) return "0";
  if (significant < 1) significant = 1;
  const bool negative = sign() < 0;
  const mpq_class x = ::abs(value_);

  // Find e with 10^e <= x < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  auto power = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                  : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (x < power(e)) --e;
  while (x >= power(e + 1)) ++e;

  // Scale to an integer mantissa with `significant` digits, rounding half up.
  mpq_class scaled = x * power(significant - 1 - e);
  mpz_class mantissa;
  mpz_class twice = 2 * scaled.get_num() + scaled.get_den();
  mpz_class twice_den = 2 * scaled.get_den();
  mpz_fdiv_q(mantissa.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  if (mantissa == pow10(static_cast<unsigned long>(significant))) {
    mantissa /= 10;
    ++e;
  }
  std::string digits = mantissa.get_str();

  std::string out;
  if (e >= -5 && e < significant) {
    if (e >= 0) {
      std::string int_part = digits.substr(0, static_cast<std::size_t>(e + 1));
      std::string frac = digits.substr(static_cast<std::size_t>(e + 1));
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = frac.empty() ? int_part : int_part + "." + frac;
    } else {
      std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = digits.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" +
          (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  }
  return negative ? "-" + out : out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::domain, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace dforge

std::size_t std::hash<dforge::Rational>::operator()(const dforge::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() + 1);
}
