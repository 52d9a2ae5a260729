#include "dforge/surd.hpp"

#include <string>

#include "dforge/error.hpp"

namespace dforge {
namespace {

// Writes d = square * rest with rest square-free.
std::pair<unsigned long, unsigned long> split_square(unsigned long d) {
  unsigned long root = 1;
  for (unsigned long f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      root *= f;
    }
  }
  return {root, d};
}

// sign(a + b*sqrt(d)) for rational a, b and square-free d > 1.
int sign_of(const Rational& a, const Rational& b, unsigned long d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d. Equality would make sqrt(d) rational.
  const Rational lhs = a * a;
  const Rational rhs = b * b * Rational(static_cast<long long>(d));
  return lhs > rhs ? sa : sb;
}

Rational parse_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return Rational(1);
  if (text == "-") return Rational(-1);
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::parse, "malformed surd '" + std::string(whole) + "'");
  }
}

}  // namespace

QuadraticSurd::QuadraticSurd(Rational p, Rational q, unsigned long d)
    : p_(std::move(p)), q_(std::move(q)), d_(d) {
  auto [root, rest] = split_square(d_);
  if (root != 1) q_ *= Rational(static_cast<long long>(root));
  d_ = rest;
  if (d_ == 0) {
    q_ = Rational(0);
  } else if (d_ == 1) {
    p_ += q_;
    q_ = Rational(0);
  }
  if (q_.is_zero()) d_ = 0;
}

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
  const auto at = text.find("sqrt(");
  if (at == std::string_view::npos) return QuadraticSurd(Rational::parse(text), Rational(0), 0);
  const auto close = text.find(')', at);
  if (close == std::string_view::npos) throw Error(ErrorCode::parse, "malformed surd '" + std::string(text) + "'");
  if (close + 1 < text.size()) {
    // Surd part first: "sqrt(2)-1", "1/2*sqrt(3)+1/4".
    std::string_view tail = text.substr(close + 1);
    if (tail.front() != '+' && tail.front() != '-') {
      throw Error(ErrorCode::parse, "malformed surd '" + std::string(text) + "'");
    }
    if (tail.front() == '+') tail.remove_prefix(1);
    const QuadraticSurd head = parse(text.substr(0, close + 1));
    if (!head.p().is_zero() || tail.find("sqrt") != std::string_view::npos) {
      throw Error(ErrorCode::parse, "malformed surd '" + std::string(text) + "'");
    }
    return QuadraticSurd(Rational::parse(tail), head.q(), head.d());
  }
  std::string_view radicand = text.substr(at + 5, text.size() - at - 6);
  if (radicand.empty() || radicand.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::parse, "malformed radicand in '" + std::string(text) + "'");
  }
  const unsigned long d = std::stoul(std::string(radicand));

  std::string_view coeff = text.substr(0, at);
  if (!coeff.empty() && coeff.back() == '*') {
    coeff.remove_suffix(1);
    if (coeff.empty() || coeff.back() == '+' || coeff.back() == '-') {
      throw Error(ErrorCode::parse, "malformed surd '" + std::string(text) + "'");
    }
  }
  std::size_t split = std::string_view::npos;
  for (std::size_t i = coeff.size(); i-- > 1;) {
    if (coeff[i] == '+' || coeff[i] == '-') {
      split = i;
      break;
    }
  }
  Rational p(0);
  std::string_view q_text = coeff;
  if (split != std::string_view::npos) {
    p = Rational::parse(coeff.substr(0, split));
    q_text = coeff.substr(split);
  }
  return QuadraticSurd(p, parse_coefficient(q_text, text), d);
}

int QuadraticSurd::sign() const {
  if (is_rational()) return p_.sign();
  return sign_of(p_, q_, d_);
}

std::pair<Rational, Rational> QuadraticSurd::bracket(unsigned bits) const {
  if (is_rational()) return {p_, p_};
  // floor(sqrt(d * 4^bits)) / 2^bits <= sqrt(d) < (that + 1) / 2^bits
  mpz_class scaled(d_);
  scaled <<= 2 * bits;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const Rational unit = Rational::pow2(-static_cast<long>(bits));
  const Rational lo_root = Rational(root, mpz_class(1)) * unit;
  const Rational hi_root = lo_root + unit;
  Rational a = p_ + q_ * lo_root;
  Rational b = p_ + q_ * hi_root;
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return p_.to_string();
  const std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string q_part;
  const Rational mag = q_.abs();
  q_part = mag == Rational(1) ? radical : mag.to_string() + "*" + radical;
  if (p_.is_zero()) return (q_.sign() < 0 ? "-" : "") + q_part;
  return p_.to_string() + (q_.sign() < 0 ? "-" : "+") + q_part;
}

std::string QuadraticSurd::approx(int significant) const {
  const auto [lo, hi] = bracket(64);
  return midpoint(lo, hi).approx(significant);
}

std::strong_ordering compare(const Point& x, const Point& y) {
  auto as_surd = [](const Point& v) -> QuadraticSurd {
    if (const auto* r = std::get_if<Rational>(&v)) return QuadraticSurd(*r, Rational(0), 0);
    return std::get<QuadraticSurd>(v);
  };
  const QuadraticSurd a = as_surd(x);
  const QuadraticSurd b = as_surd(y);
  int s = 0;
  if (a.is_rational() && b.is_rational()) {
    return a.p() <=> b.p();
  } else if (b.is_rational()) {
    s = sign_of(a.p() - b.p(), a.q(), a.d());
  } else if (a.is_rational()) {
    s = sign_of(a.p() - b.p(), -b.q(), b.d());
  } else if (a.d() == b.d()) {
    s = sign_of(a.p() - b.p(), a.q() - b.q(), a.d());
  } else {
    // 1, sqrt(d1), sqrt(d2) are independent over Q, so a != b and strict
    // brackets separate them after finitely many refinements.
    for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
      auto [alo, ahi] = a.bracket(bits);
      auto [blo, bhi] = b.bracket(bits);
      if (ahi <= blo) return std::strong_ordering::less;
      if (bhi <= alo) return std::strong_ordering::greater;
    }
    throw Error(ErrorCode::unsupported_comparison,
                "cannot separate " + a.to_string() + " from " + b.to_string());
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Point& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

std::string approx(const Point& x, int significant) {
  return std::visit([significant](const auto& v) { return v.approx(significant); }, x);
}

Point parse_point(std::string_view text) {
  if (text.find("sqrt(") == std::string_view::npos) return Rational::parse(text);
  QuadraticSurd s = QuadraticSurd::parse(text);
  if (s.is_rational()) return s.p();
  return s;
}

std::pair<Rational, Rational> bracket(const Point& x, unsigned bits) {
  if (const auto* r = std::get_if<Rational>(&x)) return {*r, *r};
  return std::get<QuadraticSurd>(x).bracket(bits);
}

Rational rational_between(const Rational& from, const Point& x) {
  for (unsigned bits = 32;; bits *= 2) {
    auto [lo, hi] = bracket(x, bits);
    if (from < lo) return midpoint(from, lo);
    if (hi < from) return midpoint(hi, from);
    if (lo == hi) throw Error(ErrorCode::domain, "rational_between: point equals endpoint");
    if (bits > (1u << 16)) throw Error(ErrorCode::domain, "rational_between: no separation");
  }
}

Rational half_distance_floor(const Rational& c, const Point& x) {
  for (unsigned bits = 32;; bits *= 2) {
    auto [lo, hi] = bracket(x, bits);
    if (c < lo) return (lo - c) / Rational(2);
    if (hi < c) return (c - hi) / Rational(2);
    if (lo == hi) throw Error(ErrorCode::domain, "half_distance_floor: point equals center");
    if (bits > (1u << 16)) throw Error(ErrorCode::domain, "half_distance_floor: no separation");
  }
}

}  // namespace dforge
