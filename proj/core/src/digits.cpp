#include "dforge/digits.hpp"

#include <string>

#include "dforge/error.hpp"

namespace dforge {
namespace {

char digit_char(unsigned d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view to_string(TailConvention c) noexcept {
  switch (c) {
    case TailConvention::no_trailing_zeros: return "no_trailing_zeros";
    case TailConvention::no_trailing_max: return "no_trailing_max";
    case TailConvention::unnormalized: return "unnormalized";
  }
  return "unnormalized";
}

TailConvention parse_tail_convention(std::string_view text) {
  if (text == "no_trailing_zeros") return TailConvention::no_trailing_zeros;
  if (text == "no_trailing_max") return TailConvention::no_trailing_max;
  if (text == "unnormalized") return TailConvention::unnormalized;
  throw Error(ErrorCode::parse, "unknown tail convention '" + std::string(text) + "'");
}

DigitStream::DigitStream(unsigned base, std::vector<std::uint8_t> digits, TailConvention convention)
    : base_(base), digits_(std::move(digits)), convention_(convention) {
  if (base_ < 2 || base_ > 36) {
    throw Error(ErrorCode::domain, "digit base must lie in [2,36], got " + std::to_string(base_));
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_) {
      throw Error(ErrorCode::domain, "digit " + std::to_string(digits_[i]) + " at position " +
                                         std::to_string(i + 1) + " exceeds base " +
                                         std::to_string(base_));
    }
  }
}

DigitStream DigitStream::parse(std::string_view text, unsigned default_base) {
  auto fail = [&] { return Error(ErrorCode::parse, "malformed digit string '" + std::string(text) + "'"); };
  unsigned base = default_base;
  std::string_view body = text;
  if (const auto open = body.find("(base "); open != std::string_view::npos) {
    if (body.back() != ')') throw fail();
    const std::string_view num = body.substr(open + 6, body.size() - open - 7);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string_view::npos) throw fail();
    base = static_cast<unsigned>(std::stoul(std::string(num)));
    body = body.substr(0, open);
  }
  if (body.size() < 2 || body[0] != '0' || body[1] != '.') throw fail();
  std::vector<std::uint8_t> digits;
  for (char c : body.substr(2)) {
    const int v = digit_value(c);
    if (v < 0) throw fail();
    if (static_cast<unsigned>(v) >= base) {
      throw Error(ErrorCode::parse, "digit '" + std::string(1, c) + "' out of range for base " +
                                        std::to_string(base));
    }
    digits.push_back(static_cast<std::uint8_t>(v));
  }
  return DigitStream(base, std::move(digits));
}

unsigned DigitStream::digit(std::size_t position) const {
  if (position == 0 || position > digits_.size()) {
    throw Error(ErrorCode::insufficient_digits,
                "digit position " + std::to_string(position) + " beyond prefix of length " +
                    std::to_string(digits_.size()));
  }
  return digits_[position - 1];
}

Rational DigitStream::prefix_value() const { return prefix_value(digits_.size()); }

Rational DigitStream::prefix_value(std::size_t n) const {
  if (n > digits_.size()) {
    throw Error(ErrorCode::insufficient_digits, "prefix of length " + std::to_string(n) +
                                                    " requested from " + std::to_string(digits_.size()) +
                                                    " digits");
  }
  // Horner over integers, then one division.
  mpz_class acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc *= base_;
    acc += digits_[i];
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), base_, n);
  return Rational(acc, scale);
}

IntervalQ DigitStream::cell() const {
  const Rational lo = prefix_value();
  return IntervalQ::closed(lo, lo + Rational::pow(static_cast<long>(base_), -static_cast<long>(digits_.size())));
}

std::string DigitStream::to_string() const {
  std::string out = "0.";
  out.reserve(digits_.size() + 12);
  for (auto d : digits_) out.push_back(digit_char(d));
  out += "(base " + std::to_string(base_) + ")";
  return out;
}

DigitStream to_digits(const Rational& x, unsigned base, std::size_t n, TailConvention convention) {
  if (x.sign() < 0 || Rational(1) < x) {
    throw Error(ErrorCode::domain, "to_digits needs 0 <= x <= 1, got " + x.to_string(), x.to_string());
  }
  if (base < 2 || base > 36) {
    throw Error(ErrorCode::domain, "digit base must lie in [2,36], got " + std::to_string(base));
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(n);
  const Rational b(static_cast<long long>(base));
  Rational rest = x;
  const bool tail_form = convention == TailConvention::no_trailing_zeros || x == Rational(1);
  if (x.is_zero() || !tail_form) {
    // Greedy: d = floor(b r), remainder in [0,1).
    for (std::size_t i = 0; i < n; ++i) {
      rest *= b;
      const mpz_class d = rest.floor();
      digits.push_back(static_cast<std::uint8_t>(d.get_ui()));
      rest -= Rational(d, mpz_class(1));
    }
  } else {
    // d = ceil(b r) - 1, remainder in (0,1]: never settles into trailing zeros.
    for (std::size_t i = 0; i < n; ++i) {
      rest *= b;
      const mpz_class d = rest.ceil() - 1;
      digits.push_back(static_cast<std::uint8_t>(d.get_ui()));
      rest -= Rational(d, mpz_class(1));
    }
  }
  return DigitStream(base, std::move(digits), convention);
}

DigitStream to_digits(const Point& x, unsigned base, std::size_t n, TailConvention convention) {
  if (const auto* r = std::get_if<Rational>(&x)) return to_digits(*r, base, n, convention);
  const auto& s = std::get<QuadraticSurd>(x);
  if (s.is_rational()) return to_digits(s.p(), base, n, convention);
  if (s.sign() < 0 || compare(x, Point(Rational(1))) > 0) {
    throw Error(ErrorCode::domain, "to_digits needs 0 <= x <= 1, got " + s.to_string(), s.to_string());
  }
  if (base < 2 || base > 36) {
    throw Error(ErrorCode::domain, "digit base must lie in [2,36], got " + std::to_string(base));
  }
  // floor(x * base^n) from an enclosure fine enough that both ends agree;
  // an irrational x never sits on the grid, so refinement terminates.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), base, n);
  const Rational factor(scale, mpz_class(1));
  mpz_class whole;
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = s.bracket(bits);
    const mpz_class a = (lo * factor).floor();
    const mpz_class b = (hi * factor).floor();
    if (a == b) {
      whole = a;
      break;
    }
  }
  std::vector<std::uint8_t> digits(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    const mpz_class q = whole / base;
    digits[i] = static_cast<std::uint8_t>(mpz_class(whole - q * base).get_ui());
    whole = q;
  }
  return DigitStream(base, std::move(digits), convention);
}

}  // namespace dforge
