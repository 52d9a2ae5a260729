#include "dforge/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dforge/error.hpp"

namespace dforge {

// ---------------------------------------------------------------------------
// Element

std::optional<Point> Element::point() const {
  if (const auto* r = std::get_if<Rational>(&value)) return Point(*r);
  if (const auto* s = std::get_if<QuadraticSurd>(&value)) {
    if (s->is_rational()) return Point(s->p());
    return Point(*s);
  }
  if (exact) return Point(*exact);
  return std::nullopt;
}

std::string Element::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value);
}

Element Element::parse(std::string_view text, unsigned base) {
  if (text.starts_with("0.")) return Element(DigitStream::parse(text, base));
  if (text.find("sqrt(") != std::string_view::npos) {
    QuadraticSurd s = QuadraticSurd::parse(text);
    if (s.is_rational()) return Element(s.p());
    return Element(std::move(s));
  }
  return Element(Rational::parse(text));
}

Membership membership(const Element& e, const IntervalQ& interval) {
  if (auto p = e.point()) return interval.contains(*p) ? Membership::inside : Membership::outside;
  const IntervalQ cell = e.stream()->cell();
  if (!cell.intersects(interval)) return Membership::outside;
  if (cell.is_subset_of(interval)) return Membership::inside;
  return Membership::undecided;
}

std::string_view to_string(EnumerationKind kind) noexcept {
  switch (kind) {
    case EnumerationKind::rationals_01: return "rationals_01";
    case EnumerationKind::dyadics_both_reps: return "dyadics_both_reps";
    case EnumerationKind::surds_bounded: return "surds_bounded";
    case EnumerationKind::file_list: return "file_list";
    case EnumerationKind::digit_grid: return "digit_grid";
  }
  return "file_list";
}

EnumerationKind parse_enumeration_kind(std::string_view text) {
  if (text == "rationals_01" || text == "rationals") return EnumerationKind::rationals_01;
  if (text == "dyadics_both_reps" || text == "dyadics") return EnumerationKind::dyadics_both_reps;
  if (text == "surds_bounded" || text == "surds") return EnumerationKind::surds_bounded;
  if (text == "file_list") return EnumerationKind::file_list;
  if (text == "digit_grid") return EnumerationKind::digit_grid;
  throw Error(ErrorCode::parse, "unknown enumeration kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Sources

class Enumeration::Source {
 public:
  virtual ~Source() = default;
  virtual std::optional<std::size_t> capacity() const = 0;
  virtual Element at(std::size_t k) const = 0;
};

namespace {

class RationalsSource final : public Enumeration::Source {
 public:
  std::optional<std::size_t> capacity() const override { return std::nullopt; }

  Element at(std::size_t k) const override { return get(k); }

  Rational get(std::size_t k) const {
    std::lock_guard lock(mutex_);
    while (cache_.size() < k) extend();
    return cache_[k - 1];
  }

 private:
  void extend() const {
    const long q = next_den_++;
    if (q == 1) {
      cache_.emplace_back(0);
      cache_.emplace_back(1);
      return;
    }
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) cache_.emplace_back(p, q);
    }
  }

  mutable std::mutex mutex_;
  mutable std::vector<Rational> cache_;
  mutable long next_den_ = 1;
};

const RationalsSource& shared_rationals() {
  static const RationalsSource source;
  return source;
}

class DyadicsSource final : public Enumeration::Source {
 public:
  explicit DyadicsSource(std::size_t prefix_len) : prefix_len_(prefix_len) {}
  std::optional<std::size_t> capacity() const override { return std::nullopt; }
  Element at(std::size_t k) const override {
    return Element(dyadics_both_reps(k, prefix_len_), dyadic_value(k));
  }

 private:
  std::size_t prefix_len_;
};

// sign(a + b sqrt(d)) over machine integers; inputs stay far below overflow.
int small_surd_sign(std::int64_t a, std::int64_t b, std::int64_t d) {
  const int sa = (a > 0) - (a < 0);
  const int sb = (b > 0) - (b < 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return a * a > b * b * d ? sa : sb;
}

class SurdsSource final : public Enumeration::Source {
 public:
  std::optional<std::size_t> capacity() const override { return std::nullopt; }

  Element at(std::size_t k) const override {
    std::lock_guard lock(mutex_);
    while (cache_.size() < k) extend();
    return Element(cache_[k - 1]);
  }

 private:
  // Appends every surd p/q + (r/s) sqrt(d) in [0,1] whose reduced height
  // max(|p|, q, |r|, s, d) equals the next height.
  void extend() const {
    static constexpr std::array<std::int64_t, 3> kRadicands{2, 3, 5};
    const std::int64_t h = next_height_++;
    for (std::int64_t d : kRadicands) {
      if (d > h) continue;
      for (std::int64_t q = 1; q <= h; ++q) {
        for (std::int64_t p = -h; p <= h; ++p) {
          if (std::gcd(std::abs(p), q) != 1) continue;
          for (std::int64_t s = 1; s <= h; ++s) {
            for (std::int64_t r = -h; r <= h; ++r) {
              if (r == 0 || std::gcd(std::abs(r), s) != 1) continue;
              const std::int64_t height = std::max({std::abs(p), q, std::abs(r), s, d});
              if (height != h) continue;
              // value = (p s + r q sqrt(d)) / (q s)
              const std::int64_t a = p * s;
              const std::int64_t b = r * q;
              const std::int64_t den = q * s;
              if (small_surd_sign(a, b, d) < 0) continue;
              if (small_surd_sign(a - den, b, d) > 0) continue;
              cache_.emplace_back(Rational(p, q), Rational(r, s), static_cast<unsigned long>(d));
            }
          }
        }
      }
    }
  }

  mutable std::mutex mutex_;
  mutable std::vector<QuadraticSurd> cache_;
  mutable std::int64_t next_height_ = 2;
};

class ListSource final : public Enumeration::Source {
 public:
  explicit ListSource(std::vector<Element> elements) : elements_(std::move(elements)) {}
  std::optional<std::size_t> capacity() const override { return elements_.size(); }
  Element at(std::size_t k) const override { return elements_[k - 1]; }

 private:
  std::vector<Element> elements_;
};

void check_unit_range(const Element& e, std::size_t line) {
  auto p = e.point();
  if (!p) return;  // digit strings always denote points of [0,1]
  if (compare(*p, Point(Rational(0))) < 0 || compare(*p, Point(Rational(1))) > 0) {
    throw Error(ErrorCode::domain,
                "line " + std::to_string(line) + ": value " + e.to_string() + " outside [0,1]",
                std::to_string(line));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration

Enumeration::Enumeration(EnumerationKind kind, std::shared_ptr<const Source> source, std::size_t prefix_len)
    : kind_(kind), source_(std::move(source)), prefix_len_(prefix_len) {}

Enumeration Enumeration::rationals_01() {
  static const std::shared_ptr<const Source> source(&shared_rationals(), [](const Source*) {});
  return Enumeration(EnumerationKind::rationals_01, source, 0);
}

Enumeration Enumeration::dyadics_both_reps(std::size_t prefix_len) {
  return Enumeration(EnumerationKind::dyadics_both_reps, std::make_shared<DyadicsSource>(prefix_len),
                     prefix_len);
}

Enumeration Enumeration::surds_bounded() {
  static const auto source = std::make_shared<const SurdsSource>();
  return Enumeration(EnumerationKind::surds_bounded, source, 0);
}

Enumeration Enumeration::file_list(std::vector<Element> elements) {
  return Enumeration(EnumerationKind::file_list, std::make_shared<ListSource>(std::move(elements)), 0);
}

Enumeration Enumeration::digit_grid(std::vector<DigitStream> rows) {
  std::vector<Element> elements;
  elements.reserve(rows.size());
  for (auto& row : rows) elements.emplace_back(std::move(row));
  return Enumeration(EnumerationKind::digit_grid, std::make_shared<ListSource>(std::move(elements)), 0);
}

Enumeration Enumeration::builtin(EnumerationKind kind, std::size_t prefix_len) {
  switch (kind) {
    case EnumerationKind::rationals_01: return rationals_01();
    case EnumerationKind::dyadics_both_reps: return dyadics_both_reps(prefix_len);
    case EnumerationKind::surds_bounded: return surds_bounded();
    default: break;
  }
  throw Error(ErrorCode::configuration,
              std::string(to_string(kind)) + " is not a built-in enumeration");
}

Enumeration Enumeration::parse_lines(std::string_view text, unsigned base) {
  std::vector<Element> elements;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty()) continue;
    try {
      Element e = Element::parse(line, base);
      check_unit_range(e, line_no);
      elements.push_back(std::move(e));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::domain) throw;
      throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + err.what(),
                  std::to_string(line_no));
    }
  }
  return file_list(std::move(elements));
}

Enumeration Enumeration::load_file(const std::filesystem::path& path, unsigned base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lines(buffer.str(), base);
}

std::optional<std::size_t> Enumeration::capacity() const { return source_->capacity(); }

bool Enumeration::has(std::size_t k) const {
  if (k == 0) return false;
  auto cap = capacity();
  return !cap || k <= *cap;
}

Element Enumeration::at(std::size_t k) const {
  if (!has(k)) {
    throw Error(ErrorCode::index, "enumeration index " + std::to_string(k) + " outside capacity " +
                                      (capacity() ? std::to_string(*capacity()) : "inf"));
  }
  return source_->at(k);
}

Rational rationals_01(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::index, "enumerations are 1-indexed");
  return shared_rationals().get(k);
}

Rational dyadic_value(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::index, "enumerations are 1-indexed");
  const std::size_t m = (k + 1) / 2;  // 1-based dyadic index
  std::size_t j = 1;
  while ((std::size_t{1} << j) <= m) ++j;  // m in [2^(j-1), 2^j)
  const std::size_t offset = m - (std::size_t{1} << (j - 1));
  return Rational(mpz_class(static_cast<unsigned long>(2 * offset + 1)),
                  mpz_class(1) << static_cast<mp_bitcnt_t>(j));
}

DigitStream dyadics_both_reps(std::size_t k, std::size_t prefix_len) {
  const TailConvention c = k % 2 == 1 ? TailConvention::no_trailing_max : TailConvention::no_trailing_zeros;
  return to_digits(dyadic_value(k), 2, prefix_len, c);
}

}  // namespace dforge
