#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dforge/digits.hpp"
#include "dforge/interval.hpp"
#include "dforge/rational.hpp"
#include "dforge/surd.hpp"

namespace dforge {

/// One enumerated value. Digit streams carry their exact value when the
/// source knows it (dyadics_both_reps); otherwise they only determine a cell.
struct Element {
  std::variant<Rational, QuadraticSurd, DigitStream> value;
  std::optional<Rational> exact;

  Element(Rational r) : value(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Element(QuadraticSurd s) : value(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Element(DigitStream d, std::optional<Rational> exact_value = std::nullopt)  // NOLINT
      : value(std::move(d)), exact(std::move(exact_value)) {}

  /// The exact point, when there is one.
  std::optional<Point> point() const;
  const DigitStream* stream() const { return std::get_if<DigitStream>(&value); }
  std::string to_string() const;
  /// Inverse of to_string for list elements ("p/q", a surd, or "0.ddd(base b)").
  static Element parse(std::string_view text, unsigned base = 10);
};

enum class Membership { inside, outside, undecided };

/// Exact membership of an element in an interval. Streams without an exact
/// value are decided through their cell: outside when the cell misses the
/// interval, inside when the cell lies within it.
Membership membership(const Element& e, const IntervalQ& interval);

enum class EnumerationKind { rationals_01, dyadics_both_reps, surds_bounded, file_list, digit_grid };

std::string_view to_string(EnumerationKind kind) noexcept;
/// Accepts the kind names plus the short aliases "rationals", "dyadics", "surds".
EnumerationKind parse_enumeration_kind(std::string_view text);

/// Indexed source k -> omega_k, 1-based. Built-in kinds are unbounded; list
/// kinds have their length as capacity. Copies share the underlying source;
/// lazily extended caches are guarded, so concurrent reads are safe.
class Enumeration {
 public:
  class Source;

  static Enumeration rationals_01();
  static Enumeration dyadics_both_reps(std::size_t prefix_len = 64);
  static Enumeration surds_bounded();
  static Enumeration file_list(std::vector<Element> elements);
  static Enumeration digit_grid(std::vector<DigitStream> rows);
  /// Built-in kind by name; list kinds cannot be built this way.
  static Enumeration builtin(EnumerationKind kind, std::size_t prefix_len = 64);

  /// One value per line: "p/q", a surd, or a digit string "0.d1d2...".
  /// Blank lines are skipped. Parse and range errors name the line.
  static Enumeration load_file(const std::filesystem::path& path, unsigned base = 10);
  static Enumeration parse_lines(std::string_view text, unsigned base = 10);

  EnumerationKind kind() const noexcept { return kind_; }
  /// nullopt for unbounded kinds.
  std::optional<std::size_t> capacity() const;
  bool has(std::size_t k) const;
  /// omega_k; throws index error beyond capacity or for k = 0.
  Element at(std::size_t k) const;
  std::size_t prefix_len() const noexcept { return prefix_len_; }

 private:
  Enumeration(EnumerationKind kind, std::shared_ptr<const Source> source, std::size_t prefix_len);

  EnumerationKind kind_;
  std::shared_ptr<const Source> source_;
  std::size_t prefix_len_ = 0;
};

/// k-th rational of [0,1] by ascending denominator, then numerator:
/// 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ...
Rational rationals_01(std::size_t k);

/// k-th base-2 stream of the dyadic rationals of (0,1), each listed twice:
/// terminating form first, then the form ending in 1s. Ordered by
/// denominator 2^j, then numerator.
DigitStream dyadics_both_reps(std::size_t k, std::size_t prefix_len);
/// The value of dyadics_both_reps(k, ...).
Rational dyadic_value(std::size_t k);

}  // namespace dforge
