#include "dforge/covers.hpp"

#include <string>

#include "dforge/error.hpp"
#include "dforge/certificate.hpp"
#include "dforge/nested_real.hpp"

namespace dforge {

Cover::Cover(IntervalQ target_interval, std::vector<IntervalQ> open_pieces)
    : target(std::move(target_interval)), pieces(std::move(open_pieces)) {
  if (!target.is_closed()) throw Error(ErrorCode::domain, "cover target must be closed, got " + target.to_string());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].kind() != IntervalKind::open) {
      throw Error(ErrorCode::domain, "piece " + std::to_string(i + 1) + " is not open: " + pieces[i].to_string());
    }
  }
}

Cover Cover::parse(IntervalQ target_interval, std::string_view text) {
  std::vector<IntervalQ> pieces;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      pieces.push_back(IntervalQ::parse(line));
    } catch (const Error& err) {
      throw Error(err.code(), "line " + std::to_string(line_no) + ": " + err.what(), std::to_string(line_no));
    }
  }
  return Cover(std::move(target_interval), std::move(pieces));
}

std::vector<std::size_t> heine_borel_subcover(const Cover& c) {
  std::vector<std::size_t> chosen;
  Rational frontier = c.target.lo();
  while (true) {
    std::size_t pick = 0;
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      if (c.pieces[i].contains(frontier)) {
        pick = i + 1;
        break;
      }
    }
    if (pick == 0) {
      throw Error(ErrorCode::not_a_cover, "no piece contains " + frontier.to_string(), frontier.to_string());
    }
    chosen.push_back(pick);
    const Rational& reach = c.pieces[pick - 1].hi();
    if (c.target.hi() < reach) return chosen;
    frontier = reach;
  }
}

bool is_subcover_chain(const Cover& c, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return false;
  for (auto i : indices) {
    if (i == 0 || i > c.pieces.size()) return false;
  }
  const auto& first = c.pieces[indices.front() - 1];
  if (!(first.lo() < c.target.lo())) return false;
  for (std::size_t j = 1; j < indices.size(); ++j) {
    const auto& prev = c.pieces[indices[j - 1] - 1];
    const auto& cur = c.pieces[indices[j] - 1];
    if (!(cur.lo() < prev.hi() && prev.hi() < cur.hi())) return false;
  }
  return c.target.hi() < c.pieces[indices.back() - 1].hi();
}

Rational nested_witness(const std::vector<IntervalQ>& chain) {
  if (chain.empty()) throw Error(ErrorCode::domain, "nested_witness needs a nonempty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_closed()) {
      throw Error(ErrorCode::nesting_violation, "link " + std::to_string(i + 1) + " is not closed",
                  std::to_string(i + 1));
    }
  }
  if (auto bad = first_nesting_violation(chain)) {
    throw Error(ErrorCode::nesting_violation, "chain not nested at link " + std::to_string(*bad),
                std::to_string(*bad));
  }
  return chain.back().lo();
}

std::pair<Cover, LengthLedger> measure_zero_cover(const Enumeration& e, const Rational& epsilon, std::size_t n) {
  if (epsilon.sign() <= 0) throw Error(ErrorCode::domain, "epsilon must be positive, got " + epsilon.to_string());
  std::vector<IntervalQ> pieces;
  LengthLedger ledger;
  for (std::size_t j = 1; j <= n; ++j) {
    const Point x = require_point(e, j);
    const Rational half = epsilon * Rational::pow2(-static_cast<long>(j + 2));
    Rational center;
    if (const auto* r = std::get_if<Rational>(&x)) {
      center = *r;
    } else {
      for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = bracket(x, bits);
        if (hi - lo <= half / Rational(2)) {
          center = lo;
          break;
        }
      }
    }
    pieces.push_back(IntervalQ::open(center - half, center + half));
    ledger.terms.emplace_back(j, half * Rational(2));
    ledger.total += half * Rational(2);
  }
  return {Cover(IntervalQ::unit(), std::move(pieces)), std::move(ledger)};
}

LengthBound cover_length_lower_bound(const Cover& c) {
  LengthBound out;
  out.chain = heine_borel_subcover(c);
  for (auto i : out.chain) out.bound += c.pieces[i - 1].width();
  return out;
}

Located bw_locate(const std::function<Rational(std::size_t)>& seq, std::size_t m, std::size_t depth,
                  const IntervalQ& range) {
  if (!range.is_closed()) throw Error(ErrorCode::domain, "bw_locate range must be closed");
  std::vector<Rational> terms;
  terms.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    terms.push_back(seq(k));
    if (!range.contains(terms.back())) {
      throw Error(ErrorCode::domain, "term " + std::to_string(k) + " = " + terms.back().to_string() +
                                         " lies outside " + range.to_string(),
                  std::to_string(k));
    }
  }
  IntervalQ current = range;
  for (std::size_t step = 0; step < depth; ++step) {
    const Rational mid = current.midpoint();
    const IntervalQ left = IntervalQ::closed(current.lo(), mid);
    const IntervalQ right = IntervalQ::closed(mid, current.hi());
    std::size_t in_left = 0;
    std::size_t in_right = 0;
    for (const auto& t : terms) {
      in_left += left.contains(t) ? 1 : 0;
      in_right += right.contains(t) ? 1 : 0;
    }
    current = in_left >= in_right ? left : right;
  }
  std::size_t resolvable = 0;
  while ((std::size_t{2} << resolvable) <= m) ++resolvable;
  return {current, m == 0 || depth > resolvable};
}

}  // namespace dforge
