#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fplink {

/// Index of a link-pattern in the canonical order for a fixed number of arcs.
using Rank = std::uint32_t;

/// Largest number of arcs a LinkPattern can hold (the parenthesis key is 64 bits).
inline constexpr int kMaxArcs = 32;

/// Largest number of arcs for which Catalan(n) fits the Rank width.
inline constexpr int kMaxRankedArcs = 19;

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/*
 * A noncrossing perfect matching of 2n points on a circle.
 *
 * Positions are 1-based and run clockwise, so partner(i) == j means the
 * boundary points i and j are joined by an arc. The match array is the
 * stored form; arc lists and the parenthesis word are derived from it.
 *
 * Values are immutable once constructed; every constructor validates.
 */
class LinkPattern {
 public:
  /// Builds from a match array: match[i-1] is the partner of position i.
  static LinkPattern from_match(std::span<const int> match);
  /// Builds from n arcs given as position pairs in any order.
  static LinkPattern from_arcs(int n, std::span<const std::pair<int, int>> arcs);
  /// Parses the whitespace-separated match array, e.g. "2 1 4 3".
  static LinkPattern parse(std::string_view text);
  /// Parses a balanced parenthesis word, e.g. "()()".
  static LinkPattern from_parens(std::string_view word);
  /// The pattern whose opener positions are the set bits of `key` (bit i-1 for position i).
  static LinkPattern from_key(int n, std::uint64_t key);

  int arcs() const { return static_cast<int>(match_.size() / 2); }
  int points() const { return static_cast<int>(match_.size()); }

  int partner(int position) const { return match_[static_cast<std::size_t>(position - 1)]; }

  /// Cyclic successor on the circle: i+1, or 1 for i = 2n.
  int next(int position) const { return position == points() ? 1 : position + 1; }

  std::vector<int> match() const { return {match_.begin(), match_.end()}; }
  std::vector<std::pair<int, int>> arc_list() const;

  /// Opener set as a bitmask (bit i-1 set when partner(i) > i).
  std::uint64_t key() const;

  std::string to_string() const;
  std::string to_parens() const;

  /// Number of positions i with partner(i) == next(i).
  int adjacent_arc_count() const;

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend std::strong_ordering operator<=>(const LinkPattern& a, const LinkPattern& b) {
    if (auto c = a.match_.size() <=> b.match_.size(); c != 0) return c;
    return a.match_ <=> b.match_;
  }

 private:
  explicit LinkPattern(std::vector<std::uint8_t> match) : match_(std::move(match)) {}

  std::vector<std::uint8_t> match_;

  friend LinkPattern apply_h(int, const LinkPattern&);
  friend LinkPattern rotate(const LinkPattern&);
  friend LinkPattern reflect(const LinkPattern&);
  friend LinkPattern unrank(int, Rank);
};

/// True when `match` (1-based partners) is a fixed-point-free involution without crossings.
bool is_noncrossing_matching(std::span<const int> match);

/// Catalan(n), throwing PatternError when it does not fit in 64 bits.
std::uint64_t catalan(int n);

/// Number of patterns with n arcs, checked against the Rank width.
Rank pattern_count(int n);

/// All Catalan(n) patterns in canonical order (lexicographic on the match array).
std::vector<LinkPattern> enumerate_patterns(int n);

Rank rank(const LinkPattern& pattern);
LinkPattern unrank(int n, Rank r);

/*
 * The operator h_i for i in 1..2n, with cyclic partner position i+1 (1 for i = 2n).
 * If i and i+1 are already joined the pattern is returned unchanged; otherwise
 * arcs (i, j) and (i+1, k) become (i, i+1) and (j, k).
 */
LinkPattern apply_h(int i, const LinkPattern& pattern);

/// Relabels position i as i+1 (2n becomes 1).
LinkPattern rotate(const LinkPattern& pattern);

/// Relabels position i as 2n+1-i.
LinkPattern reflect(const LinkPattern& pattern);

}  // namespace fplink
