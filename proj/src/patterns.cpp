#include "fplink/patterns.hpp"

#include <array>
#include <limits>
#include <sstream>

namespace fplink {

namespace {

std::vector<std::uint8_t> checked_match(std::span<const int> match) {
  if (match.empty() || match.size() % 2 != 0) {
    throw PatternError("match array must have positive even length, got " +
                       std::to_string(match.size()));
  }
  if (match.size() > 2 * static_cast<std::size_t>(kMaxArcs)) {
    throw PatternError("pattern has more than " + std::to_string(kMaxArcs) + " arcs");
  }
  if (!is_noncrossing_matching(match)) {
    throw PatternError("match array is not a noncrossing perfect matching");
  }
  return {match.begin(), match.end()};
}

// Catalan numbers that fit the Rank width, C_0 .. C_19.
const std::array<std::uint64_t, kMaxRankedArcs + 1>& catalan_table() {
  static const auto table = [] {
    std::array<std::uint64_t, kMaxRankedArcs + 1> t{};
    for (int k = 0; k <= kMaxRankedArcs; ++k) t[k] = catalan(k);
    return t;
  }();
  return table;
}

void check_ranked_arcs(int n) {
  if (n < 1) throw PatternError("number of arcs must be positive, got " + std::to_string(n));
  if (n > kMaxRankedArcs) {
    throw PatternError("Catalan(" + std::to_string(n) + ") overflows the 32-bit rank width");
  }
}

// Rank of the block of positions lo..hi, which is matched internally.
std::uint64_t rank_block(const LinkPattern& p, int lo, int hi) {
  if (lo > hi) return 0;
  const auto& cat = catalan_table();
  const int arcs = (hi - lo + 1) / 2;
  const int j = p.partner(lo);
  const int inner = (j - lo - 1) / 2;
  const int outer = arcs - 1 - inner;
  std::uint64_t offset = 0;
  for (int a = 0; a < inner; ++a) offset += cat[a] * cat[arcs - 1 - a];
  return offset + rank_block(p, lo + 1, j - 1) * cat[outer] + rank_block(p, j + 1, hi);
}

void unrank_block(std::vector<std::uint8_t>& match, int lo, int arcs, std::uint64_t r) {
  if (arcs == 0) return;
  const auto& cat = catalan_table();
  int inner = 0;
  for (;; ++inner) {
    const std::uint64_t width = cat[inner] * cat[arcs - 1 - inner];
    if (r < width) break;
    r -= width;
  }
  const int outer = arcs - 1 - inner;
  const int j = lo + 2 * inner + 1;
  match[lo - 1] = static_cast<std::uint8_t>(j);
  match[j - 1] = static_cast<std::uint8_t>(lo);
  unrank_block(match, lo + 1, inner, r / cat[outer]);
  unrank_block(match, j + 1, outer, r % cat[outer]);
}

}  // namespace

bool is_noncrossing_matching(std::span<const int> match) {
  const int size = static_cast<int>(match.size());
  if (size == 0 || size % 2 != 0) return false;
  for (int i = 1; i <= size; ++i) {
    const int j = match[i - 1];
    if (j < 1 || j > size || j == i || match[j - 1] != i) return false;
  }
  // Openers and closers must nest like parentheses.
  std::vector<int> open;
  for (int i = 1; i <= size; ++i) {
    const int j = match[i - 1];
    if (j > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != j) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

LinkPattern LinkPattern::from_match(std::span<const int> match) {
  return LinkPattern(checked_match(match));
}

LinkPattern LinkPattern::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  if (n < 1 || n > kMaxArcs) throw PatternError("number of arcs out of range");
  if (arcs.size() != static_cast<std::size_t>(n)) {
    throw PatternError("expected " + std::to_string(n) + " arcs, got " + std::to_string(arcs.size()));
  }
  std::vector<int> match(2 * static_cast<std::size_t>(n), 0);
  for (auto [a, b] : arcs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b || match[a - 1] != 0 || match[b - 1] != 0) {
      throw PatternError("invalid arc (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    match[a - 1] = b;
    match[b - 1] = a;
  }
  return from_match(match);
}

LinkPattern LinkPattern::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> match;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw PatternError("bad match-array token '" + token + "'");
    match.push_back(value);
  }
  return from_match(match);
}

LinkPattern LinkPattern::from_parens(std::string_view word) {
  std::vector<int> match(word.size(), 0);
  std::vector<int> open;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int pos = static_cast<int>(k) + 1;
    if (word[k] == '(') {
      open.push_back(pos);
    } else if (word[k] == ')') {
      if (open.empty()) throw PatternError("unbalanced parenthesis word");
      match[open.back() - 1] = pos;
      match[pos - 1] = open.back();
      open.pop_back();
    } else {
      throw PatternError("parenthesis word may only contain '(' and ')'");
    }
  }
  if (!open.empty()) throw PatternError("unbalanced parenthesis word");
  return from_match(match);
}

LinkPattern LinkPattern::from_key(int n, std::uint64_t key) {
  if (n < 1 || n > kMaxArcs) throw PatternError("number of arcs out of range");
  std::string word(2 * static_cast<std::size_t>(n), ')');
  for (int i = 0; i < 2 * n; ++i) {
    if ((key >> i) & 1U) word[i] = '(';
  }
  return from_parens(word);
}

std::vector<std::pair<int, int>> LinkPattern::arc_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(match_.size() / 2);
  for (int i = 1; i <= points(); ++i) {
    if (partner(i) > i) out.emplace_back(i, partner(i));
  }
  return out;
}

std::uint64_t LinkPattern::key() const {
  std::uint64_t key = 0;
  for (int i = 1; i <= points(); ++i) {
    if (partner(i) > i) key |= std::uint64_t{1} << (i - 1);
  }
  return key;
}

std::string LinkPattern::to_string() const {
  std::string out;
  for (int i = 1; i <= points(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(partner(i));
  }
  return out;
}

std::string LinkPattern::to_parens() const {
  std::string out;
  for (int i = 1; i <= points(); ++i) out += partner(i) > i ? '(' : ')';
  return out;
}

int LinkPattern::adjacent_arc_count() const {
  int count = 0;
  for (int i = 1; i <= points(); ++i) {
    if (partner(i) == next(i)) ++count;
  }
  return count;
}

std::uint64_t catalan(int n) {
  if (n < 0) throw PatternError("Catalan index must be nonnegative");
  // C_{k+1} = C_k * 2(2k+1) / (k+2), with a 128-bit intermediate.
  unsigned __int128 c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * (2 * (2 * static_cast<unsigned>(k) + 1)) / (static_cast<unsigned>(k) + 2);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw PatternError("Catalan(" + std::to_string(n) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

Rank pattern_count(int n) {
  check_ranked_arcs(n);
  return static_cast<Rank>(catalan_table()[n]);
}

std::vector<LinkPattern> enumerate_patterns(int n) {
  const Rank count = pattern_count(n);
  std::vector<LinkPattern> out;
  out.reserve(count);
  for (Rank r = 0; r < count; ++r) out.push_back(unrank(n, r));
  return out;
}

Rank rank(const LinkPattern& pattern) {
  check_ranked_arcs(pattern.arcs());
  return static_cast<Rank>(rank_block(pattern, 1, pattern.points()));
}

LinkPattern unrank(int n, Rank r) {
  const Rank count = pattern_count(n);
  if (r >= count) {
    throw PatternError("rank " + std::to_string(r) + " out of range for " + std::to_string(n) +
                       " arcs (Catalan = " + std::to_string(count) + ")");
  }
  std::vector<std::uint8_t> match(2 * static_cast<std::size_t>(n), 0);
  unrank_block(match, 1, n, r);
  return LinkPattern(std::move(match));
}

LinkPattern apply_h(int i, const LinkPattern& pattern) {
  if (i < 1 || i > pattern.points()) {
    throw PatternError("operator index " + std::to_string(i) + " outside 1.." +
                       std::to_string(pattern.points()));
  }
  const int succ = pattern.next(i);
  const int j = pattern.partner(i);
  if (j == succ) return pattern;
  const int k = pattern.partner(succ);
  auto match = pattern.match_;
  match[i - 1] = static_cast<std::uint8_t>(succ);
  match[succ - 1] = static_cast<std::uint8_t>(i);
  match[j - 1] = static_cast<std::uint8_t>(k);
  match[k - 1] = static_cast<std::uint8_t>(j);
  return LinkPattern(std::move(match));
}

LinkPattern rotate(const LinkPattern& pattern) {
  const int size = pattern.points();
  std::vector<std::uint8_t> match(pattern.match_.size());
  for (int i = 1; i <= size; ++i) {
    match[pattern.next(i) - 1] = static_cast<std::uint8_t>(pattern.next(pattern.partner(i)));
  }
  return LinkPattern(std::move(match));
}

LinkPattern reflect(const LinkPattern& pattern) {
  const int size = pattern.points();
  std::vector<std::uint8_t> match(pattern.match_.size());
  for (int i = 1; i <= size; ++i) {
    match[size - i] = static_cast<std::uint8_t>(size + 1 - pattern.partner(i));
  }
  return LinkPattern(std::move(match));
}

}  // namespace fplink
