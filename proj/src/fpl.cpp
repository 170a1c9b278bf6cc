#include "fplink/fpl.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <string>
#include <thread>
#include <unordered_map>

#include "fpl_trace.hpp"

namespace fplink {

namespace {

std::uint32_t low_bits(int width) {
  return width >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
}

void check_grid(int n, int capacity) {
  if (n < 1) throw CapacityError("grid size must be positive, got " + std::to_string(n));
  const int ceiling = std::min(capacity, kMaxGrid);
  if (n > ceiling) {
    throw CapacityError("grid size " + std::to_string(n) + " exceeds the enumeration capacity " +
                        std::to_string(ceiling) + "; raise the capacity explicitly to attempt it");
  }
}

// Successors of a column-sum mask: every mask reachable by one ASM row.
// Entries +1 need column sum 0 and running row sum 0; entries -1 need 1 and 1.
void append_successors(int n, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  struct Frame {
    int col;
    int row_sum;
    std::uint32_t next;
  };
  std::array<Frame, 2 * kMaxGrid + 2> stack{};
  int top = 0;
  stack[top++] = {0, 0, mask};
  while (top > 0) {
    const Frame f = stack[--top];
    if (f.col == n) {
      if (f.row_sum == 1) out.push_back(f.next);
      continue;
    }
    const std::uint32_t bit = std::uint32_t{1} << f.col;
    const bool column_full = (mask & bit) != 0;
    // Pushed in reverse so that 0 entries are explored before nonzero ones.
    if (!column_full && f.row_sum == 0) stack[top++] = {f.col + 1, 1, f.next | bit};
    if (column_full && f.row_sum == 1) stack[top++] = {f.col + 1, 0, f.next & ~bit};
    stack[top++] = {f.col + 1, f.row_sum, f.next};
  }
}

// Depth-first walk over column-sum masks. masks[0] == 0 and masks[n] == full.
class MaskWalker {
 public:
  explicit MaskWalker(int n) : n_(n), buffers_(static_cast<std::size_t>(n) + 1) {}

  template <typename Leaf>
  void walk(std::vector<std::uint32_t>& masks, int depth, Leaf&& leaf) {
    if (depth == n_) {
      if (masks[n_] == low_bits(n_)) leaf(std::span<const std::uint32_t>(masks));
      return;
    }
    auto& next = buffers_[static_cast<std::size_t>(depth)];
    next.clear();
    append_successors(n_, masks[depth], next);
    for (const auto successor : next) {
      masks[depth + 1] = successor;
      walk(masks, depth + 1, leaf);
    }
  }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> buffers_;
};

std::vector<std::uint32_t> masks_of(const AsmMatrix& m) {
  const int n = m.size();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r < n; ++r) {
    std::uint32_t next = masks[r];
    for (int c = 0; c < n; ++c) {
      if (m.at(r, c) == 1) next |= std::uint32_t{1} << c;
      if (m.at(r, c) == -1) next &= ~(std::uint32_t{1} << c);
    }
    masks[r + 1] = next;
  }
  return masks;
}

FplState state_from_masks(int n, std::span<const std::uint32_t> masks) {
  detail::Selection sel;
  detail::select_edges(n, masks, sel);
  return FplState(n, {sel.horizontal.begin(), sel.horizontal.begin() + n},
                  {sel.vertical.begin(), sel.vertical.begin() + n + 1});
}

// Splits the search at a fixed row depth so workers can claim prefixes.
std::vector<std::vector<std::uint32_t>> prefixes(int n, int workers) {
  std::vector<std::vector<std::uint32_t>> out{{0}};
  const std::size_t target = workers <= 1 ? 1 : static_cast<std::size_t>(workers) * 16;
  for (int depth = 0; depth < n - 1 && out.size() < target; ++depth) {
    std::vector<std::vector<std::uint32_t>> deeper;
    std::vector<std::uint32_t> next;
    for (const auto& prefix : out) {
      next.clear();
      append_successors(n, prefix.back(), next);
      for (auto s : next) {
        auto extended = prefix;
        extended.push_back(s);
        deeper.push_back(std::move(extended));
      }
    }
    out = std::move(deeper);
  }
  return out;
}

}  // namespace

namespace detail {

void select_edges(int n, std::span<const std::uint32_t> masks, Selection& sel) {
  const std::uint32_t cols = low_bits(n);
  const std::uint32_t edges = low_bits(n + 1);
  constexpr std::uint32_t kOdd = 0xAAAAAAAAu;
  for (int r = 0; r <= n; ++r) {
    // Bit c of parity is (r + c) & 1.
    const std::uint32_t parity = (r & 1) ? ~kOdd : kOdd;
    // Vertical edge above (r, c) is selected iff its column sum equals the parity of r + c.
    sel.vertical[r] = ~(masks[r] ^ parity) & cols;
    if (r == n) break;
    // Running row sum before column c is the parity of the changes left of c.
    std::uint32_t x = masks[r] ^ masks[r + 1];
    x ^= x << 1;
    x ^= x << 2;
    x ^= x << 4;
    x ^= x << 8;
    x ^= x << 16;
    const std::uint32_t row_sum = (x << 1) & edges;
    // Horizontal edge left of (r, c) is selected iff the row sum differs from the parity.
    sel.horizontal[r] = (row_sum ^ parity) & edges;
  }
}

std::uint64_t trace_key(int n, const Selection& sel, std::array<int, 2 * kMaxGrid + 1>& partner) {
  const int points = 2 * n;
  std::fill(partner.begin(), partner.begin() + points + 1, 0);
  std::uint64_t key = 0;
  for (int label = 1; label <= points; ++label) {
    if (partner[label] != 0) continue;
    const Stub start = labelled_stub(n, label);
    int r = 0;
    int c = 0;
    Side from = start.side;  // edge through which the current vertex was entered
    switch (start.side) {
      case Side::Top:
        r = 0, c = start.index;
        if (!((sel.vertical[0] >> c) & 1U)) throw StructureError("numbered top stub not occupied");
        break;
      case Side::Bottom:
        r = n - 1, c = start.index;
        if (!((sel.vertical[n] >> c) & 1U)) throw StructureError("numbered bottom stub not occupied");
        break;
      case Side::Left:
        r = start.index, c = 0;
        if (!(sel.horizontal[r] & 1U)) throw StructureError("numbered left stub not occupied");
        break;
      case Side::Right:
        r = start.index, c = n - 1;
        if (!((sel.horizontal[r] >> n) & 1U)) throw StructureError("numbered right stub not occupied");
        break;
    }
    int end = 0;
    for (int steps = 0; end == 0; ++steps) {
      if (steps > n * n) throw StructureError("path tracing revisited an edge");
      const bool up = (sel.vertical[r] >> c) & 1U;
      const bool down = (sel.vertical[r + 1] >> c) & 1U;
      const bool left = (sel.horizontal[r] >> c) & 1U;
      const bool right = (sel.horizontal[r] >> (c + 1)) & 1U;
      if (up + down + left + right != 2) throw StructureError("internal vertex without degree 2");
      Side out;
      if (up && from != Side::Top) {
        out = Side::Top;
      } else if (down && from != Side::Bottom) {
        out = Side::Bottom;
      } else if (left && from != Side::Left) {
        out = Side::Left;
      } else if (right && from != Side::Right) {
        out = Side::Right;
      } else {
        throw StructureError("path tracing hit a dead end");
      }
      switch (out) {
        case Side::Top:
          if (r == 0) end = stub_label(n, {Side::Top, c});
          --r, from = Side::Bottom;
          break;
        case Side::Bottom:
          if (r == n - 1) end = stub_label(n, {Side::Bottom, c});
          ++r, from = Side::Top;
          break;
        case Side::Left:
          if (c == 0) end = stub_label(n, {Side::Left, r});
          --c, from = Side::Right;
          break;
        case Side::Right:
          if (c == n - 1) end = stub_label(n, {Side::Right, r});
          ++c, from = Side::Left;
          break;
      }
      if (end == 0 && (r < 0 || r >= n || c < 0 || c >= n)) {
        throw StructureError("path left the grid through an unnumbered stub");
      }
    }
    if (end == label || partner[end] != 0) throw StructureError("path tracing produced an inconsistent pairing");
    partner[label] = end;
    partner[end] = label;
    key |= std::uint64_t{1} << (std::min(label, end) - 1);
  }
  return key;
}

}  // namespace detail

int stub_label(int n, Stub stub) {
  int t = 0;
  switch (stub.side) {
    case Side::Top: t = stub.index; break;
    case Side::Right: t = n + stub.index; break;
    case Side::Bottom: t = 2 * n + (n - 1 - stub.index); break;
    case Side::Left: t = 3 * n + (n - 1 - stub.index); break;
  }
  return t % 2 == 0 ? t / 2 + 1 : 0;
}

Stub labelled_stub(int n, int label) {
  if (label < 1 || label > 2 * n) throw std::out_of_range("boundary label out of range");
  const int t = 2 * (label - 1);
  if (t < n) return {Side::Top, t};
  if (t < 2 * n) return {Side::Right, t - n};
  if (t < 3 * n) return {Side::Bottom, n - 1 - (t - 2 * n)};
  return {Side::Left, n - 1 - (t - 3 * n)};
}

bool is_alternating_sign_matrix(int n, std::span<const std::int8_t> entries) {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return false;
  for (int line = 0; line < n; ++line) {
    int row_sum = 0;
    int col_sum = 0;
    for (int k = 0; k < n; ++k) {
      const int a = entries[static_cast<std::size_t>(line * n + k)];
      const int b = entries[static_cast<std::size_t>(k * n + line)];
      if (a < -1 || a > 1) return false;
      row_sum += a;
      col_sum += b;
      if (row_sum < 0 || row_sum > 1 || col_sum < 0 || col_sum > 1) return false;
    }
    if (row_sum != 1 || col_sum != 1) return false;
  }
  return true;
}

AsmMatrix::AsmMatrix(int n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxGrid) throw StructureError("matrix size out of range");
  if (!is_alternating_sign_matrix(n, entries_)) throw StructureError("not an alternating-sign matrix");
}

AsmMatrix AsmMatrix::identity(int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k * n + k)] = 1;
  return AsmMatrix(n, std::move(e));
}

std::string fpl_violation(int n, std::span<const std::uint32_t> horizontal,
                          std::span<const std::uint32_t> vertical) {
  if (n < 1 || n > kMaxGrid) return "grid size out of range";
  if (horizontal.size() != static_cast<std::size_t>(n) || vertical.size() != static_cast<std::size_t>(n) + 1) {
    return "edge arrays have the wrong number of rows";
  }
  for (int r = 0; r < n; ++r) {
    if (horizontal[r] & ~low_bits(n + 1)) return "horizontal row " + std::to_string(r) + " has bits beyond the grid";
  }
  for (int r = 0; r <= n; ++r) {
    if (vertical[r] & ~low_bits(n)) return "vertical row " + std::to_string(r) + " has bits beyond the grid";
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int degree = static_cast<int>(((vertical[r] >> c) & 1U) + ((vertical[r + 1] >> c) & 1U) +
                                          ((horizontal[r] >> c) & 1U) + ((horizontal[r] >> (c + 1)) & 1U));
      if (degree != 2) {
        return "internal vertex (" + std::to_string(r) + "," + std::to_string(c) + ") has degree " +
               std::to_string(degree);
      }
    }
  }
  auto check_stub = [&](Stub s, bool occupied) -> std::string {
    const bool numbered = stub_label(n, s) != 0;
    if (numbered && !occupied) return "numbered external vertex " + std::to_string(stub_label(n, s)) + " is free";
    if (!numbered && occupied) return "unnumbered external vertex is occupied";
    return {};
  };
  for (int k = 0; k < n; ++k) {
    for (auto msg : {check_stub({Side::Top, k}, (vertical[0] >> k) & 1U),
                     check_stub({Side::Bottom, k}, (vertical[n] >> k) & 1U),
                     check_stub({Side::Left, k}, horizontal[k] & 1U),
                     check_stub({Side::Right, k}, (horizontal[k] >> n) & 1U)}) {
      if (!msg.empty()) return msg;
    }
  }
  return {};
}

FplState::FplState(int n, std::vector<std::uint32_t> horizontal, std::vector<std::uint32_t> vertical)
    : n_(n), horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
  if (auto why = fpl_violation(n_, horizontal_, vertical_); !why.empty()) {
    throw StructureError("invalid FPL state: " + why);
  }
}

FplState asm_to_state(const AsmMatrix& matrix) {
  return state_from_masks(matrix.size(), masks_of(matrix));
}

AsmMatrix state_to_asm(const FplState& state) {
  const int n = state.size();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c < n; ++c) {
      const bool parity = ((r + c) & 1) != 0;
      const bool sum = state.has_vertical(r, c) ? parity : !parity;
      if (sum) masks[r] |= std::uint32_t{1} << c;
    }
  }
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      entries[static_cast<std::size_t>(r * n + c)] =
          static_cast<std::int8_t>(static_cast<int>((masks[r + 1] >> c) & 1U) - static_cast<int>((masks[r] >> c) & 1U));
    }
  }
  if (!is_alternating_sign_matrix(n, entries)) throw StructureError("state does not map to an alternating-sign matrix");
  AsmMatrix result(n, std::move(entries));
  // Horizontal edges are determined by the vertical ones; reject states where they disagree.
  if (!(asm_to_state(result) == state)) throw StructureError("state edges are inconsistent with its column sums");
  return result;
}

LinkPattern link_pattern_of(const FplState& state) {
  const int n = state.size();
  detail::Selection sel;
  std::copy(state.horizontal_rows().begin(), state.horizontal_rows().end(), sel.horizontal.begin());
  std::copy(state.vertical_rows().begin(), state.vertical_rows().end(), sel.vertical.begin());
  std::array<int, 2 * kMaxGrid + 1> partner{};
  detail::trace_key(n, sel, partner);
  std::vector<int> match(partner.begin() + 1, partner.begin() + 2 * n + 1);
  if (!is_noncrossing_matching(match)) throw StructureError("traced pairing is crossing");
  return LinkPattern::from_match(match);
}

mpz_class asm_count(int n) {
  if (n < 0) throw std::invalid_argument("asm_count needs n >= 0");
  mpz_class num = 1;
  mpz_class den = 1;
  mpz_class f;
  for (int k = 0; k < n; ++k) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(3 * k + 1));
    num *= f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n + k));
    den *= f;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

void for_each_state(int n, const std::function<void(const FplState&)>& visit, const EnumerationOptions& options) {
  check_grid(n, options.capacity);
  MaskWalker walker(n);
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(n) + 1, 0);
  walker.walk(masks, 0, [&](std::span<const std::uint32_t> m) { visit(state_from_masks(n, m)); });
}

std::vector<FplState> enumerate_states(int n, const EnumerationOptions& options) {
  std::vector<FplState> out;
  for_each_state(n, [&](const FplState& s) { out.push_back(s); }, options);
  return out;
}

std::uint64_t PatternHistogram::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

PatternHistogram histogram(int n, const EnumerationOptions& options) {
  check_grid(n, options.capacity);
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (n > kMaxRankedArcs) throw CapacityError("pattern ranks do not fit for this grid size");

  std::unordered_map<std::uint64_t, Rank> rank_of_key;
  const auto patterns = enumerate_patterns(n);
  rank_of_key.reserve(patterns.size());
  for (Rank r = 0; r < patterns.size(); ++r) rank_of_key.emplace(patterns[r].key(), r);

  const auto work = prefixes(n, options.workers);
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(work.size())));
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                  std::vector<std::uint64_t>(patterns.size(), 0));
  std::atomic<std::size_t> cursor{0};

  auto run = [&](std::vector<std::uint64_t>& counts) {
    MaskWalker walker(n);
    detail::Selection sel;
    std::array<int, 2 * kMaxGrid + 1> partner{};
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(n) + 1, 0);
    auto leaf = [&](std::span<const std::uint32_t> m) {
      detail::select_edges(n, m, sel);
      const auto key = detail::trace_key(n, sel, partner);
      const auto it = rank_of_key.find(key);
      if (it == rank_of_key.end()) throw StructureError("traced pairing is not a noncrossing pattern");
      ++counts[it->second];
    };
    for (std::size_t item = cursor++; item < work.size(); item = cursor++) {
      const auto& prefix = work[item];
      std::copy(prefix.begin(), prefix.end(), masks.begin());
      walker.walk(masks, static_cast<int>(prefix.size()) - 1, leaf);
    }
  };

  if (workers == 1) {
    run(partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(partial[static_cast<std::size_t>(w)]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  PatternHistogram result{n, std::vector<std::uint64_t>(patterns.size(), 0)};
  for (const auto& counts : partial) {
    for (std::size_t r = 0; r < counts.size(); ++r) result.counts[r] += counts[r];
  }
  return result;
}

}  // namespace fplink
