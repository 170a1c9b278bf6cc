#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "fplink/patterns.hpp"

namespace fplink {

/// Default ceiling on the grid size accepted by the enumerator.
inline constexpr int kDefaultFplCapacity = 9;

/// Hard ceiling: row bitmasks hold n+1 bits.
inline constexpr int kMaxGrid = 30;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a state, matrix or traced path violates its structural invariants.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Side of the grid an external vertex sits on.
enum class Side { Top, Right, Bottom, Left };

/// An external (degree-1) vertex: the stub beyond boundary vertex `index` on `side`.
struct Stub {
  Side side;
  int index;  // column for Top/Bottom, row for Left/Right (0-based)
  friend bool operator==(const Stub&, const Stub&) = default;
};

/// Boundary label 1..2n of a stub, or 0 when the stub is unnumbered.
int stub_label(int n, Stub stub);

/// Stub carrying boundary label 1..2n.
Stub labelled_stub(int n, int label);

class AsmMatrix {
 public:
  /// Validates row-major entries of an n x n alternating-sign matrix.
  AsmMatrix(int n, std::vector<std::int8_t> entries);

  static AsmMatrix identity(int n);

  int size() const { return n_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  std::span<const std::int8_t> entries() const { return entries_; }

  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  int n_;
  std::vector<std::int8_t> entries_;
};

/// True when the row-major entries form an alternating-sign matrix.
bool is_alternating_sign_matrix(int n, std::span<const std::int8_t> entries);

/*
 * A fully packed loop configuration on the n x n grid.
 *
 * Internal vertices are (r, c) with r, c in 0..n-1, row 0 on top. Edge sets
 * are stored per row as bitmasks:
 *   horizontal(r) bit c, c in 0..n : edge on the left of (r, c); c = 0 is the
 *                                    left stub and c = n the right stub.
 *   vertical(r)   bit c, r in 0..n : edge above (r, c); r = 0 is the top stub
 *                                    and r = n the bottom stub.
 */
class FplState {
 public:
  /// Validates degree and boundary-occupancy constraints.
  FplState(int n, std::vector<std::uint32_t> horizontal, std::vector<std::uint32_t> vertical);

  int size() const { return n_; }
  std::uint32_t horizontal(int row) const { return horizontal_[static_cast<std::size_t>(row)]; }
  std::uint32_t vertical(int row) const { return vertical_[static_cast<std::size_t>(row)]; }
  std::span<const std::uint32_t> horizontal_rows() const { return horizontal_; }
  std::span<const std::uint32_t> vertical_rows() const { return vertical_; }

  bool has_horizontal(int row, int col) const { return (horizontal(row) >> col) & 1U; }
  bool has_vertical(int row, int col) const { return (vertical(row) >> col) & 1U; }

  friend bool operator==(const FplState&, const FplState&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> horizontal_;
  std::vector<std::uint32_t> vertical_;
};

/// Empty string when the edge sets satisfy every FPL constraint, else a description.
std::string fpl_violation(int n, std::span<const std::uint32_t> horizontal,
                          std::span<const std::uint32_t> vertical);

FplState asm_to_state(const AsmMatrix& matrix);
AsmMatrix state_to_asm(const FplState& state);

/// Boundary pairing induced by the paths of the state.
LinkPattern link_pattern_of(const FplState& state);

/// Number of n x n alternating-sign matrices, prod_{k<n} (3k+1)!/(n+k)!.
mpz_class asm_count(int n);

struct EnumerationOptions {
  int workers = 1;
  int capacity = kDefaultFplCapacity;
};

/// Visits every FPL state of size n exactly once, in a fixed order.
void for_each_state(int n, const std::function<void(const FplState&)>& visit,
                    const EnumerationOptions& options = {});

/// All states of size n; intended for small n.
std::vector<FplState> enumerate_states(int n, const EnumerationOptions& options = {});

/// Counts A_n(pi) indexed by the canonical pattern rank.
struct PatternHistogram {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t at(const LinkPattern& pattern) const { return counts.at(rank(pattern)); }
  friend bool operator==(const PatternHistogram&, const PatternHistogram&) = default;
};

/// Enumerates all states and tallies them by link-pattern.
PatternHistogram histogram(int n, const EnumerationOptions& options = {});

}  // namespace fplink
