#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "fplink/fpl.hpp"

namespace fplink::detail {

// Selected edges of one state, in the row layout of FplState.
struct Selection {
  std::array<std::uint32_t, kMaxGrid> horizontal{};
  std::array<std::uint32_t, kMaxGrid + 1> vertical{};
};

// Edge selection for the ASM with column-sum masks masks[0..n].
void select_edges(int n, std::span<const std::uint32_t> masks, Selection& sel);

// Traces every numbered stub to its partner. Fills partner[1..2n] and returns
// the opener bitmask of the pairing (bit i-1 set when i is the smaller end).
std::uint64_t trace_key(int n, const Selection& sel, std::array<int, 2 * kMaxGrid + 1>& partner);

}  // namespace fplink::detail
