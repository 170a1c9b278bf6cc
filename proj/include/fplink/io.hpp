#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fplink/fpl.hpp"
#include "fplink/spectra.hpp"
#include "fplink/stochastic.hpp"

namespace fplink {

/// Version stamped into every exported artifact.
inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Histogram: CSV with '#' metadata lines and columns rank,match_array,count;
// JSON with format_version, n, total, counts (rank -> count) and patterns.
std::string histogram_csv(const PatternHistogram& hist);
std::string histogram_json(const PatternHistogram& hist);
PatternHistogram parse_histogram_csv(std::string_view text);
PatternHistogram parse_histogram_json(std::string_view text);

/// One matrix per block, rows on separate lines, entries space-separated, blocks separated by a blank line.
std::string asm_text(std::span<const AsmMatrix> matrices);

/// First line a JSON header {format_version, n, dim, column_sum}, then "row col value" sorted by row then column.
std::string matrix_text(const SparseIntMatrix& h, int n);
SparseIntMatrix parse_matrix_text(std::string_view text);

std::string vector_json(int n, const BigIntVector& v);
BigIntVector parse_vector_json(std::string_view text);

std::string report_json(const VerificationReport& report);
std::string sampler_json(const SamplerReport& report);

/// Character drawing of a state: 'o' internal vertices, '*' numbered stubs, '.' unnumbered stubs.
std::string render_ascii(const FplState& state);

/// Chord diagram of a pattern on a circle, positions labelled clockwise from the top.
std::string render_svg(const LinkPattern& pattern);

/*
 * On-disk cache: one directory per n under the root, one file per artifact.
 * Each file starts with a line "fplink-cache format_version=V crc32=XXXXXXXX"
 * covering the payload that follows; a mismatch makes load() return nothing.
 */
class ArtifactCache {
 public:
  explicit ArtifactCache(std::filesystem::path root) : root_(std::move(root)) {}

  /// $FPLINK_CACHE_DIR, else $XDG_CACHE_HOME/fplink, else ~/.cache/fplink.
  static std::filesystem::path default_root();

  std::filesystem::path path(int n, std::string_view artifact) const;
  std::optional<std::string> load(int n, std::string_view artifact) const;
  void store(int n, std::string_view artifact, std::string_view payload) const;

 private:
  std::filesystem::path root_;
};

std::uint32_t crc32_of(std::string_view data);

}  // namespace fplink
