#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fplink/fpl.hpp"
#include "fplink/patterns.hpp"

namespace fplink {

/// Default ceiling on Catalan(n) for Hamiltonian construction.
inline constexpr Rank kDefaultDimensionCeiling = 5000;

struct MatrixEntry {
  Rank row;
  Rank col;
  std::uint32_t value;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Nonnegative integer matrix stored as (row, col, value) triples sorted by row then column.
class SparseIntMatrix {
 public:
  SparseIntMatrix(Rank dim, std::vector<MatrixEntry> entries);

  Rank dim() const { return dim_; }
  std::span<const MatrixEntry> entries() const { return entries_; }
  std::uint32_t at(Rank row, Rank col) const;

  std::vector<std::uint64_t> column_sums() const;
  std::vector<std::uint32_t> diagonal() const;

  /// Exact product with an integer vector.
  std::vector<mpz_class> multiply(std::span<const mpz_class> x) const;
  std::vector<double> multiply(std::span<const double> x) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  Rank dim_;
  std::vector<MatrixEntry> entries_;
};

using BigIntVector = std::vector<mpz_class>;

struct HamiltonianOptions {
  int workers = 1;
  Rank dimension_ceiling = kDefaultDimensionCeiling;
};

/// H = sum_i h_i on the pattern basis: entry (pi, pi') counts the i with h_i(pi') = pi.
SparseIntMatrix build_hamiltonian(int n, const HamiltonianOptions& options = {});

/// Permutation of ranks induced by a pattern map: result[r] = rank(map(unrank(n, r))).
std::vector<Rank> rank_permutation(int n, LinkPattern (*map)(const LinkPattern&));

/// True when H P = P H for the permutation matrix of `perm`.
bool commutes_with_permutation(const SparseIntMatrix& h, std::span<const Rank> perm);

/// Outcome of an exact null-space computation.
struct KernelResult {
  std::size_t nullity = 0;
  /// Primitive integer generator with a positive leading nonzero, present when nullity == 1.
  std::optional<BigIntVector> generator;
};

/// Null space of a dense integer matrix (row-major) by fraction-free elimination.
KernelResult bareiss_kernel(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

/// Null space of H - shift*I modulo a prime, lifted to the integers by CRT and
/// rational reconstruction; the lifted generator is verified exactly.
KernelResult multimodular_kernel(const SparseIntMatrix& h, std::uint64_t shift);

enum class KernelMethod { Automatic, Bareiss, Multimodular };

struct PowerIterationResult {
  bool converged = false;
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
  std::vector<double> vector;  // normalized to unit sum
};

/// Dominant eigenpair of a nonnegative matrix by power iteration with a Rayleigh estimate.
PowerIterationResult power_iteration(const SparseIntMatrix& h, double expected, double tolerance = 1e-9,
                                     std::size_t max_iterations = 100000);

struct PerronOptions {
  KernelMethod method = KernelMethod::Automatic;
  /// Largest dimension handled by dense Bareiss under KernelMethod::Automatic.
  Rank bareiss_limit = 500;
  bool power_check = true;
};

struct PerronResult {
  bool ok = false;  // nullity 1 and all components positive
  std::size_t nullity = 0;
  BigIntVector vector;  // positive, coprime when ok
  std::string failure;
  KernelMethod method = KernelMethod::Automatic;
  std::optional<PowerIterationResult> power;
  /// Largest |power - exact| after normalizing both to unit sum.
  double power_deviation = 0.0;
};

/// Exact kernel of H - 2n I, scaled to positive coprime integers.
PerronResult perron_vector(const SparseIntMatrix& h, int n, const PerronOptions& options = {});

struct SpectralRadiusCheck {
  bool column_sums_ok = false;
  bool power_ok = false;
  double estimate = 0.0;
  double relative_error = 0.0;
  bool pass() const { return column_sums_ok && power_ok; }
};

/// Every column sums to 2n, and the power-iteration estimate is within 1e-9 relative of 2n.
SpectralRadiusCheck spectral_radius_check(const SparseIntMatrix& h, int n);

/// sum over i and over pi' with h_i(pi') = pi of A_n(pi'), by direct enumeration.
std::uint64_t preimage_sum(const PatternHistogram& hist, const LinkPattern& target);

struct CheckResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  EnumerationOptions enumeration{};
  HamiltonianOptions hamiltonian{};
  PerronOptions perron{};
};

/// Compares the Perron vector with the enumeration histogram and runs the companion identities.
VerificationReport verify_conjecture(int n, const VerifyOptions& options = {});
VerificationReport verify_conjecture(const PatternHistogram& hist, const SparseIntMatrix& h,
                                     const PerronResult& perron);

}  // namespace fplink
