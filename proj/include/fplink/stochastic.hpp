#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "fplink/fpl.hpp"
#include "fplink/patterns.hpp"
#include "fplink/spectra.hpp"

namespace fplink {

/// Probability law over the pattern basis, indexed by rank.
struct PatternDistribution {
  int n = 0;
  std::vector<mpq_class> probabilities;

  std::vector<double> as_double() const;
};

/// A_n(pi) / A_n for every pattern.
PatternDistribution stationary_law(const PatternHistogram& hist);
/// The same law from a positive eigenvector.
PatternDistribution stationary_law(int n, const BigIntVector& weights);

/// Player A wins when the state's own pattern is the target: A_n(target) / A_n.
mpq_class player_a_probability(const PatternHistogram& hist, const LinkPattern& target);

/// Player B applies a uniformly chosen h_i to the state's pattern first.
mpq_class player_b_probability(const PatternHistogram& hist, const LinkPattern& target);

/// One nonzero term of player B's sum: a source pattern and the operators sending it to the target.
struct PlayerBTerm {
  Rank source;
  std::vector<int> operators;
  mpq_class probability;  // (A_n(source)/A_n) * (|operators| / 2n)
};

std::vector<PlayerBTerm> player_b_terms(const PatternHistogram& hist, const LinkPattern& target);

/*
 * Deterministic random source for the chain. Draws come from std::mt19937_64,
 * whose output sequence is fixed by the standard, and are reduced to a range
 * by rejection so results do not depend on the library's distributions.
 */
class ChainRng {
 public:
  explicit ChainRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Applies h_i with i uniform on 1..2n.
LinkPattern chain_step(const LinkPattern& pattern, ChainRng& rng);

/// Exact check that law is invariant under the transition matrix H / 2n.
bool is_stationary(const SparseIntMatrix& h, int n, const PatternDistribution& law);

struct ChainStructure {
  bool strongly_connected = false;
  bool self_loop_everywhere = false;
};

/// Irreducibility (BFS both ways from rank 0) and aperiodicity (a fixed point of some h_i at every pattern).
ChainStructure analyze_chain(int n);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

/// Three times the binomial standard error of the total-variation estimate: 1.5 * sum_pi sqrt(p (1-p) / N).
double tv_tolerance(const std::vector<double>& law, std::uint64_t samples);

struct SamplerOptions {
  std::uint64_t burn_in = 1000;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  /// Independent chains with seeds seed, seed+1, ...; samples are split between them.
  int chains = 1;
};

struct SamplerReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> empirical;  // visit counts by rank
  std::optional<double> tv_distance;
  std::optional<double> tolerance;
  std::optional<bool> pass;

  PatternDistribution empirical_distribution() const;
};

/// Runs the chain from rank 0, recording one sample per step after burn-in.
SamplerReport sample_stationary(int n, const SamplerOptions& options,
                                const std::optional<PatternDistribution>& exact = std::nullopt);

}  // namespace fplink
