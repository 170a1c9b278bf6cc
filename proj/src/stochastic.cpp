#include "fplink/stochastic.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace fplink {

namespace {

void require_complete(const PatternHistogram& hist, const LinkPattern& target) {
  if (hist.n != target.arcs()) throw std::invalid_argument("histogram and target sizes differ");
  if (hist.counts.size() != pattern_count(hist.n)) throw std::invalid_argument("histogram is incomplete");
  if (hist.total() == 0) throw std::invalid_argument("histogram is empty");
}

mpq_class ratio(std::uint64_t num, std::uint64_t den) {
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<double> PatternDistribution::as_double() const {
  std::vector<double> out;
  out.reserve(probabilities.size());
  for (const auto& p : probabilities) out.push_back(p.get_d());
  return out;
}

PatternDistribution stationary_law(const PatternHistogram& hist) {
  const auto total = hist.total();
  if (total == 0) throw std::invalid_argument("histogram is empty");
  PatternDistribution law{hist.n, {}};
  for (auto c : hist.counts) law.probabilities.push_back(ratio(c, total));
  return law;
}

PatternDistribution stationary_law(int n, const BigIntVector& weights) {
  const mpz_class total = std::accumulate(weights.begin(), weights.end(), mpz_class(0));
  if (total <= 0) throw std::invalid_argument("weights must have a positive sum");
  PatternDistribution law{n, {}};
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    mpq_class q(w, total);
    q.canonicalize();
    law.probabilities.push_back(q);
  }
  return law;
}

mpq_class player_a_probability(const PatternHistogram& hist, const LinkPattern& target) {
  require_complete(hist, target);
  return ratio(hist.at(target), hist.total());
}

std::vector<PlayerBTerm> player_b_terms(const PatternHistogram& hist, const LinkPattern& target) {
  require_complete(hist, target);
  const int n = hist.n;
  const auto total = hist.total();
  std::vector<PlayerBTerm> terms;
  for (Rank r = 0; r < hist.counts.size(); ++r) {
    const auto source = unrank(n, r);
    std::vector<int> ops;
    for (int i = 1; i <= 2 * n; ++i) {
      if (apply_h(i, source) == target) ops.push_back(i);
    }
    if (ops.empty()) continue;
    mpq_class p = ratio(hist.counts[r], total) * ratio(ops.size(), 2 * static_cast<std::uint64_t>(n));
    terms.push_back({r, std::move(ops), p});
  }
  return terms;
}

mpq_class player_b_probability(const PatternHistogram& hist, const LinkPattern& target) {
  mpq_class sum = 0;
  for (const auto& t : player_b_terms(hist, target)) sum += t.probability;
  return sum;
}

std::uint64_t ChainRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Largest multiple of bound representable; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

LinkPattern chain_step(const LinkPattern& pattern, ChainRng& rng) {
  const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(pattern.points())));
  return apply_h(i, pattern);
}

bool is_stationary(const SparseIntMatrix& h, int n, const PatternDistribution& law) {
  if (law.probabilities.size() != h.dim()) return false;
  std::vector<mpq_class> next(h.dim(), 0);
  for (const auto& e : h.entries()) next[e.row] += law.probabilities[e.col] * e.value;
  const mpq_class scale(2 * n);
  for (Rank r = 0; r < h.dim(); ++r) {
    if (next[r] / scale != law.probabilities[r]) return false;
  }
  return true;
}

ChainStructure analyze_chain(int n) {
  const auto patterns = enumerate_patterns(n);
  const std::size_t dim = patterns.size();
  std::vector<std::vector<Rank>> forward(dim);
  std::vector<std::vector<Rank>> backward(dim);
  ChainStructure out;
  out.self_loop_everywhere = true;
  for (Rank r = 0; r < dim; ++r) {
    if (patterns[r].adjacent_arc_count() == 0) out.self_loop_everywhere = false;
    for (int i = 1; i <= 2 * n; ++i) {
      const Rank s = rank(apply_h(i, patterns[r]));
      forward[r].push_back(s);
      backward[s].push_back(r);
    }
  }
  auto reaches_all = [&](const std::vector<std::vector<Rank>>& adj) {
    std::vector<char> seen(dim, 0);
    std::vector<Rank> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Rank s : adj[queue[head]]) {
        if (!seen[s]) {
          seen[s] = 1;
          queue.push_back(s);
        }
      }
    }
    return queue.size() == dim;
  };
  out.strongly_connected = reaches_all(forward) && reaches_all(backward);
  return out;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions have different supports");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

double tv_tolerance(const std::vector<double>& law, std::uint64_t samples) {
  double se = 0.0;
  for (double p : law) se += std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return 3.0 * 0.5 * se;
}

PatternDistribution SamplerReport::empirical_distribution() const {
  PatternDistribution d{n, {}};
  for (auto c : empirical) d.probabilities.push_back(ratio(c, samples));
  return d;
}

SamplerReport sample_stationary(int n, const SamplerOptions& options, const std::optional<PatternDistribution>& exact) {
  if (options.samples == 0) throw std::invalid_argument("sampler needs at least one sample");
  if (options.chains < 1) throw std::invalid_argument("chain count must be at least 1");
  const Rank dim = pattern_count(n);
  if (exact && exact->probabilities.size() != dim) throw std::invalid_argument("exact law has the wrong size");

  const auto chains = static_cast<std::uint64_t>(options.chains);
  std::vector<std::vector<std::uint64_t>> counts(chains, std::vector<std::uint64_t>(dim, 0));
  auto run = [&](std::uint64_t k) {
    ChainRng rng(options.seed + k);
    const std::uint64_t quota = options.samples / chains + (k < options.samples % chains ? 1 : 0);
    auto state = unrank(n, 0);
    for (std::uint64_t s = 0; s < options.burn_in; ++s) state = chain_step(state, rng);
    for (std::uint64_t s = 0; s < quota; ++s) {
      state = chain_step(state, rng);
      ++counts[k][rank(state)];
    }
  };
  if (chains == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t k = 0; k < chains; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }

  SamplerReport report;
  report.n = n;
  report.seed = options.seed;
  report.burn_in = options.burn_in;
  report.samples = options.samples;
  report.empirical.assign(dim, 0);
  for (const auto& c : counts) {
    for (Rank r = 0; r < dim; ++r) report.empirical[r] += c[r];
  }
  if (exact) {
    const auto law = exact->as_double();
    std::vector<double> freq(dim);
    for (Rank r = 0; r < dim; ++r) freq[r] = static_cast<double>(report.empirical[r]) / static_cast<double>(options.samples);
    report.tv_distance = total_variation(freq, law);
    report.tolerance = tv_tolerance(law, options.samples);
    report.pass = *report.tv_distance <= *report.tolerance;
  }
  return report;
}

}  // namespace fplink
