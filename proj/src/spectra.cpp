#include "fplink/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fplink {

SparseIntMatrix::SparseIntMatrix(Rank dim, std::vector<MatrixEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    if (e.row >= dim_ || e.col >= dim_) throw StructureError("matrix entry outside the dimension");
    if (e.value == 0) throw StructureError("explicit zero entry in sparse matrix");
    if (k > 0 && entries_[k - 1].row == e.row && entries_[k - 1].col == e.col) {
      throw StructureError("duplicate matrix entry");
    }
  }
}

std::uint32_t SparseIntMatrix::at(Rank row, Rank col) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                                   [](const MatrixEntry& e, const std::pair<Rank, Rank>& key) {
                                     return e.row != key.first ? e.row < key.first : e.col < key.second;
                                   });
  return it != entries_.end() && it->row == row && it->col == col ? it->value : 0;
}

std::vector<std::uint64_t> SparseIntMatrix::column_sums() const {
  std::vector<std::uint64_t> sums(dim_, 0);
  for (const auto& e : entries_) sums[e.col] += e.value;
  return sums;
}

std::vector<std::uint32_t> SparseIntMatrix::diagonal() const {
  std::vector<std::uint32_t> d(dim_, 0);
  for (const auto& e : entries_) {
    if (e.row == e.col) d[e.row] = e.value;
  }
  return d;
}

std::vector<mpz_class> SparseIntMatrix::multiply(std::span<const mpz_class> x) const {
  if (x.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<mpz_class> y(dim_, 0);
  for (const auto& e : entries_) {
    mpz_addmul_ui(y[e.row].get_mpz_t(), x[e.col].get_mpz_t(), e.value);
  }
  return y;
}

std::vector<double> SparseIntMatrix::multiply(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<double> y(dim_, 0.0);
  for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
  return y;
}

SparseIntMatrix build_hamiltonian(int n, const HamiltonianOptions& options) {
  if (n < 1) throw CapacityError("number of arcs must be positive");
  if (n > kMaxRankedArcs) throw CapacityError("Catalan(" + std::to_string(n) + ") overflows the rank width");
  const Rank dim = pattern_count(n);
  if (dim > options.dimension_ceiling) {
    throw CapacityError("Hamiltonian dimension " + std::to_string(dim) + " exceeds the ceiling " +
                        std::to_string(options.dimension_ceiling));
  }
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");

  // Column c holds the images of unrank(c) under h_1..h_2n.
  std::vector<std::vector<MatrixEntry>> columns(dim);
  auto fill = [&](Rank first, Rank step) {
    for (Rank c = first; c < dim; c += step) {
      const auto source = unrank(n, c);
      std::vector<Rank> images;
      images.reserve(2 * static_cast<std::size_t>(n));
      for (int i = 1; i <= 2 * n; ++i) images.push_back(rank(apply_h(i, source)));
      std::sort(images.begin(), images.end());
      for (std::size_t k = 0; k < images.size();) {
        std::size_t end = k;
        while (end < images.size() && images[end] == images[k]) ++end;
        columns[c].push_back({images[k], c, static_cast<std::uint32_t>(end - k)});
        k = end;
      }
    }
  };
  const auto workers = static_cast<Rank>(std::min<std::uint64_t>(options.workers, dim));
  if (workers <= 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (Rank w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
    for (auto& t : pool) t.join();
  }
  std::vector<MatrixEntry> entries;
  for (auto& col : columns) entries.insert(entries.end(), col.begin(), col.end());
  return SparseIntMatrix(dim, std::move(entries));
}

std::vector<Rank> rank_permutation(int n, LinkPattern (*map)(const LinkPattern&)) {
  const Rank dim = pattern_count(n);
  std::vector<Rank> perm(dim);
  for (Rank r = 0; r < dim; ++r) perm[r] = rank(map(unrank(n, r)));
  return perm;
}

bool commutes_with_permutation(const SparseIntMatrix& h, std::span<const Rank> perm) {
  if (perm.size() != h.dim()) return false;
  // (P H P^T)[perm[r], perm[c]] = H[r, c]; commuting means this equals H.
  for (const auto& e : h.entries()) {
    if (h.at(perm[e.row], perm[e.col]) != e.value) return false;
  }
  return true;
}

namespace {

void make_primitive(BigIntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  const auto lead = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Integer vector proportional to the rationals q.
BigIntVector clear_denominators(const std::vector<mpq_class>& q) {
  mpz_class l = 1;
  for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  BigIntVector v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class t = l / q[i].get_den();
    v[i] = q[i].get_num() * t;
  }
  make_primitive(v);
  return v;
}

bool in_kernel(const SparseIntMatrix& h, std::uint64_t shift, const BigIntVector& v) {
  const auto hv = h.multiply(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class expected = v[i];
    expected *= static_cast<unsigned long>(shift);
    if (hv[i] != expected) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p)) {
    if (e & 1) r = mul_mod(r, a, p);
  }
  return r;
}

struct ModularKernel {
  std::size_t nullity = 0;
  std::vector<std::uint64_t> vector;  // scaled so that coordinate 0 is 1; empty if unusable
};

// Row echelon form of the dense residue matrix; returns the kernel when nullity is 1.
ModularKernel modular_kernel(const SparseIntMatrix& h, std::uint64_t shift, std::uint64_t p) {
  const std::size_t dim = h.dim();
  std::vector<std::uint64_t> m(dim * dim, 0);
  for (const auto& e : h.entries()) m[e.row * dim + e.col] = e.value % p;
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = (m[i * dim + i] + p - shift % p) % p;

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < dim; ++c) {
    std::size_t piv = row;
    while (piv < dim && m[piv * dim + c] == 0) ++piv;
    if (piv == dim) continue;
    if (piv != row) std::swap_ranges(m.begin() + piv * dim, m.begin() + (piv + 1) * dim, m.begin() + row * dim);
    const std::uint64_t inv = pow_mod(m[row * dim + c], p - 2, p);
    for (std::size_t j = c; j < dim; ++j) m[row * dim + j] = mul_mod(m[row * dim + j], inv, p);
    const std::uint64_t* pr = &m[row * dim];
    for (std::size_t i = row + 1; i < dim; ++i) {
      std::uint64_t* ri = &m[i * dim];
      const std::uint64_t f = ri[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < dim; ++j) {
        if (pr[j] != 0) ri[j] = (ri[j] + mul_mod(neg, pr[j], p)) % p;
      }
    }
    pivot_cols.push_back(c);
    ++row;
  }
  ModularKernel out;
  out.nullity = dim - pivot_cols.size();
  if (out.nullity != 1) return out;

  std::size_t free_col = dim - 1;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    if (pivot_cols[k] != k) {
      free_col = k;
      break;
    }
  }
  std::vector<std::uint64_t> x(dim, 0);
  x[free_col] = 1;
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    std::uint64_t s = 0;
    for (std::size_t j = pc + 1; j < dim; ++j) {
      if (m[k * dim + j] != 0 && x[j] != 0) s = (s + mul_mod(m[k * dim + j], x[j], p)) % p;
    }
    x[pc] = (p - s) % p;
  }
  if (x[0] == 0) return out;
  const std::uint64_t inv = pow_mod(x[0], p - 2, p);
  for (auto& v : x) v = mul_mod(v, inv, p);
  out.vector = std::move(x);
  return out;
}

// Rational r/s == a (mod m) with |r|, s <= sqrt(m/2), if one exists.
std::optional<mpq_class> reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace

KernelResult bareiss_kernel(std::size_t rows, std::size_t cols, std::vector<mpz_class> m) {
  if (m.size() != rows * cols) throw std::invalid_argument("matrix entries do not match the shape");
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * cols + j]; };
  mpz_class prev = 1;
  mpz_class tmp;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const mpz_class& pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = at(i, j);
        // x = (pivot * x - lead * M[r][j]) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), x.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), at(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++r;
  }

  KernelResult out;
  out.nullity = cols - pivot_cols.size();
  if (out.nullity != 1) return out;

  std::size_t free_col = cols - 1;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    if (pivot_cols[k] != k) {
      free_col = k;
      break;
    }
  }
  std::vector<mpq_class> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    mpq_class s = 0;
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (at(k, j) != 0 && x[j] != 0) s += mpq_class(at(k, j)) * x[j];
    }
    x[pc] = -s / mpq_class(at(k, pc));
  }
  out.generator = clear_denominators(x);
  return out;
}

KernelResult multimodular_kernel(const SparseIntMatrix& h, std::uint64_t shift) {
  constexpr int kMaxPrimes = 64;
  KernelResult out;
  out.nullity = h.dim();
  mpz_class modulus = 1;
  std::vector<mpz_class> residues(h.dim(), 0);
  mpz_class prime = (mpz_class(1) << 62);
  int lifted = 0;
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    mpz_class next;
    mpz_nextprime(next.get_mpz_t(), prime.get_mpz_t());
    prime = next;
    const std::uint64_t p = prime.get_ui();
    const auto mk = modular_kernel(h, shift, p);
    // The nullity modulo p bounds the rational nullity from above.
    out.nullity = std::min(out.nullity, mk.nullity);
    if (mk.nullity != 1 || mk.vector.empty()) {
      if (attempt >= 3 && lifted == 0) break;
      continue;
    }
    // CRT: combine residues mod `modulus` with residues mod p.
    const mpz_class inv_mod_p = [&] {
      mpz_class inv;
      mpz_class mm = modulus % prime;
      mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), prime.get_mpz_t());
      return inv;
    }();
    for (std::size_t i = 0; i < residues.size(); ++i) {
      mpz_class delta = (mpz_class(static_cast<unsigned long>(mk.vector[i])) - residues[i]) % prime;
      if (delta < 0) delta += prime;
      delta = delta * inv_mod_p % prime;
      residues[i] += modulus * delta;
    }
    modulus *= prime;
    ++lifted;

    std::vector<mpq_class> q;
    q.reserve(residues.size());
    for (const auto& a : residues) {
      auto r = reconstruct(a, modulus);
      if (!r) break;
      q.push_back(*r);
    }
    if (q.size() != residues.size()) continue;
    auto v = clear_denominators(q);
    if (in_kernel(h, shift, v)) {
      out.nullity = 1;
      out.generator = std::move(v);
      return out;
    }
  }
  return out;
}

PowerIterationResult power_iteration(const SparseIntMatrix& h, double expected, double tolerance,
                                     std::size_t max_iterations) {
  const std::size_t dim = h.dim();
  PowerIterationResult out;
  std::vector<double> x(dim, 1.0 / static_cast<double>(dim));
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    auto y = h.multiply(std::span<const double>(x));
    const double xy = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    out.eigenvalue = xy / xx;
    const double total = std::accumulate(y.begin(), y.end(), 0.0);
    double change = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] /= total;
      change = std::max(change, std::abs(y[i] - x[i]));
      scale = std::max(scale, y[i]);
    }
    x = std::move(y);
    out.iterations = it;
    if (change <= 1e-3 * tolerance * scale && std::abs(out.eigenvalue - expected) <= tolerance * expected) {
      out.converged = true;
      break;
    }
  }
  out.vector = std::move(x);
  return out;
}

PerronResult perron_vector(const SparseIntMatrix& h, int n, const PerronOptions& options) {
  const std::uint64_t shift = 2 * static_cast<std::uint64_t>(n);
  PerronResult out;
  out.method = options.method;
  if (out.method == KernelMethod::Automatic) {
    out.method = h.dim() <= options.bareiss_limit ? KernelMethod::Bareiss : KernelMethod::Multimodular;
  }

  KernelResult kernel;
  if (out.method == KernelMethod::Bareiss) {
    const std::size_t dim = h.dim();
    std::vector<mpz_class> dense(dim * dim, 0);
    for (const auto& e : h.entries()) dense[e.row * dim + e.col] = e.value;
    for (std::size_t i = 0; i < dim; ++i) dense[i * dim + i] -= static_cast<unsigned long>(shift);
    kernel = bareiss_kernel(dim, dim, std::move(dense));
  } else {
    kernel = multimodular_kernel(h, shift);
  }
  out.nullity = kernel.nullity;

  if (kernel.nullity == 1 && !kernel.generator) {
    out.failure = "kernel generator could not be lifted to the integers";
  } else if (kernel.nullity != 1) {
    out.failure = "eigenvalue " + std::to_string(shift) + " has kernel dimension " + std::to_string(kernel.nullity);
  } else {
    out.vector = std::move(*kernel.generator);
    const auto bad = std::find_if(out.vector.begin(), out.vector.end(), [](const mpz_class& x) { return x <= 0; });
    if (bad != out.vector.end()) {
      out.failure = "non-positive component at rank " + std::to_string(bad - out.vector.begin());
    } else {
      out.ok = true;
    }
  }

  if (options.power_check) {
    out.power = power_iteration(h, static_cast<double>(shift));
    if (out.ok) {
      mpz_class sum = std::accumulate(out.vector.begin(), out.vector.end(), mpz_class(0));
      const double total = sum.get_d();
      for (std::size_t i = 0; i < out.vector.size(); ++i) {
        out.power_deviation = std::max(out.power_deviation, std::abs(out.vector[i].get_d() / total - out.power->vector[i]));
      }
    }
  }
  return out;
}

SpectralRadiusCheck spectral_radius_check(const SparseIntMatrix& h, int n) {
  const std::uint64_t expected = 2 * static_cast<std::uint64_t>(n);
  SpectralRadiusCheck out;
  const auto sums = h.column_sums();
  out.column_sums_ok = std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) { return s == expected; });
  const auto power = power_iteration(h, static_cast<double>(expected));
  out.estimate = power.eigenvalue;
  out.relative_error = std::abs(power.eigenvalue - static_cast<double>(expected)) / static_cast<double>(expected);
  out.power_ok = power.converged && out.relative_error <= 1e-9;
  return out;
}

std::uint64_t preimage_sum(const PatternHistogram& hist, const LinkPattern& target) {
  if (hist.n != target.arcs()) throw std::invalid_argument("histogram and pattern sizes differ");
  const auto patterns = enumerate_patterns(hist.n);
  if (hist.counts.size() != patterns.size()) throw std::invalid_argument("histogram is incomplete");
  std::uint64_t sum = 0;
  for (Rank r = 0; r < patterns.size(); ++r) {
    for (int i = 1; i <= 2 * hist.n; ++i) {
      if (apply_h(i, patterns[r]) == target) sum += hist.counts[r];
    }
  }
  return sum;
}

bool VerificationReport::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_conjecture(const PatternHistogram& hist, const SparseIntMatrix& h, const PerronResult& perron) {
  const int n = hist.n;
  const Rank dim = pattern_count(n);
  if (hist.counts.size() != dim || h.dim() != dim) throw std::invalid_argument("inputs disagree on the basis size");
  const auto patterns = enumerate_patterns(n);
  const mpz_class total = asm_count(n);
  const mpz_class previous = asm_count(n - 1);

  VerificationReport report{n, {}};
  auto add = [&](std::string name, bool pass, std::string details) {
    report.checks.push_back({std::move(name), n, pass, std::move(details)});
  };
  auto describe = [&](Rank r) { return "rank " + std::to_string(r) + " [" + patterns[r].to_string() + "]"; };

  add("kernel_one_dimensional", perron.nullity == 1, "nullity " + std::to_string(perron.nullity));
  add("perron_positive", perron.ok, perron.ok ? "all components positive" : perron.failure);

  {
    std::string details = "components equal counts at all " + std::to_string(dim) + " ranks";
    bool pass = perron.ok && perron.vector.size() == dim;
    if (!pass) details = "no Perron vector";
    for (Rank r = 0; pass && r < dim; ++r) {
      if (perron.vector[r] != mpz_class(static_cast<unsigned long>(hist.counts[r]))) {
        pass = false;
        details = "first mismatch at " + describe(r) + ": vector " + perron.vector[r].get_str() + ", count " +
                  std::to_string(hist.counts[r]);
      }
    }
    add("perron_equals_histogram", pass, details);
  }

  {
    const mpz_class counted(std::to_string(hist.total()));
    add("histogram_total_equals_asm_count", counted == total,
        "enumerated " + counted.get_str() + ", product formula " + total.get_str());
  }

  if (perron.ok) {
    const mpz_class sum = std::accumulate(perron.vector.begin(), perron.vector.end(), mpz_class(0));
    const mpz_class max = *std::max_element(perron.vector.begin(), perron.vector.end());
    add("component_sum_equals_asm_count", sum == total, "sum " + sum.get_str() + ", A_n " + total.get_str());
    add("max_component_equals_previous_asm_count", max == previous,
        "max " + max.get_str() + ", A_{n-1} " + previous.get_str());
  } else {
    add("component_sum_equals_asm_count", false, "no Perron vector");
    add("max_component_equals_previous_asm_count", false, "no Perron vector");
  }

  {
    // All preimage sums at once: column r sends A(r) to each image rank.
    std::vector<std::uint64_t> sums(dim, 0);
    for (Rank r = 0; r < dim; ++r) {
      for (int i = 1; i <= 2 * n; ++i) sums[rank(apply_h(i, patterns[r]))] += hist.counts[r];
    }
    std::string details = "identity holds for all " + std::to_string(dim) + " patterns";
    bool pass = true;
    for (Rank r = 0; pass && r < dim; ++r) {
      if (sums[r] != 2 * static_cast<std::uint64_t>(n) * hist.counts[r]) {
        pass = false;
        details = "fails at " + describe(r) + ": preimage sum " + std::to_string(sums[r]) + ", 2n*A " +
                  std::to_string(2 * static_cast<std::uint64_t>(n) * hist.counts[r]);
      }
    }
    add("preimage_sum_identity", pass, details);
  }

  {
    const auto rot = rank_permutation(n, rotate);
    const auto refl = rank_permutation(n, reflect);
    std::string details = "counts constant on dihedral orbits";
    bool pass = true;
    for (Rank r = 0; pass && r < dim; ++r) {
      if (hist.counts[rot[r]] != hist.counts[r] || hist.counts[refl[r]] != hist.counts[r]) {
        pass = false;
        details = "orbit mismatch at " + describe(r);
      }
    }
    add("wieland_invariance", pass, details);
    add("hamiltonian_dihedral_symmetry", commutes_with_permutation(h, rot) && commutes_with_permutation(h, refl),
        "H commutes with rotation and reflection permutations");
  }

  {
    const bool realized = std::all_of(hist.counts.begin(), hist.counts.end(), [](std::uint64_t c) { return c > 0; });
    add("all_patterns_realized", realized, realized ? "every pattern occurs" : "some pattern has count 0");
  }

  {
    const auto sums = h.column_sums();
    const bool ok = std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) { return s == 2 * static_cast<std::uint64_t>(n); });
    add("column_sums_equal_2n", ok, ok ? "every column sums to " + std::to_string(2 * n) : "column sum mismatch");
  }

  if (perron.power) {
    const double expected = 2.0 * n;
    const double rel = std::abs(perron.power->eigenvalue - expected) / expected;
    std::ostringstream details;
    details.precision(17);
    details << "estimate " << perron.power->eigenvalue << " after " << perron.power->iterations
            << " iterations, relative error " << rel << ", max deviation from exact vector " << perron.power_deviation;
    add("power_iteration_consistency", perron.power->converged && rel <= 1e-9 && perron.power_deviation <= 1e-6,
        details.str());
  }
  return report;
}

VerificationReport verify_conjecture(int n, const VerifyOptions& options) {
  const auto hist = histogram(n, options.enumeration);
  const auto h = build_hamiltonian(n, options.hamiltonian);
  const auto perron = perron_vector(h, n, options.perron);
  return verify_conjecture(hist, h, perron);
}

}  // namespace fplink
