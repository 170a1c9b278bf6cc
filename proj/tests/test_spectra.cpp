#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "fplink/spectra.hpp"
#include "oracles.hpp"
#include "reference_n4.hpp"

using namespace fplink;

namespace {

// H assembled from raw match arrays, independent of ranking and LinkPattern.
std::vector<std::vector<int>> oracle_hamiltonian(int n) {
  const auto basis = oracle::noncrossing_matchings(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  std::vector<std::vector<int>> h(basis.size(), std::vector<int>(basis.size(), 0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (int i = 1; i <= 2 * n; ++i) ++h[index.at(oracle::h_raw(i, basis[col]))][col];
  }
  return h;
}

std::vector<std::string> sorted_strings(const BigIntVector& v) {
  std::vector<mpz_class> s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  std::vector<std::string> out;
  for (auto& x : s) out.push_back(x.get_str());
  return out;
}

}  // namespace

TEST_CASE("small Hamiltonians") {
  const auto h1 = build_hamiltonian(1);
  CHECK(h1.dim() == 1);
  CHECK(h1.at(0, 0) == 2);
  const auto h2 = build_hamiltonian(2);
  for (Rank r = 0; r < 2; ++r) {
    for (Rank c = 0; c < 2; ++c) CHECK(h2.at(r, c) == 2);
  }
  CHECK(h2.column_sums() == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("Hamiltonian matches the raw-array construction") {
  for (int n = 1; n <= 6; ++n) {
    const auto expected = oracle_hamiltonian(n);
    const auto h = build_hamiltonian(n);
    for (Rank r = 0; r < h.dim(); ++r) {
      for (Rank c = 0; c < h.dim(); ++c) CHECK(h.at(r, c) == static_cast<std::uint32_t>(expected[r][c]));
    }
  }
}

TEST_CASE("Hamiltonian structure") {
  for (int n = 1; n <= 7; ++n) {
    const auto h = build_hamiltonian(n);
    for (auto s : h.column_sums()) CHECK(s == 2 * static_cast<std::uint64_t>(n));
    const auto diag = h.diagonal();
    for (Rank r = 0; r < h.dim(); ++r) CHECK(diag[r] == static_cast<std::uint32_t>(unrank(n, r).adjacent_arc_count()));
    if (n <= 6) {
      CHECK(commutes_with_permutation(h, rank_permutation(n, rotate)));
      CHECK(commutes_with_permutation(h, rank_permutation(n, reflect)));
    }
  }
  CHECK(build_hamiltonian(6, {.workers = 3}) == build_hamiltonian(6));
  CHECK_THROWS_AS(build_hamiltonian(9, {.dimension_ceiling = 1000}), CapacityError);
  CHECK_THROWS_AS(build_hamiltonian(0), CapacityError);
}

TEST_CASE("n = 4 Hamiltonian equals the reference matrix up to the basis permutation") {
  const auto h = build_hamiltonian(4);
  for (int a = 0; a < 14; ++a) {
    for (int b = 0; b < 14; ++b) {
      CHECK(h.at(reference::kToCanonical[a], reference::kToCanonical[b]) == static_cast<std::uint32_t>(reference::kH[a][b]));
    }
  }
  auto diag = h.diagonal();
  std::sort(diag.begin(), diag.end(), std::greater<>());
  CHECK(diag == std::vector<std::uint32_t>{4, 4, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2});
  for (auto s : h.column_sums()) CHECK(s == 8);

  const auto perron = perron_vector(h, 4);
  REQUIRE(perron.ok);
  for (int a = 0; a < 14; ++a) CHECK(perron.vector[reference::kToCanonical[a]] == reference::kPsi[a]);
}

TEST_CASE("bareiss kernel on small matrices") {
  auto kernel = [](std::size_t rows, std::size_t cols, std::vector<long> e) {
    std::vector<mpz_class> m(e.begin(), e.end());
    return bareiss_kernel(rows, cols, std::move(m));
  };
  auto k1 = kernel(2, 2, {1, 2, 2, 4});
  CHECK(k1.nullity == 1);
  REQUIRE(k1.generator);
  CHECK(*k1.generator == BigIntVector{2, -1});
  CHECK(kernel(2, 2, {1, 2, 3, 4}).nullity == 0);
  CHECK(kernel(2, 2, {0, 0, 0, 0}).nullity == 2);
  auto k3 = kernel(2, 3, {1, 0, -1, 0, 1, -1});
  CHECK(k3.nullity == 1);
  CHECK(*k3.generator == BigIntVector{1, 1, 1});
  // Pivot search must skip an initial zero column.
  auto k4 = kernel(2, 2, {0, 1, 0, 3});
  CHECK(k4.nullity == 1);
  CHECK(*k4.generator == BigIntVector{1, 0});
  CHECK_THROWS_AS(kernel(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("perron vector examples") {
  const auto p1 = perron_vector(build_hamiltonian(1), 1);
  CHECK(p1.ok);
  CHECK(p1.vector == BigIntVector{1});
  const auto p2 = perron_vector(build_hamiltonian(2), 2);
  CHECK(p2.ok);
  CHECK(p2.vector == BigIntVector{1, 1});
  const auto p4 = perron_vector(build_hamiltonian(4), 4);
  CHECK(sorted_strings(p4.vector) ==
        std::vector<std::string>{"7", "7", "3", "3", "3", "3", "3", "3", "3", "3", "1", "1", "1", "1"});
}

TEST_CASE("both exact kernel routes agree and satisfy H v = 2n v") {
  for (int n = 1; n <= 7; ++n) {
    const auto h = build_hamiltonian(n);
    const auto bareiss = perron_vector(h, n, {.method = KernelMethod::Bareiss, .power_check = false});
    const auto modular = perron_vector(h, n, {.method = KernelMethod::Multimodular, .power_check = false});
    REQUIRE(bareiss.ok);
    REQUIRE(modular.ok);
    CHECK(bareiss.vector == modular.vector);
    const auto hv = h.multiply(bareiss.vector);
    for (std::size_t i = 0; i < hv.size(); ++i) CHECK(hv[i] == bareiss.vector[i] * (2 * n));
    // Positive, coprime, smallest component 1.
    mpz_class g = 0;
    for (const auto& x : bareiss.vector) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    CHECK(g == 1);
    CHECK(*std::min_element(bareiss.vector.begin(), bareiss.vector.end()) == 1);
    // Dihedral invariance of the eigenvector.
    const auto rot = rank_permutation(n, rotate);
    const auto refl = rank_permutation(n, reflect);
    for (Rank r = 0; r < h.dim(); ++r) {
      CHECK(bareiss.vector[rot[r]] == bareiss.vector[r]);
      CHECK(bareiss.vector[refl[r]] == bareiss.vector[r]);
    }
  }
}

TEST_CASE("n = 8 kernel is one-dimensional with a positive generator") {
  const auto h = build_hamiltonian(8);
  const auto p = perron_vector(h, 8);
  CHECK(p.method == KernelMethod::Multimodular);
  REQUIRE(p.ok);
  CHECK(p.nullity == 1);
  const mpz_class sum = std::accumulate(p.vector.begin(), p.vector.end(), mpz_class(0));
  CHECK(sum == mpz_class(10850216));
  CHECK(*std::max_element(p.vector.begin(), p.vector.end()) == 218348);
}

TEST_CASE("conjecture violations are reported, not thrown") {
  // H - 2I = 0: two-dimensional kernel.
  const SparseIntMatrix degenerate(2, {{0, 0, 2}, {1, 1, 2}});
  const auto d = perron_vector(degenerate, 1);
  CHECK_FALSE(d.ok);
  CHECK(d.nullity == 2);
  CHECK_FALSE(d.failure.empty());
  const auto dm = perron_vector(degenerate, 1, {.method = KernelMethod::Multimodular});
  CHECK_FALSE(dm.ok);
  CHECK(dm.nullity == 2);
  // H - 2I = [[1,1],[2,2]]: kernel spanned by (1,-1).
  const SparseIntMatrix mixed(2, {{0, 0, 3}, {0, 1, 1}, {1, 0, 2}, {1, 1, 4}});
  for (auto method : {KernelMethod::Bareiss, KernelMethod::Multimodular}) {
    const auto m = perron_vector(mixed, 1, {.method = method, .power_check = false});
    CHECK_FALSE(m.ok);
    CHECK(m.nullity == 1);
    CHECK(m.failure.find("non-positive") != std::string::npos);
  }
}

TEST_CASE("sparse matrix validation") {
  CHECK_THROWS_AS(SparseIntMatrix(2, {{0, 2, 1}}), StructureError);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{0, 0, 0}}), StructureError);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{0, 0, 1}, {0, 0, 2}}), StructureError);
}

TEST_CASE("spectral radius check") {
  for (int n : {1, 2, 4, 6}) {
    const auto check = spectral_radius_check(build_hamiltonian(n), n);
    CHECK(check.column_sums_ok);
    CHECK(check.power_ok);
    CHECK(check.relative_error <= 1e-9);
  }
  CHECK(build_hamiltonian(4).column_sums() == std::vector<std::uint64_t>(14, 8));
  CHECK(build_hamiltonian(1).column_sums() == std::vector<std::uint64_t>{2});
}

TEST_CASE("preimage sums") {
  const auto h4 = histogram(4);
  const auto adjacent = LinkPattern::parse("2 1 4 3 6 5 8 7");
  CHECK(preimage_sum(h4, adjacent) == 56);
  CHECK(preimage_sum(histogram(1), LinkPattern::parse("2 1")) == 2);
  const auto h3 = histogram(3);
  for (const auto& p : enumerate_patterns(3)) CHECK(preimage_sum(h3, p) == 6 * h3.at(p));
}

TEST_CASE("verification report") {
  for (int n : {1, 2, 3, 4, 5}) {
    const auto report = verify_conjecture(n);
    CHECK(report.all_pass());
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.details);
      CHECK(c.pass);
      CHECK(c.n == n);
    }
  }
  // A corrupted histogram produces a failed check with a counterexample.
  auto hist = histogram(4);
  hist.counts[3] += 1;
  const auto h = build_hamiltonian(4);
  const auto report = verify_conjecture(hist, h, perron_vector(h, 4));
  CHECK_FALSE(report.all_pass());
  const auto eq = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "perron_equals_histogram"; });
  REQUIRE(eq != report.checks.end());
  CHECK_FALSE(eq->pass);
  CHECK(eq->details.find("rank 3") != std::string::npos);
}
