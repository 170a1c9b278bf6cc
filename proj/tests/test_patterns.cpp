#include <doctest.h>

#include <set>

#include "fplink/patterns.hpp"
#include "oracles.hpp"

using namespace fplink;

namespace {

LinkPattern arcs(int n, std::vector<std::pair<int, int>> list) { return LinkPattern::from_arcs(n, list); }

}  // namespace

TEST_CASE("catalan numbers agree with the convolution recurrence") {
  const auto table = oracle::catalan_table(30);
  for (int n = 0; n <= 30; ++n) CHECK(catalan(n) == table[n]);
  CHECK(pattern_count(19) == table[19]);
  CHECK_THROWS_AS(pattern_count(20), PatternError);
  CHECK_THROWS_AS(pattern_count(0), PatternError);
  CHECK_THROWS_AS(catalan(40), PatternError);
}

TEST_CASE("enumerate_patterns sizes") {
  CHECK(enumerate_patterns(1).size() == 1);
  CHECK(enumerate_patterns(1)[0] == arcs(1, {{1, 2}}));
  CHECK(enumerate_patterns(4).size() == 14);
  CHECK(enumerate_patterns(6).size() == 132);
  const auto table = oracle::catalan_table(12);
  for (int n = 1; n <= 12; ++n) CHECK(pattern_count(n) == table[n]);
  CHECK(enumerate_patterns(12).size() == table[12]);
  CHECK_THROWS_AS(enumerate_patterns(0), PatternError);
  CHECK_THROWS_AS(enumerate_patterns(kMaxRankedArcs + 1), PatternError);
}

TEST_CASE("canonical order matches brute-force sorted matchings") {
  for (int n = 1; n <= 6; ++n) {
    const auto expected = oracle::noncrossing_matchings(n);
    const auto got = enumerate_patterns(n);
    REQUIRE(got.size() == expected.size());
    for (std::size_t r = 0; r < got.size(); ++r) CHECK(got[r].match() == expected[r]);
  }
}

TEST_CASE("rank and unrank are inverse") {
  CHECK(rank(arcs(1, {{1, 2}})) == 0);
  CHECK(rank(arcs(2, {{1, 2}, {3, 4}})) == 0);
  CHECK(rank(arcs(2, {{1, 4}, {2, 3}})) == 1);
  for (int n = 1; n <= 7; ++n) {
    std::set<LinkPattern> seen;
    for (Rank r = 0; r < pattern_count(n); ++r) {
      const auto p = unrank(n, r);
      CHECK(rank(p) == r);
      seen.insert(p);
    }
    CHECK(seen.size() == pattern_count(n));
  }
  // Sampled round trips at the top of the rank range.
  const Rank top = pattern_count(kMaxRankedArcs);
  for (Rank r : {Rank{0}, Rank{1}, top / 3, top / 2, top - 1}) CHECK(rank(unrank(kMaxRankedArcs, r)) == r);
  CHECK_THROWS_AS(unrank(4, 14), PatternError);
}

TEST_CASE("validator rejects crossings and bad involutions") {
  CHECK(is_noncrossing_matching(std::vector<int>{2, 1, 4, 3}));
  CHECK(is_noncrossing_matching(std::vector<int>{4, 3, 2, 1}));
  CHECK_FALSE(is_noncrossing_matching(std::vector<int>{3, 4, 1, 2}));  // (1,3),(2,4) cross
  CHECK_FALSE(is_noncrossing_matching(std::vector<int>{1, 2}));        // fixed points
  CHECK_FALSE(is_noncrossing_matching(std::vector<int>{2, 3, 1}));
  CHECK_FALSE(is_noncrossing_matching(std::vector<int>{2, 1, 4, 1}));  // not an involution
  CHECK_FALSE(is_noncrossing_matching(std::vector<int>{}));
  CHECK_THROWS_AS(LinkPattern::parse("3 4 1 2"), PatternError);
  CHECK_THROWS_AS(LinkPattern::parse("2 x"), PatternError);
  CHECK_THROWS_AS(LinkPattern::from_parens("(()"), PatternError);
  CHECK_THROWS_AS(LinkPattern::from_arcs(2, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}), PatternError);
}

TEST_CASE("text forms") {
  const auto p = arcs(2, {{1, 2}, {3, 4}});
  CHECK(p.to_string() == "2 1 4 3");
  CHECK(p.to_parens() == "()()");
  CHECK(LinkPattern::parse("2 1 4 3") == p);
  CHECK(LinkPattern::parse("  2 1\n4 3 ") == p);
  CHECK(LinkPattern::from_parens("(())").to_string() == "4 3 2 1");
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : enumerate_patterns(n)) {
      CHECK(LinkPattern::parse(q.to_string()) == q);
      CHECK(LinkPattern::from_parens(q.to_parens()) == q);
      CHECK(LinkPattern::from_key(n, q.key()) == q);
    }
  }
}

TEST_CASE("apply_h examples") {
  const auto p = arcs(2, {{1, 2}, {3, 4}});
  CHECK(apply_h(1, p) == p);
  CHECK(apply_h(2, p) == arcs(2, {{2, 3}, {1, 4}}));
  CHECK(apply_h(4, p) == arcs(2, {{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(apply_h(0, p), PatternError);
  CHECK_THROWS_AS(apply_h(5, p), PatternError);

  CHECK(apply_h(1, arcs(1, {{1, 2}})) == arcs(1, {{1, 2}}));
  CHECK(apply_h(2, arcs(1, {{1, 2}})) == arcs(1, {{1, 2}}));

  const auto adjacent = arcs(4, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  std::vector<int> fixing;
  for (int i = 1; i <= 8; ++i) {
    if (apply_h(i, adjacent) == adjacent) fixing.push_back(i);
  }
  CHECK(fixing == std::vector<int>{1, 3, 5, 7});
  CHECK(adjacent.adjacent_arc_count() == 4);
}

TEST_CASE("apply_h agrees with the raw-array definition") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : oracle::noncrossing_matchings(n)) {
      const auto p = LinkPattern::from_match(m);
      for (int i = 1; i <= 2 * n; ++i) CHECK(apply_h(i, p).match() == oracle::h_raw(i, m));
    }
  }
}

TEST_CASE("rotate and reflect") {
  const auto p = arcs(2, {{1, 2}, {3, 4}});
  CHECK(rotate(p) == arcs(2, {{2, 3}, {4, 1}}));
  CHECK(reflect(arcs(1, {{1, 2}})) == arcs(1, {{1, 2}}));
  CHECK(reflect(arcs(3, {{1, 2}, {3, 6}, {4, 5}})) == arcs(3, {{5, 6}, {1, 4}, {2, 3}}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : enumerate_patterns(n)) {
      auto r = q;
      for (int k = 0; k < 2 * n; ++k) r = rotate(r);
      CHECK(r == q);
      CHECK(reflect(reflect(q)) == q);
      // Reflection conjugates rotation to its inverse.
      CHECK(reflect(rotate(reflect(rotate(q)))) == q);
    }
  }
}

// Operator algebra: idempotence, contraction with neighbours, far commutation, equivariance.
TEST_CASE("operator algebra on all patterns up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    const int m = 2 * n;
    auto succ = [m](int i) { return i % m + 1; };
    auto pred = [m](int i) { return (i + m - 2) % m + 1; };
    for (const auto& p : enumerate_patterns(n)) {
      for (int i = 1; i <= m; ++i) {
        const auto hp = apply_h(i, p);
        CHECK(is_noncrossing_matching(hp.match()));
        CHECK(apply_h(i, hp) == hp);
        if (m > 2) {
          CHECK(apply_h(i, apply_h(succ(i), hp)) == hp);
          CHECK(apply_h(i, apply_h(pred(i), hp)) == hp);
        }
        CHECK(rotate(hp) == apply_h(succ(i), rotate(p)));
        for (int j = 1; j <= m; ++j) {
          const int gap = std::min((i - j + m) % m, (j - i + m) % m);
          if (gap >= 2) CHECK(apply_h(i, apply_h(j, p)) == apply_h(j, apply_h(i, p)));
        }
      }
    }
  }
}
