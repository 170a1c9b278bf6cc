from fractions import Fraction

import pytest

import fplink


def test_patterns():
    assert fplink.catalan(4) == 14
    pats = fplink.enumerate_patterns(3)
    assert len(pats) == 5
    assert [fplink.rank(p) for p in pats] == list(range(5))
    p = fplink.LinkPattern.parse("2 1 4 3")
    assert p.match == [2, 1, 4, 3]
    assert fplink.apply_h(4, p) == fplink.LinkPattern([4, 3, 2, 1])
    assert fplink.rotate(p) == fplink.LinkPattern.from_arcs(2, [(2, 3), (4, 1)])
    assert len({p, fplink.LinkPattern.parse("2 1 4 3")}) == 1
    with pytest.raises(ValueError):
        fplink.LinkPattern.parse("3 4 1 2")


def test_histogram_n4():
    h = fplink.histogram(4, workers=2)
    assert h.total() == 42
    assert sorted(h.counts, reverse=True) == [7, 7] + [3] * 8 + [1] * 4
    assert h[fplink.LinkPattern.parse("2 1 4 3 6 5 8 7")] == 7
    assert fplink.parse_histogram_csv(h.csv()) == h
    assert fplink.asm_count(8) == 10850216


def test_states():
    states = fplink.asm_states(3)
    assert len(states) == 7
    entries, pattern = states[0]
    assert len(entries) == 9
    assert "link-pattern: " + str(pattern) in fplink.render_asm(3, entries)


def test_ground_state():
    h = fplink.build_hamiltonian(4)
    assert h.dim == 14
    assert h.column_sums() == [8] * 14
    p = fplink.perron_vector(4)
    assert p["ok"] and p["nullity"] == 1
    assert p["vector"] == fplink.histogram(4).counts
    assert fplink.perron_vector(5, method="multimodular")["vector"] == fplink.histogram(5).counts


def test_verify():
    ok, checks = fplink.verify(3)
    assert ok
    assert all(c["pass"] for c in checks)


def test_game_and_sampler():
    h = fplink.histogram(4)
    t = fplink.LinkPattern.parse("2 1 4 3 6 5 8 7")
    assert fplink.player_a_probability(h, t) == Fraction(1, 6)
    assert fplink.player_b_probability(h, t) == Fraction(1, 6)
    r = fplink.sample(4, samples=200000, seed=3)
    assert sum(r["empirical"]) == 200000
    assert r["pass"]
    assert fplink.sample(4, samples=1000, seed=3)["empirical"] == fplink.sample(4, samples=1000, seed=3)["empirical"]
