import random

import pytest

from creach import (
    Dfa,
    NotStandardizedError,
    cyclic_shift,
    forced_edge,
    forced_edges,
    is_perfectly_reachable,
    is_strongly_connected,
    orbit_digraph,
    parse_word,
    render_word,
    restricted_rystsov_digraph,
    rystsov_digraph,
    sccs,
    word_profile,
)

from conftest import permutation_automaton, random_standardized

# Every edge of the restricted forced-edge digraph of E12, with its
# shortlex-least forcing word.
E12_RESTRICTED_EDGES = {
    (0, 10): "a",
    (1, 11): "ab",
    (2, 0): "ab^2",
    (3, 1): "ab^3",
    (4, 2): "ab^4",
    (5, 3): "ab^5",
    (6, 4): "ab^6",
    (7, 5): "ab^7",
    (8, 6): "ab^8",
    (9, 7): "ab^9",
    (10, 8): "ab^10",
    (11, 9): "ab^11",
    (0, 8): "ab^10a",
}


class TestForcedEdge:
    def test_long_defect1_word(self, e12):
        w = parse_word("(ab^10)^4a")
        assert len(w) == 45
        edge = forced_edge(e12, w)
        assert edge is not None
        assert (edge.source, edge.target) == (0, 1)

    def test_defect2_word_rejected(self, e12):
        assert word_profile(e12, "aba").defect == 2
        assert forced_edge(e12, "aba") is None

    def test_short_word(self, e12):
        edge = forced_edge(e12, "abb")
        assert (edge.source, edge.target) == (2, 0)

    def test_permutation_rejected(self, e12):
        assert forced_edge(e12, "bb") is None


class TestRystsovDigraph:
    def test_e12_closure_covers_everything(self, e12):
        g = rystsov_digraph(e12, "cayley-closure")
        # the closure of {10} under x -> x.a and x -> (x+10).a is 1..11
        targets_of_0 = {t for (s, t) in g.edges if s == 0}
        assert targets_of_0 == set(range(1, 12))
        assert is_strongly_connected(g)

    def test_e21_brute_force_has_long_range_edge(self, e21):
        g = rystsov_digraph(e21, "brute-force", max_len=16)
        assert (0, 18) in g.edges
        assert g.labels[(0, 18)] == parse_word("ab^14a")

    def test_small_non_connected_closure(self):
        dfa = Dfa(4, (2, 1, 2, 3), cyclic_shift(4))
        g = rystsov_digraph(dfa, "cayley-closure")
        assert g.edges == {(0, 2), (2, 0), (1, 3), (3, 1)}
        assert sccs(g) == [frozenset({0, 2}), frozenset({1, 3})]

    def test_cayley_closure_requires_standardized(self):
        with pytest.raises(NotStandardizedError):
            rystsov_digraph(Dfa(2, (0, 0), (0, 1)), "cayley-closure")

    def test_unknown_method(self, e6):
        with pytest.raises(ValueError):
            rystsov_digraph(e6, "magic")

    def test_max_len_only_for_brute_force(self, e6):
        with pytest.raises(ValueError):
            rystsov_digraph(e6, "cayley-closure", max_len=5)

    def test_brute_force_monotone_in_max_len(self, e12):
        previous = frozenset()
        for max_len in (2, 4, 8, 12):
            edges = frozenset(forced_edges(e12, max_len))
            assert previous <= edges
            previous = edges


class TestRestrictedRystsov:
    def test_e12_exact_edges_and_labels(self, e12):
        g = restricted_rystsov_digraph(e12)
        assert g.edges == frozenset(E12_RESTRICTED_EDGES)
        rendered = {edge: render_word(label) for edge, label in g.labels.items()}
        assert rendered == E12_RESTRICTED_EDGES
        assert not is_strongly_connected(g)

    def test_labels_reprofile_to_their_edge(self, e12):
        g = restricted_rystsov_digraph(e12)
        for (source, target), label in g.labels.items():
            prof = word_profile(e12, label)
            assert prof.excl.members() == (source,)
            assert prof.dupl.members() == (target,)
            assert prof.defect == 1
            assert len(label) <= e12.n

    def test_standardized_shift_edges_always_present(self):
        # ab^q forces q -> q + d for every q <= n-1
        rng = random.Random(8)
        for _ in range(20):
            dfa = random_standardized(rng.randrange(2, 8), rng)
            g = restricted_rystsov_digraph(dfa)
            d = dfa.a[0]
            for q in range(dfa.n):
                assert (q, (q + d) % dfa.n) in g.edges

    def test_e21_contains_long_range_edge(self, e21):
        g = restricted_rystsov_digraph(e21)
        assert (0, 18) in g.edges
        assert len(g.labels[(0, 18)]) <= 21


class TestPerfectReachability:
    def test_e12(self, e12):
        assert is_perfectly_reachable(e12)

    def test_e21(self, e21):
        assert is_perfectly_reachable(e21)

    def test_small_counterexample(self):
        assert not is_perfectly_reachable(Dfa(4, (2, 1, 2, 3), cyclic_shift(4)))

    def test_permutation_automaton_not_perfect(self):
        # no defect-1 words at all, so the digraph has no edges
        assert not is_perfectly_reachable(permutation_automaton(4))

    def test_non_standardized_brute_force_path(self):
        # relabeled version of the 4-state counterexample: b cycles backwards
        dfa = Dfa(4, (2, 1, 2, 3), (3, 0, 1, 2))
        assert not is_perfectly_reachable(dfa)


class TestAgreementProperties:
    def test_orbit_digraph_inside_rystsov(self):
        rng = random.Random(19)
        for _ in range(40):
            dfa = random_standardized(rng.randrange(2, 7), rng)
            orbit_edges = orbit_digraph(dfa).edges
            closure_edges = rystsov_digraph(dfa, "cayley-closure").edges
            assert orbit_edges <= closure_edges

    def test_closure_matches_brute_force_sample(self):
        rng = random.Random(29)
        for _ in range(25):
            dfa = random_standardized(rng.randrange(2, 7), rng)
            closure_edges = rystsov_digraph(dfa, "cayley-closure").edges
            brute_edges = rystsov_digraph(dfa, "brute-force", max_len=None).edges
            assert closure_edges == brute_edges
