import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from creach import (
    Dfa,
    StateRangeError,
    StateSet,
    apply_word,
    cyclic_shift,
    image,
    is_permutation,
    parse_word,
    preimage,
    transformation_of,
    transition_monoid,
    word_profile,
)
from creach.examples import E21_LONG_REACH_WORD

from conftest import permutation_automaton, random_standardized


@st.composite
def small_dfas(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    a = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    b = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return Dfa(n, tuple(a), tuple(b))


words = st.text(alphabet="ab", max_size=6)


class TestStateSet:
    def test_basic_algebra(self):
        s = StateSet.of([0, 3, 5], 6)
        assert len(s) == 3
        assert list(s) == [0, 3, 5]
        assert 3 in s and 1 not in s
        assert (s | StateSet.of([1], 6)).members() == (0, 1, 3, 5)
        assert (s & StateSet.of([3, 4], 6)).members() == (3,)
        assert (s - StateSet.of([0], 6)).members() == (3, 5)
        assert s.complement().members() == (1, 2, 4)
        assert StateSet.full(4).is_full and StateSet.empty(4).is_empty

    def test_range_checks(self):
        with pytest.raises(StateRangeError):
            StateSet.of([6], 6)
        with pytest.raises(StateRangeError):
            StateSet(1 << 6, 6)
        with pytest.raises(ValueError):
            StateSet.of([0], 6) | StateSet.of([0], 7)


class TestApplyWord:
    def test_e6_first_letter(self, e6):
        assert apply_word(e6, 0, "a") == 2

    def test_empty_word_is_identity(self, e6, e12, fig7):
        for dfa in (e6, e12, fig7):
            for q in range(dfa.n):
                assert apply_word(dfa, q, "") == q

    def test_e12_hand_evaluated(self, e12):
        # 11.a = 11, then .b = 0, then .a = 10 by the transition table
        assert apply_word(e12, 11, "aba") == 10

    def test_state_out_of_range(self, e6):
        with pytest.raises(StateRangeError):
            apply_word(e6, 6, "a")
        with pytest.raises(StateRangeError):
            apply_word(e6, -1, "a")

    def test_bad_letter(self, e6):
        with pytest.raises(ValueError):
            apply_word(e6, 0, "ac")


class TestImage:
    def test_e6_merge(self, e6):
        assert image(e6, [0, 5], "a") == StateSet.of([2], 6)

    def test_empty_word(self, e6):
        s = StateSet.of([1, 4], 6)
        assert image(e6, s, "") == s

    def test_e21_long_word_image(self, e21):
        w = parse_word(E21_LONG_REACH_WORD)
        assert image(e21, StateSet.full(21), w) == StateSet.of([3, 10, 17], 21)

    @settings(max_examples=150, deadline=None)
    @given(small_dfas(), words, words)
    def test_composition_and_monotonicity(self, dfa, u, v):
        S = StateSet.full(dfa.n)
        via_both = image(dfa, image(dfa, S, u), v)
        assert image(dfa, S, u + v) == via_both
        assert len(image(dfa, S, u + v)) <= len(image(dfa, S, u))


class TestPreimage:
    def test_e6(self, e6):
        assert preimage(e6, [2], "a") == StateSet.of([0, 5], 6)

    def test_full_set_fixed(self, e12):
        q = StateSet.full(12)
        assert preimage(e12, q, "abba") == q

    def test_fig7_reset_word_preimage(self, fig7):
        w = parse_word("ab^4ab(ab^2)^2aba")
        assert preimage(fig7, [0, 1, 3, 4], w) == StateSet.full(6)

    @settings(max_examples=150, deadline=None)
    @given(small_dfas(), words)
    def test_counting_laws(self, dfa, w):
        n = dfa.n
        total = sum(len(preimage(dfa, [q], w)) for q in range(n))
        assert total == n
        img = image(dfa, StateSet.full(n), w)
        S = StateSet.of(range(0, n, 2), n)
        assert len(preimage(dfa, S, w)) >= len(S & img)


class TestWordProfile:
    def test_e21_defect1_word(self, e21):
        prof = word_profile(e21, parse_word("ab^14a"))
        assert prof.excl.members() == (0,)
        assert prof.dupl.members() == (18,)
        assert prof.defect == 1

    def test_empty_word(self, e6):
        prof = word_profile(e6, "")
        assert prof.excl.is_empty and prof.dupl.is_empty and prof.defect == 0

    def test_e12_defect2_word(self, e12):
        prof = word_profile(e12, "aba")
        assert prof.excl.members() == (0, 2)
        assert prof.dupl.members() == (10, 11)
        assert prof.defect == 2

    @settings(max_examples=150, deadline=None)
    @given(small_dfas(), words, words)
    def test_defect_monotone_and_permutation_iff(self, dfa, u, v):
        assert word_profile(dfa, u + v).defect >= word_profile(dfa, u).defect
        prof = word_profile(dfa, u)
        assert (prof.defect == 0) == is_permutation(transformation_of(dfa, u))
        assert (prof.defect == 0) == prof.dupl.is_empty

    @settings(max_examples=150, deadline=None)
    @given(small_dfas(), words)
    def test_profile_vs_image(self, dfa, w):
        prof = word_profile(dfa, w)
        img = image(dfa, StateSet.full(dfa.n), w)
        assert (prof.excl & img).is_empty
        assert (prof.dupl.mask & img.mask) == prof.dupl.mask

    def test_dupl_matches_pairwise_collision_scan(self):
        # Independent route: collect states hit by two distinct origins.
        rng = random.Random(20240811)
        for _ in range(60):
            n = rng.randrange(2, 9)
            dfa = Dfa(
                n,
                tuple(rng.randrange(n) for _ in range(n)),
                tuple(rng.randrange(n) for _ in range(n)),
            )
            w = "".join(rng.choice("ab") for _ in range(rng.randrange(5)))
            t = [apply_word(dfa, q, w) for q in range(n)]
            counted = Counter(t)
            collisions = {
                t[p]
                for p in range(n)
                for q in range(p + 1, n)
                if t[p] == t[q]
            }
            prof = word_profile(dfa, w)
            assert set(prof.dupl) == collisions
            assert set(prof.dupl) == {s for s, c in counted.items() if c >= 2}
            assert set(prof.excl) == set(range(n)) - set(t)


class TestTransformations:
    def test_cycle_power_is_identity(self, e6):
        assert transformation_of(e6, "b" * 6) == tuple(range(6))

    def test_e12_a_then_shift(self, e12):
        expected = tuple((e12.a[q] + 10) % 12 for q in range(12))
        assert transformation_of(e12, "a" + "b" * 10) == expected

    @settings(max_examples=120, deadline=None)
    @given(small_dfas(), words, words)
    def test_composition(self, dfa, u, v):
        tu = transformation_of(dfa, u)
        tv = transformation_of(dfa, v)
        assert transformation_of(dfa, u + v) == tuple(tv[x] for x in tu)


class TestTransitionMonoid:
    def test_cyclic_group(self):
        dfa = permutation_automaton(5)
        monoid = transition_monoid(dfa, 100)
        assert monoid is not None and len(monoid) == 5

    def test_e6_size_against_independent_closure(self, e6):
        monoid = transition_monoid(e6, 10**6)
        assert monoid is not None

        def closure(gens, n):
            seen = {tuple(range(n))}
            stack = list(seen)
            while stack:
                t = stack.pop()
                for g in gens:
                    c = tuple(g[x] for x in t)
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
            return seen

        oracle = closure([e6.a, e6.b], 6)
        assert len(monoid) == len(oracle) == 31032
        assert monoid == frozenset(oracle)

    def test_cap_overflow_signals(self, e6):
        assert transition_monoid(e6, 100) is None

    def test_identity_always_included(self):
        dfa = Dfa(3, (0, 0, 0), (1, 2, 0))
        monoid = transition_monoid(dfa, 1000)
        assert tuple(range(3)) in monoid


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(3, (0, 1), (0, 1, 2))
    with pytest.raises(StateRangeError):
        Dfa(3, (0, 1, 3), (0, 1, 2))
    with pytest.raises(ValueError):
        Dfa(0, (), ())


def test_cyclic_shift():
    assert cyclic_shift(4) == (1, 2, 3, 0)


def test_random_standardized_helper_is_standardized():
    from creach import is_standardized

    rng = random.Random(7)
    for _ in range(50):
        assert is_standardized(random_standardized(rng.randrange(2, 9), rng))
