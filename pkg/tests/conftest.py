import random

import pytest

from creach import Dfa, cyclic_shift
from creach.examples import builtin_example


# Session scope keeps the per-DFA BFS caches warm across test modules.
@pytest.fixture(scope="session")
def e6():
    return builtin_example("E6")


@pytest.fixture(scope="session")
def e12():
    return builtin_example("E12")


@pytest.fixture(scope="session")
def e21():
    return builtin_example("E21")


@pytest.fixture(scope="session")
def e48():
    return builtin_example("E48")


@pytest.fixture(scope="session")
def fig7():
    return builtin_example("FIG7")


def random_standardized(n: int, rng: random.Random) -> Dfa:
    perm = list(range(1, n))
    rng.shuffle(perm)
    d = rng.randrange(1, n)
    return Dfa(n, (d, *perm), cyclic_shift(n))


def permutation_automaton(n: int) -> Dfa:
    """a = identity, b = cycle: images never shrink."""
    return Dfa(n, tuple(range(n)), cyclic_shift(n))
