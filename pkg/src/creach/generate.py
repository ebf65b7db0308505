"""Enumeration and sampling of standardized DFAs.

Every standardized DFA on n states is a pair (permutation of {1..n-1},
choice of d = 0.a), so there are (n-1) * (n-1)! of them; the singleton
excluded/duplicate conditions hold automatically for every such pair.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Callable, Iterable, Iterator

from .core import CapacityError, Dfa, cyclic_shift
from .expand import find_non_n_expandable_subset
from .orbits import orbit_data
from .reach import verify_don
from .rystsov import is_perfectly_reachable

DEFAULT_BUDGET = 1_000_000


def standardized_dfa(n: int, perm: Iterable[int], d: int) -> Dfa:
    """The standardized DFA with a = d on state 0 and the permutation on 1..n-1."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n)):
        raise ValueError(f"perm must be a permutation of 1..{n - 1}")
    if not 1 <= d < n:
        raise ValueError(f"d must lie in 1..{n - 1}, got {d}")
    return Dfa(n, (d,) + perm, cyclic_shift(n))


def standardized_count(n: int) -> int:
    return (n - 1) * math.factorial(n - 1)


def _h0_full(dfa: Dfa) -> bool:
    return orbit_data(dfa).h0_is_full


def _has_non_n_expandable_subset(dfa: Dfa) -> bool:
    return find_non_n_expandable_subset(dfa) is not None


def _don_violation(dfa: Dfa) -> bool:
    return bool(verify_don(dfa).violations)


FILTERS: dict[str, Callable[[Dfa], bool]] = {
    "h0_full": _h0_full,
    "perfectly_reachable": is_perfectly_reachable,
    "has_non_n_expandable_subset": _has_non_n_expandable_subset,
    "don_violation": _don_violation,
}


def _resolve_filters(filters) -> list[Callable[[Dfa], bool]]:
    resolved = []
    for f in filters:
        if callable(f):
            resolved.append(f)
        elif f in FILTERS:
            resolved.append(FILTERS[f])
        else:
            raise ValueError(f"unknown filter {f!r}; known: {', '.join(FILTERS)}")
    return resolved


def enumerate_standardized(
    n: int,
    filters=(),
    *,
    exhaustive: bool = True,
    seed: int | None = None,
    count: int = 1000,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[Dfa]:
    """Stream standardized DFAs on n states, optionally filtered.

    Exhaustive mode yields each of the (n-1) * (n-1)! automata exactly
    once, permutations in lexicographic order with d ascending inside each,
    and refuses (CapacityError) when that count exceeds the budget.
    Sampling mode draws ``count`` automata with replacement from the seeded
    RNG, so a fixed seed gives a reproducible stream.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    predicates = _resolve_filters(filters)

    def emit(dfa: Dfa):
        return all(p(dfa) for p in predicates)

    if exhaustive:
        total = standardized_count(n)
        if total > budget:
            raise CapacityError(
                f"exhaustive enumeration at n={n} means {total} automata, over the budget "
                f"of {budget}; use sampling (exhaustive=False) instead"
            )
        for perm in itertools.permutations(range(1, n)):
            for d in range(1, n):
                dfa = Dfa(n, (d,) + perm, cyclic_shift(n))
                if emit(dfa):
                    yield dfa
        return

    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    rng = random.Random(seed)
    base = list(range(1, n))
    for _ in range(count):
        perm = base[:]
        rng.shuffle(perm)
        d = rng.randrange(1, n)
        dfa = Dfa(n, (d, *perm), cyclic_shift(n))
        if emit(dfa):
            yield dfa
