"""Expanding and extending words for proper non-empty state subsets.

A word w expands S when some larger P has P.w = S; equivalently (and this
is what everything here tests) excl(w) misses S while dupl(w) hits it.
A word w extends S when the full preimage of S under w is larger than S.
Expansion implies extension; the converse fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CapacityError,
    Dfa,
    StateSet,
    as_stateset,
    lattice_limit,
    preimage,
    word_profile,
)
from .orbits import orbit_data
from .rystsov import forced_edges
from .standardize import require_standardized
from .wordsearch import iter_lengths, word_bfs


@dataclass(frozen=True)
class ExpansionResult:
    """An expanding word together with the larger preimage set mapping onto S."""

    word: str
    preimage_witness: StateSet


def _check_proper(S: StateSet) -> StateSet:
    if S.is_empty or S.is_full:
        raise ValueError("subset must be proper and non-empty")
    return S


def expands(dfa: Dfa, w: str, S) -> ExpansionResult | None:
    """The expansion witness for S under w, or None if w does not expand S.

    The witness is the union of the w-preimages of the members of S; it
    maps onto S exactly and is strictly larger whenever the excluded/
    duplicate criterion holds.
    """
    S = _check_proper(as_stateset(S, dfa.n))
    prof = word_profile(dfa, w)
    if (prof.excl.mask & S.mask) or not (prof.dupl.mask & S.mask):
        return None
    return ExpansionResult(w, preimage(dfa, S, w))


def extends(dfa: Dfa, w: str, S) -> bool:
    """Whether |S w^-1| > |S|."""
    S = _check_proper(as_stateset(S, dfa.n))
    return len(preimage(dfa, S, w)) > len(S)


def shortest_expanding_word(dfa: Dfa, S, max_len: int | None) -> str | None:
    """Shortlex-least word of length <= max_len expanding S, or None.

    max_len None means search until the transformation closure of the DFA
    is exhausted.  With max_len = n this decides n-expandability.
    """
    S = _check_proper(as_stateset(S, dfa.n))
    if max_len is not None and max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    bfs = word_bfs(dfa)
    smask = np.uint64(S.mask)
    for length in iter_lengths(bfs, max_len):
        excl, dupl = bfs.level_profiles(length)
        hits = np.flatnonzero(((excl & smask) == 0) & ((dupl & smask) != 0))
        if len(hits):
            lo, _ = bfs.level_slice(length)
            return bfs.word_at(lo + int(hits[0]))
    return None


def shortest_extending_word(dfa: Dfa, S, max_len: int | None) -> str | None:
    """Shortlex-least word of length <= max_len extending S, or None."""
    S = _check_proper(as_stateset(S, dfa.n))
    if max_len is not None and max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    bfs = word_bfs(dfa)
    members = np.fromiter(S, dtype=np.int64)
    size = len(S)
    for length in iter_lengths(bfs, max_len):
        counts = bfs.level_counts(length)
        preimage_sizes = counts[:, members].sum(axis=1, dtype=np.int32)
        hits = np.flatnonzero(preimage_sizes > size)
        if len(hits):
            lo, _ = bfs.level_slice(length)
            return bfs.word_at(lo + int(hits[0]))
    return None


def is_n_expandable(dfa: Dfa, S) -> bool:
    return shortest_expanding_word(dfa, S, dfa.n) is not None


def is_n_extensible(dfa: Dfa, S) -> bool:
    return shortest_extending_word(dfa, S, dfa.n) is not None


def orbit_expanding_word(dfa: Dfa, S) -> str | None:
    """An expanding word a^{s+1} b^q of length <= n read off the orbit digraph.

    Looks for a short orbit edge q -> q + d_s entering S from outside; such
    an edge exists exactly when S is not a union of orbit-subgroup cosets.
    Among admissible edges the minimal q, then minimal s, is chosen.
    """
    require_standardized(dfa)
    S = _check_proper(as_stateset(S, dfa.n))
    od = orbit_data(dfa)
    n = dfa.n
    for q in range(n):
        if q in S:
            continue
        for s, ds in enumerate(od.orb):
            if q + s < n and (q + ds) % n in S:
                return "a" * (s + 1) + "b" * q
    return None


def is_union_of_h0_cosets(dfa: Dfa, S) -> bool:
    """Whether S is closed under adding the orbit-subgroup generator."""
    require_standardized(dfa)
    S = as_stateset(S, dfa.n)
    g = orbit_data(dfa).h0_generator
    n = dfa.n
    rotated = ((S.mask << g) | (S.mask >> (n - g))) & ((1 << n) - 1)
    return rotated == S.mask


def find_non_n_expandable_subset(dfa: Dfa) -> StateSet | None:
    """A proper non-empty subset not expandable by any word of length <= n.

    Subsets that are not unions of orbit-subgroup cosets always have an
    orbit expanding word of length <= n, so only coset unions can fail and
    the scan over them is exact.  Returns the first failure by ascending
    coset pattern, or None.
    """
    require_standardized(dfa)
    od = orbit_data(dfa)
    g = od.h0_generator
    if g > 20:
        raise CapacityError(f"would scan 2^{g} coset unions; orbit subgroup has index {g}")
    n = dfa.n
    coset_masks = [sum(1 << q for q in range(i, n, g)) for i in range(g)]
    for pattern in range(1, (1 << g) - 1):
        mask = 0
        for i in range(g):
            if pattern >> i & 1:
                mask |= coset_masks[i]
        S = StateSet(mask, n)
        if shortest_expanding_word(dfa, S, n) is None:
            return S
    return None


def non_extensible_subsets(dfa: Dfa, max_len: int | None = None) -> tuple[StateSet, ...]:
    """Every proper non-empty subset NOT extensible by a word of length <= max_len.

    max_len defaults to n.  Runs in two exact stages: each forced edge
    p -> q with a witness of length <= max_len extends precisely the
    subsets containing q but not p, which is marked over all 2^n subsets at
    once; whatever those defect-1 words leave uncovered is settled by a
    direct per-subset search.  Empty result means every proper non-empty
    subset is max_len-extensible.
    """
    n = dfa.n
    if max_len is None:
        max_len = n
    if n > lattice_limit():
        raise CapacityError(
            f"extensibility survey inspects 2^{n} subsets; limit is n <= {lattice_limit()}"
        )
    covered = np.zeros(1 << n, dtype=bool)
    covered[0] = True
    covered[-1] = True
    idx = np.arange(1 << n, dtype=np.uint64)
    for p, q in forced_edges(dfa, min(max_len, n)):
        covered |= ((idx >> np.uint64(q)) & 1).astype(bool) & (((idx >> np.uint64(p)) & 1) == 0)
    failures = []
    for mask in np.flatnonzero(~covered):
        S = StateSet(int(mask), n)
        if shortest_extending_word(dfa, S, max_len) is None:
            failures.append(S)
    return tuple(failures)
