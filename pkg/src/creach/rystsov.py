"""The Rystsov digraph: edges forced by defect-1 words, and perfect reachability.

An edge p -> q is forced by a word w when excl(w) = {p} and dupl(w) = {q}.
A DFA is perfectly reachable (every k-subset is the image of a product of
n-k defect-1 words) iff this digraph is strongly connected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Dfa, word_profile
from .digraph import Digraph, is_strongly_connected
from .orbits import cayley_digraph, orbit_data
from .standardize import is_standardized, require_standardized
from .wordsearch import iter_lengths, word_bfs


@dataclass(frozen=True)
class ForcedEdge:
    source: int
    target: int
    witness: str


def forced_edge(dfa: Dfa, w: str) -> ForcedEdge | None:
    """The edge forced by w, or None unless w has defect 1."""
    prof = word_profile(dfa, w)
    if prof.defect != 1 or len(prof.dupl) != 1:
        return None
    return ForcedEdge(prof.excl.members()[0], prof.dupl.members()[0], w)


def forced_edges(dfa: Dfa, max_len: int | None) -> dict[tuple[int, int], str]:
    """All edges forced by words of length <= max_len, with shortlex-least witnesses.

    With max_len None the enumeration runs until the transformation closure
    is exhausted, i.e. until no word of any length can force a new edge.
    """
    bfs = word_bfs(dfa)
    edges: dict[tuple[int, int], str] = {}
    for length in iter_lengths(bfs, max_len):
        excl, dupl = bfs.level_profiles(length)
        hits = np.flatnonzero((np.bitwise_count(excl) == 1) & (np.bitwise_count(dupl) == 1))
        if len(hits) == 0:
            continue
        lo, _ = bfs.level_slice(length)
        for j in hits:
            edge = (int(excl[j]).bit_length() - 1, int(dupl[j]).bit_length() - 1)
            if edge not in edges:
                edges[edge] = bfs.word_at(lo + int(j))
    return edges


def _orbit_value_closure(dfa: Dfa) -> set[int]:
    """Least set containing d closed under x -> x.a and x -> (x+r).a."""
    od = orbit_data(dfa)
    a, n = dfa.a, dfa.n
    closure = {od.d}
    stack = [od.d]
    while stack:
        x = stack.pop()
        for y in (a[x], a[(x + od.r) % n]):
            if y not in closure:
                closure.add(y)
                stack.append(y)
    return closure


def rystsov_digraph(dfa: Dfa, method: str = "cayley-closure", max_len: int | None = None) -> Digraph:
    """The digraph of forced edges.

    "cayley-closure" (standardized DFAs only) builds Cay(Z_n, D) for the
    closure D of {d} under x -> x.a and x -> (x+r).a; "brute-force" collects
    forced edges from every word of length <= max_len (until the
    transformation closure stabilizes when max_len is None) and labels each
    edge with its shortlex-least forcing word.  The two methods are
    cross-checked against each other in the test suite, never assumed equal.
    """
    if method == "cayley-closure":
        if max_len is not None:
            raise ValueError("max_len applies to the brute-force method only")
        require_standardized(dfa)
        return cayley_digraph(dfa.n, _orbit_value_closure(dfa))
    if method == "brute-force":
        edges = forced_edges(dfa, max_len)
        return Digraph(dfa.n, frozenset(edges), labels=edges)
    raise ValueError(f"unknown method {method!r}; use 'cayley-closure' or 'brute-force'")


def restricted_rystsov_digraph(dfa: Dfa) -> Digraph:
    """Only the edges forced by words of length <= n, shortlex-least labels."""
    return rystsov_digraph(dfa, "brute-force", max_len=dfa.n)


def is_perfectly_reachable(dfa: Dfa) -> bool:
    """Strong connectivity of the forced-edge digraph.

    Standardized inputs use the closure construction; anything else falls
    back to the brute-force enumeration run to stabilization, which is only
    affordable when the transition monoid is small.
    """
    if is_standardized(dfa):
        digraph = rystsov_digraph(dfa, "cayley-closure")
    else:
        digraph = rystsov_digraph(dfa, "brute-force", max_len=None)
    return is_strongly_connected(digraph)
