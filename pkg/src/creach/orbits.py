"""Orbit data of standardized DFAs and the associated Cayley-style digraphs."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Dfa, mod_add
from .digraph import Digraph
from .standardize import require_standardized


@dataclass(frozen=True)
class OrbitData:
    """The orbit of d = 0.a under a, with its cumulative gcd chain.

    d_s = d.a^s for s = 0..ell-1, ending at r, the nonzero a-preimage of d.
    gcds[s] = gcd(d_0, ..., d_s, n); the last entry generates the orbit
    subgroup of (Z_n, +), and the subgroup is all of Z_n iff it is 1.
    """

    d: int
    r: int
    ell: int
    orb: tuple[int, ...]
    gcds: tuple[int, ...]

    @property
    def h0_generator(self) -> int:
        return self.gcds[-1]

    @property
    def h0_is_full(self) -> bool:
        return self.gcds[-1] == 1


def orbit_data(dfa: Dfa) -> OrbitData:
    require_standardized(dfa)
    n, a = dfa.n, dfa.a
    d = a[0]
    preimages = [q for q in range(1, n) if a[q] == d]
    assert len(preimages) == 1, "standardized DFA must have exactly one nonzero preimage of d"
    r = preimages[0]
    orb = [d]
    x = d
    while x != r:
        x = a[x]
        orb.append(x)
        assert len(orb) <= n, "orbit walk failed to reach r"
    gcds = []
    g = n
    for value in orb:
        g = math.gcd(g, value)
        gcds.append(g)
    return OrbitData(d, r, len(orb), tuple(orb), tuple(gcds))


def cayley_digraph(n: int, connection: "set[int] | frozenset[int] | tuple[int, ...] | list[int]") -> Digraph:
    """Cay(Z_n, X): edges g -> g+x (mod n) for every g and every x in X."""
    xs = sorted(set(connection))
    for x in xs:
        if not 0 <= x < n:
            raise ValueError(f"connection element {x} out of range 0..{n - 1}")
    edges = frozenset((g, mod_add(g, x, n)) for g in range(n) for x in xs)
    return Digraph(n, edges)


def orbit_digraph(dfa: Dfa) -> Digraph:
    """Cay(Z_n, orb(d)), each edge annotated with its orbit index s."""
    od = orbit_data(dfa)
    n = dfa.n
    indices = {}
    for s, ds in enumerate(od.orb):
        for q in range(n):
            indices[(q, mod_add(q, ds, n))] = s
    return Digraph(n, frozenset(indices), indices=indices)


def restricted_orbit_digraph(dfa: Dfa) -> Digraph:
    """The orbit digraph with every long edge (q + s >= n) removed."""
    od = orbit_data(dfa)
    n = dfa.n
    indices = {}
    for s, ds in enumerate(od.orb):
        for q in range(n - s):
            indices[(q, mod_add(q, ds, n))] = s
    return Digraph(n, frozenset(indices), indices=indices)


def spanning_gamma(dfa: Dfa, s: int) -> Digraph:
    """The s-th inductive spanning subgraph of the restricted orbit digraph.

    Stage 0 takes the n edges i -> d_0 + i; stage t adds the gcds[t-1]
    edges i -> d_t + i for i = 0..gcds[t-1]-1.  Every added edge is short,
    and the components of stage s are the cosets of <gcds[s]>.
    """
    od = orbit_data(dfa)
    if not 0 <= s < od.ell:
        raise IndexError(f"stage {s} out of range 0..{od.ell - 1}")
    n = dfa.n
    indices = {(q, mod_add(q, od.orb[0], n)): 0 for q in range(n)}
    for t in range(1, s + 1):
        for i in range(od.gcds[t - 1]):
            indices[(i, mod_add(i, od.orb[t], n))] = t
    return Digraph(n, frozenset(indices), indices=indices)


def cosets_of(n: int, g: int) -> list[frozenset[int]]:
    """The cosets of the subgroup of (Z_n, +) generated by g, sorted by minimum."""
    m = math.gcd(g, n)
    return [frozenset(range(i, n, m)) for i in range(m)]
