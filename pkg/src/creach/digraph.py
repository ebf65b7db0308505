"""Directed graphs on integer vertices, with strongly connected components."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType


@dataclass(frozen=True)
class Digraph:
    """A digraph on vertices 0..n-1.

    Edges may carry a word label (``labels``) or an orbit index
    (``indices``); both annotations are optional and keyed by edge.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: "MappingProxyType[tuple[int, int], str] | None" = None
    indices: "MappingProxyType[tuple[int, int], int] | None" = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        edges = frozenset((int(s), int(t)) for s, t in self.edges)
        object.__setattr__(self, "edges", edges)
        for s, t in edges:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"edge ({s}, {t}) out of range for n={self.n}")
        for name in ("labels", "indices"):
            annot = getattr(self, name)
            if annot is None:
                continue
            annot = dict(annot)
            if not set(annot) <= edges:
                extra = sorted(set(annot) - edges)
                raise ValueError(f"{name} refer to non-edges {extra[:4]}")
            object.__setattr__(self, name, MappingProxyType(annot))

    def successors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in self.edges:
            adj[s].append(t)
        for lst in adj:
            lst.sort()
        return adj

    def label_of(self, source: int, target: int) -> str | None:
        if self.labels is None:
            return None
        return self.labels.get((source, target))


def sccs(g: Digraph) -> list[frozenset[int]]:
    """Strongly connected components, sorted by their smallest vertex.

    Iterative Tarjan; singleton components are included, the components
    partition the vertex set.
    """
    adj = g.successors()
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, child_pos = work[-1]
            if child_pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for pos in range(child_pos, len(adj[v])):
                w = adj[v][pos]
                if index[w] == -1:
                    work[-1] = (v, pos + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    if w == v:
                        break
                components.append(frozenset(comp))

    components.sort(key=min)
    return components


def is_strongly_connected(g: Digraph) -> bool:
    return len(sccs(g)) == 1
