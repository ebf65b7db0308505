"""Subset reachability: exact shortest reaching words over the image lattice,
the n(n-k) bound report, reset words, and the expansion-based reaching
recursion.

One breadth-first pass over the 2^n image subsets (vectorized, with parent
pointers) serves every exact query here; it is cached per DFA and refuses
to run past the configured lattice limit rather than degrade silently.
"""

from __future__ import annotations

import weakref
from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import (
    CapacityError,
    Dfa,
    StateSet,
    as_stateset,
    check_word,
    identity,
    image,
    lattice_limit,
    word_profile,
    _image_tables,
    _padded_tables,
)
from .expand import ExpansionResult, expands, orbit_expanding_word, shortest_expanding_word
from .standardize import is_standardized


class ExpansionStuckError(RuntimeError):
    """No expanding word exists for the reported subset at any search depth."""

    def __init__(self, subset: StateSet):
        super().__init__(f"no expanding word exists for {subset}")
        self.subset = subset


class SubsetLattice:
    """BFS tree over {Q.w | w} with shortlex-least reaching words.

    Children are claimed parent-by-parent in frontier order, letter a
    before b, so the recorded word for every subset is the shortlex-least
    word reaching it.
    """

    def __init__(self, dfa: Dfa):
        n = dfa.n
        limit = lattice_limit()
        if n > limit:
            raise CapacityError(
                f"subset lattice needs 2^{n} nodes; limit is n <= {limit} "
                f"(set CREACH_LATTICE_LIMIT to change)"
            )
        self.dfa = dfa
        self.n = n
        dtype = np.uint32 if n <= 32 else np.uint64
        tables = _image_tables(dfa)
        self._byte_tables = {
            letter: [np.array(per_byte, dtype=dtype) for per_byte in tables[letter]]
            for letter in "ab"
        }
        size = 1 << n
        self.full = size - 1
        self.visited = np.zeros(size, dtype=bool)
        self.dist = np.full(size, -1, dtype=np.int32)
        self.parent = np.zeros(size, dtype=dtype)
        self.letter = np.zeros(size, dtype=np.uint8)
        self.visited[self.full] = True
        self.dist[self.full] = 0
        frontier = np.array([self.full], dtype=dtype)
        depth = 0
        while len(frontier):
            depth += 1
            children_a = self._image_vec(frontier, "a")
            children_b = self._image_vec(frontier, "b")
            candidates = np.empty(2 * len(frontier), dtype=dtype)
            candidates[0::2] = children_a
            candidates[1::2] = children_b
            parents = np.repeat(frontier, 2)
            letters = np.zeros(2 * len(frontier), dtype=np.uint8)
            letters[1::2] = 1
            unique, first_pos = np.unique(candidates, return_index=True)
            fresh = ~self.visited[unique]
            unique = unique[fresh]
            first_pos = first_pos[fresh]
            order = np.argsort(first_pos, kind="stable")
            unique = unique[order]
            first_pos = first_pos[order]
            self.visited[unique] = True
            self.dist[unique] = depth
            self.parent[unique] = parents[first_pos]
            self.letter[unique] = letters[first_pos]
            frontier = unique
        self.visited_count = int(self.visited.sum())

    def _image_vec(self, masks: np.ndarray, letter: str) -> np.ndarray:
        per_byte = self._byte_tables[letter]
        out = per_byte[0][masks & 0xFF]
        for j in range(1, len(per_byte)):
            out |= per_byte[j][(masks >> np.uint8(8 * j)) & 0xFF]
        return out

    def reachable(self, mask: int) -> bool:
        return bool(self.visited[mask])

    def dist_to(self, mask: int) -> int | None:
        return int(self.dist[mask]) if self.visited[mask] else None

    def word_to(self, mask: int) -> str | None:
        if not self.visited[mask]:
            return None
        out = []
        while mask != self.full:
            out.append("ab"[self.letter[mask]])
            mask = int(self.parent[mask])
        return "".join(reversed(out))


_cache: "weakref.WeakKeyDictionary[Dfa, SubsetLattice]" = weakref.WeakKeyDictionary()


def subset_lattice(dfa: Dfa) -> SubsetLattice:
    lattice = _cache.get(dfa)
    if lattice is None:
        lattice = _cache[dfa] = SubsetLattice(dfa)
    return lattice


def shortest_reaching_word(dfa: Dfa, S) -> str | None:
    """Shortest (shortlex-least) word with Q.w = S, or None if unreachable."""
    S = as_stateset(S, dfa.n)
    if S.is_empty:
        raise ValueError("subset must be non-empty")
    return subset_lattice(dfa).word_to(S.mask)


def is_completely_reachable(dfa: Dfa) -> bool:
    """Whether every non-empty subset of the states is some image Q.w."""
    lattice = subset_lattice(dfa)
    return lattice.visited_count == (1 << dfa.n) - 1


@dataclass(frozen=True)
class DonViolation:
    subset: StateSet
    length: int
    bound: int


@dataclass(frozen=True)
class DonSizeRow:
    k: int
    reachable: int
    worst_length: int | None
    bound: int


@dataclass(frozen=True)
class DonReport:
    """Exhaustive check of the n(n-k) reachability bound.

    ``violations`` lists every reachable subset whose shortest reaching
    word is longer than n(n-k); it is empty exactly when all reachable
    subsets satisfy the bound.  ``unreachable`` is empty iff the automaton
    is completely reachable.
    """

    n: int
    per_size: tuple[DonSizeRow, ...]
    violations: tuple[DonViolation, ...]
    unreachable: tuple[StateSet, ...]

    @property
    def completely_reachable(self) -> bool:
        return not self.unreachable

    @property
    def holds(self) -> bool:
        return not self.violations


def verify_don(dfa: Dfa) -> DonReport:
    """Check every reachable subset against the n(n-k) length bound."""
    lattice = subset_lattice(dfa)
    n = dfa.n
    reached = np.flatnonzero(lattice.visited).astype(np.uint64)
    sizes = np.bitwise_count(reached).astype(np.int64)
    lengths = lattice.dist[reached].astype(np.int64)
    bounds = n * (n - sizes)

    rows = []
    counts = np.bincount(sizes, minlength=n + 1)
    worst = np.full(n + 1, -1, dtype=np.int64)
    np.maximum.at(worst, sizes, lengths)
    for k in range(1, n + 1):
        rows.append(
            DonSizeRow(
                k=k,
                reachable=int(counts[k]),
                worst_length=int(worst[k]) if counts[k] else None,
                bound=n * (n - k),
            )
        )

    bad = np.flatnonzero(lengths > bounds)
    violations = tuple(
        DonViolation(StateSet(int(reached[j]), n), int(lengths[j]), int(bounds[j]))
        for j in bad
    )
    missing = np.flatnonzero(~lattice.visited)
    missing = missing[missing != 0]
    unreachable = tuple(StateSet(int(m), n) for m in missing)
    return DonReport(n, tuple(rows), violations, unreachable)


def shortest_reset_word(dfa: Dfa) -> str | None:
    """Shortest word collapsing Q to a singleton, or None if none exists.

    Above the lattice limit this falls back to greedy pairwise merging: the
    answer is still a valid reset word (or None exactly when the automaton
    is not synchronizing) but no longer the shortest one.
    """
    if dfa.n <= lattice_limit():
        lattice = subset_lattice(dfa)
        best: tuple[int, str] | None = None
        for q in range(dfa.n):
            word = lattice.word_to(1 << q)
            if word is not None and (best is None or (len(word), word) < best):
                best = (len(word), word)
        return best[1] if best else None
    return _greedy_reset_word(dfa)


def _greedy_reset_word(dfa: Dfa) -> str | None:
    n = dfa.n
    tables = {"a": dfa.a, "b": dfa.b}
    # Reverse BFS over unordered pairs from the already-merged sentinel.
    merge_letter: dict[tuple[int, int], str] = {}
    merge_dist: dict[tuple[int, int], int] = {}
    reverse: dict[tuple[int, int] | None, list[tuple[tuple[int, int], str]]] = {}
    for p in range(n):
        for q in range(p + 1, n):
            for letter, table in tables.items():
                tp, tq = table[p], table[q]
                key = None if tp == tq else (min(tp, tq), max(tp, tq))
                reverse.setdefault(key, []).append(((p, q), letter))
    queue: deque[tuple[int, int] | None] = deque([None])
    while queue:
        node = queue.popleft()
        base = 0 if node is None else merge_dist[node]
        for pair, letter in reverse.get(node, ()):
            if pair not in merge_dist:
                merge_dist[pair] = base + 1
                merge_letter[pair] = letter
                queue.append(pair)

    current = set(range(n))
    parts: list[str] = []
    while len(current) > 1:
        pairs = [(p, q) for p in current for q in current if p < q]
        if any(pair not in merge_dist for pair in pairs):
            # Some pair of live states can never be merged, so no word
            # collapses the current set, let alone Q.
            return None
        _, (p, q) = min((merge_dist[pair], pair) for pair in pairs)
        while p != q:
            letter = merge_letter[(min(p, q), max(p, q))]
            parts.append(letter)
            table = tables[letter]
            current = {table[s] for s in current}
            p, q = table[p], table[q]
    return "".join(parts)


@dataclass(frozen=True)
class ExpansionStep:
    subset: StateSet
    word: str
    expanded: StateSet


@dataclass(frozen=True)
class ExpansionTrace:
    """A chain of strict expansions from S up to Q.

    ``final_word`` is the step words multiplied right-to-left, so that the
    image of the full state set under it is the original target subset.
    """

    steps: tuple[ExpansionStep, ...]
    final_word: str


def reach_via_expansion(dfa: Dfa, S, step_cap: int | None = None) -> ExpansionTrace:
    """Reach S from Q by repeatedly expanding, preferring orbit words.

    Each step grows the current set strictly, so there are at most n - |S|
    steps; when every step word has length <= n the final word has length
    <= n(n - |S|).  Step words are searched with the given cap first, then
    n, 2n, and finally without bound; only when even the unbounded search
    fails does this raise ExpansionStuckError with the stuck subset.
    """
    n = dfa.n
    S = as_stateset(S, dfa.n)
    if S.is_empty:
        raise ValueError("subset must be non-empty")
    if step_cap is None:
        step_cap = n
    escalation: list[int | None] = sorted({step_cap, n, 2 * n})
    escalation.append(None)
    standardized = is_standardized(dfa)

    current = S
    steps: list[ExpansionStep] = []
    words: list[str] = []
    while not current.is_full:
        word = orbit_expanding_word(dfa, current) if standardized else None
        if word is None:
            for bound in escalation:
                word = shortest_expanding_word(dfa, current, bound)
                if word is not None:
                    break
        if word is None:
            raise ExpansionStuckError(current)
        result = expands(dfa, word, current)
        assert isinstance(result, ExpansionResult)
        steps.append(ExpansionStep(current, word, result.preimage_witness))
        words.append(word)
        current = result.preimage_witness
    final_word = "".join(reversed(words))
    assert image(dfa, StateSet.full(n), final_word) == S
    return ExpansionTrace(tuple(steps), final_word)


def verify_defect1_product(dfa: Dfa, factors) -> bool:
    """Whether every factor, taken alone, has defect exactly 1."""
    factors = list(factors)
    if not factors:
        raise ValueError("factors must be non-empty")
    return all(word_profile(dfa, f).defect == 1 for f in factors)


def defect1_factorization(
    dfa: Dfa, word: str, parts: int, max_factor_len: int | None = None
) -> tuple[str, ...] | None:
    """Split word into exactly ``parts`` factors of defect 1, if possible.

    ``max_factor_len`` caps every factor except the rightmost.  The search
    over cut points is exhaustive, so None means no such factorization
    exists.
    """
    check_word(word)
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    n = dfa.n
    length = len(word)

    if n <= 255:
        ta, tb = _padded_tables(dfa)
        ident = bytes(range(n))

        def defect_row(i: int) -> list[bool]:
            row = [False] * (length + 1)
            t = ident
            for j in range(i + 1, length + 1):
                t = t.translate(ta if word[j - 1] == "a" else tb)
                row[j] = n - len(set(t)) == 1
            return row

    else:
        def defect_row(i: int) -> list[bool]:
            row = [False] * (length + 1)
            t = identity(n)
            for j in range(i + 1, length + 1):
                table = dfa.table(word[j - 1])
                t = tuple(table[x] for x in t)
                row[j] = n - len(set(t)) == 1
            return row

    ok = [defect_row(i) for i in range(length)]

    back: list[dict[int, int]] = [dict() for _ in range(parts + 1)]
    back[0][0] = -1
    for m in range(1, parts + 1):
        capped = max_factor_len if m < parts else None
        for i in back[m - 1]:
            hi = length if capped is None else min(length, i + capped)
            for j in range(i + 1, hi + 1):
                if ok[i][j] and j not in back[m]:
                    back[m][j] = i
    if length not in back[parts]:
        return None
    cuts = [length]
    for m in range(parts, 0, -1):
        cuts.append(back[m][cuts[-1]])
    cuts.reverse()
    return tuple(word[cuts[m] : cuts[m + 1]] for m in range(parts))
