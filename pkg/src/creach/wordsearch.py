"""Shortlex breadth-first enumeration of the distinct transformations of a DFA.

Word searches (expanding words, extending words, forced edges) depend only
on the transformation a word induces, so the tree of words is pruned to one
shortlex-least representative per transformation: least representatives are
prefix-closed, hence expanding only them still discovers every reachable
transformation, in shortlex order of its least word.

The enumeration is cached per DFA and extended on demand, with lazily built
numpy side arrays (excluded/duplicate masks and preimage-count rows) so
that scans over hundreds of thousands of transformations stay vectorized.
"""

from __future__ import annotations

import weakref
from array import array

import numpy as np

from .core import CapacityError, Dfa, _padded_tables

_MASK_LIMIT = 64


class WordBfs:
    def __init__(self, dfa: Dfa):
        if dfa.n > _MASK_LIMIT:
            raise CapacityError(
                f"word search keeps per-transformation bitmasks; needs n <= {_MASK_LIMIT}, got {dfa.n}"
            )
        self.dfa = dfa
        self.n = dfa.n
        self._ta, self._tb = _padded_tables(dfa)
        ident = bytes(range(self.n))
        self.maps: list[bytes] = [ident]
        self._parents = array("i", [-1])
        self._letters = bytearray(1)
        self._bounds = [0, 1]  # maps[_bounds[L]:_bounds[L+1]] = least reps of length L
        self._seen = {ident}
        self.exhausted = False
        self._excl: list[np.ndarray] = []
        self._dupl: list[np.ndarray] = []
        self._counts: list[np.ndarray] = []

    @property
    def depth(self) -> int:
        """Largest word length whose level has been materialized."""
        return len(self._bounds) - 2

    def ensure_depth(self, length: int) -> None:
        while self.depth < length and not self.exhausted:
            lo, hi = self._bounds[-2], self._bounds[-1]
            maps = self.maps
            seen = self._seen
            parents = self._parents
            letters = self._letters
            ta, tb = self._ta, self._tb
            # Children are generated parent-by-parent, a before b, which is
            # exactly the lex order of the candidate words; first claim wins.
            for i in range(lo, hi):
                t = maps[i]
                c = t.translate(ta)
                if c not in seen:
                    seen.add(c)
                    maps.append(c)
                    parents.append(i)
                    letters.append(0)
                c = t.translate(tb)
                if c not in seen:
                    seen.add(c)
                    maps.append(c)
                    parents.append(i)
                    letters.append(1)
            self._bounds.append(len(maps))
            if self._bounds[-1] == self._bounds[-2]:
                self.exhausted = True

    def level_slice(self, length: int) -> tuple[int, int]:
        if length + 1 >= len(self._bounds):
            end = self._bounds[-1]
            return end, end
        return self._bounds[length], self._bounds[length + 1]

    def word_at(self, i: int) -> str:
        out = []
        while self._parents[i] >= 0:
            out.append("ab"[self._letters[i]])
            i = self._parents[i]
        return "".join(reversed(out))

    def map_at(self, i: int) -> bytes:
        return self.maps[i]

    def _materialize(self, length: int) -> None:
        while len(self._excl) <= length:
            level = len(self._excl)
            lo, hi = self.level_slice(level)
            if lo == hi:
                empty_mask = np.zeros(0, dtype=np.uint64)
                self._excl.append(empty_mask)
                self._dupl.append(empty_mask)
                self._counts.append(np.zeros((0, self.n), dtype=np.uint8))
                continue
            rows = np.frombuffer(b"".join(self.maps[lo:hi]), dtype=np.uint8).reshape(-1, self.n)
            counts = _row_counts(rows, self.n)
            powers = np.uint64(1) << np.arange(self.n, dtype=np.uint64)
            self._excl.append((counts == 0).astype(np.uint64) @ powers)
            self._dupl.append((counts >= 2).astype(np.uint64) @ powers)
            self._counts.append(counts)

    def level_profiles(self, length: int) -> tuple[np.ndarray, np.ndarray]:
        """Per-transformation excluded and duplicate masks for one level."""
        self.ensure_depth(length)
        self._materialize(length)
        return self._excl[length], self._dupl[length]

    def level_counts(self, length: int) -> np.ndarray:
        """Per-transformation preimage-count rows for one level."""
        self.ensure_depth(length)
        self._materialize(length)
        return self._counts[length]


def _row_counts(rows: np.ndarray, n: int) -> np.ndarray:
    """For each transformation row, how many preimages each state has."""
    total = len(rows)
    out = np.empty((total, n), dtype=np.uint8)
    chunk = 1 << 15
    for start in range(0, total, chunk):
        block = rows[start : start + chunk].astype(np.int64)
        size = len(block)
        base = (np.arange(size, dtype=np.int64) * n)[:, None]
        counts = np.bincount((block + base).ravel(), minlength=size * n)
        out[start : start + size] = counts.reshape(size, n)
    return out


_cache: "weakref.WeakKeyDictionary[Dfa, WordBfs]" = weakref.WeakKeyDictionary()


def word_bfs(dfa: Dfa) -> WordBfs:
    """The cached enumeration for this DFA (keyed by value, weakly held)."""
    bfs = _cache.get(dfa)
    if bfs is None:
        bfs = _cache[dfa] = WordBfs(dfa)
    return bfs


def iter_lengths(bfs: WordBfs, max_len: int | None, start: int = 1):
    """Yield word lengths start.. while levels keep existing, up to max_len."""
    length = start
    while max_len is None or length <= max_len:
        bfs.ensure_depth(length)
        if length > bfs.depth:
            return
        yield length
        length += 1
