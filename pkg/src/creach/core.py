"""Core machinery for binary DFAs: words, state subsets, transformations.

States are the residues 0..n-1.  The two input letters are written "a" and
"b" and a word is a plain Python string over that alphabet, so the empty
word is "" and shortlex order is the tuple order (len(w), w) with a < b.
"""

from __future__ import annotations

import functools
import os
from collections.abc import Iterable
from dataclasses import dataclass

LETTERS = "ab"
_LETTER_SET = frozenset(LETTERS)

DEFAULT_LATTICE_LIMIT = 22
LATTICE_LIMIT_ENV = "CREACH_LATTICE_LIMIT"


class StateRangeError(ValueError):
    """A state index lies outside 0..n-1."""


class CapacityError(RuntimeError):
    """An exact computation would blow past its configured size budget."""


def lattice_limit() -> int:
    """Largest n for which subset-lattice searches (2^n nodes) are allowed.

    Overridable through the CREACH_LATTICE_LIMIT environment variable.
    """
    raw = os.environ.get(LATTICE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_LATTICE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{LATTICE_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{LATTICE_LIMIT_ENV} must be positive, got {value}")
    return value


def mod_add(q: int, x: int, n: int) -> int:
    """Addition modulo n; the circle structure all state arithmetic uses."""
    return (q + x) % n


def cyclic_shift(n: int) -> tuple[int, ...]:
    """The transformation q -> q+1 (mod n)."""
    return tuple((q + 1) % n for q in range(n))


def check_word(w: str) -> str:
    """Validate that w is a word over {a, b}; returns it unchanged."""
    if not isinstance(w, str):
        raise TypeError(f"word must be a str over 'ab', got {type(w).__name__}")
    if not set(w) <= _LETTER_SET:
        bad = sorted(set(w) - _LETTER_SET)
        raise ValueError(f"word may only contain 'a' and 'b', found {bad}")
    return w


def shortlex_key(w: str) -> tuple[int, str]:
    return (len(w), w)


@dataclass(frozen=True)
class StateSet:
    """A subset of the states 0..n-1, stored as a bitmask.

    All set algebra is O(1) on the mask, which is what makes 2^n-scale
    subset searches affordable; higher layers rely on that.
    """

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ambient state count must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise StateRangeError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> "StateSet":
        mask = 0
        for q in members:
            if not 0 <= q < n:
                raise StateRangeError(f"state {q} out of range 0..{n - 1}")
            mask |= 1 << q
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls((1 << n) - 1, n)

    def __contains__(self, q: int) -> bool:
        return 0 <= q < self.n and bool(self.mask >> q & 1)

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.mask | self._align(other).mask, self.n)

    def __and__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.mask & self._align(other).mask, self.n)

    def __sub__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.mask & ~self._align(other).mask, self.n)

    def _align(self, other: "StateSet") -> "StateSet":
        if not isinstance(other, StateSet):
            raise TypeError(f"expected StateSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mismatched ambient sizes {self.n} and {other.n}")
        return other

    def complement(self) -> "StateSet":
        return StateSet(~self.mask & ((1 << self.n) - 1), self.n)

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        inner = ", ".join(str(q) for q in self)
        return f"StateSet({{{inner}}}, n={self.n})"


def as_stateset(S, n: int) -> StateSet:
    """Coerce a StateSet or an iterable of states into a StateSet over n."""
    if isinstance(S, StateSet):
        if S.n != n:
            raise ValueError(f"subset is over {S.n} states, automaton has {n}")
        return S
    return StateSet.of(S, n)


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic automaton on 0..n-1 with letters a and b."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.n < 1:
            raise ValueError(f"state count must be positive, got {self.n}")
        for name in LETTERS:
            table = getattr(self, name)
            if len(table) != self.n:
                raise ValueError(f"table for {name!r} has length {len(table)}, expected {self.n}")
            for q, target in enumerate(table):
                if not 0 <= target < self.n:
                    raise StateRangeError(f"{name}[{q}] = {target} out of range 0..{self.n - 1}")

    def table(self, letter: str) -> tuple[int, ...]:
        if letter == "a":
            return self.a
        if letter == "b":
            return self.b
        raise ValueError(f"unknown letter {letter!r}")

    def subset(self, members: Iterable[int]) -> StateSet:
        return StateSet.of(members, self.n)

    @property
    def states(self) -> StateSet:
        return StateSet.full(self.n)


Transformation = tuple[int, ...]


def identity(n: int) -> Transformation:
    return tuple(range(n))


def compose(t: Transformation, u: Transformation) -> Transformation:
    """Apply t first, then u."""
    return tuple(u[x] for x in t)


def is_permutation(t: Transformation) -> bool:
    return len(set(t)) == len(t)


@functools.lru_cache(maxsize=64)
def _padded_tables(dfa: Dfa) -> tuple[bytes, bytes]:
    """256-byte letter tables so words compose via bytes.translate (n <= 255)."""
    pad = bytes(range(dfa.n, 256))
    return bytes(dfa.a) + pad, bytes(dfa.b) + pad


@functools.lru_cache(maxsize=64)
def _image_tables(dfa: Dfa) -> dict[str, list[list[int]]]:
    """Per letter and per byte of a subset mask, the combined image mask.

    image(S, letter) is then an OR of ceil(n/8) table lookups.
    """
    nbytes = (dfa.n + 7) // 8
    out: dict[str, list[list[int]]] = {}
    for letter in LETTERS:
        table = dfa.table(letter)
        per_byte = []
        for j in range(nbytes):
            entries = []
            for value in range(256):
                m = 0
                for bit in range(8):
                    q = 8 * j + bit
                    if q < dfa.n and value >> bit & 1:
                        m |= 1 << table[q]
                entries.append(m)
            per_byte.append(entries)
        out[letter] = per_byte
    return out


def _check_state(dfa: Dfa, q: int) -> int:
    if not 0 <= q < dfa.n:
        raise StateRangeError(f"state {q} out of range 0..{dfa.n - 1}")
    return q


def apply_word(dfa: Dfa, q: int, w: str) -> int:
    """The state q.w, following the letter-by-letter recursion."""
    _check_state(dfa, q)
    check_word(w)
    a, b = dfa.a, dfa.b
    for c in w:
        q = a[q] if c == "a" else b[q]
    return q


def _image_mask(dfa: Dfa, mask: int, w: str) -> int:
    tables = _image_tables(dfa)
    nbytes = (dfa.n + 7) // 8
    for c in w:
        per_byte = tables[c]
        out = 0
        rest = mask
        for j in range(nbytes):
            out |= per_byte[j][rest & 0xFF]
            rest >>= 8
        mask = out
    return mask


def image(dfa: Dfa, S, w: str) -> StateSet:
    """The set S.w = {q.w | q in S}."""
    S = as_stateset(S, dfa.n)
    check_word(w)
    return StateSet(_image_mask(dfa, S.mask, w), dfa.n)


def preimage(dfa: Dfa, S, w: str) -> StateSet:
    """The full preimage {q | q.w in S}."""
    S = as_stateset(S, dfa.n)
    check_word(w)
    mask = S.mask
    for c in reversed(w):
        table = dfa.table(c)
        mask = sum(1 << q for q in range(dfa.n) if mask >> table[q] & 1)
    return StateSet(mask, dfa.n)


def transformation_of(dfa: Dfa, w: str) -> Transformation:
    """The transformation of the state set induced by the word w."""
    check_word(w)
    if dfa.n <= 255:
        ta, tb = _padded_tables(dfa)
        t = bytes(range(dfa.n))
        for c in w:
            t = t.translate(ta if c == "a" else tb)
        return tuple(t)
    t = identity(dfa.n)
    for c in w:
        t = compose(t, dfa.table(c))
    return t


@dataclass(frozen=True)
class WordProfile:
    """Excluded and duplicate states of a word, and its defect.

    excl(w) = Q \\ Q.w, dupl(w) = states with at least two w-preimages,
    defect = |excl(w)|.  The word acts as a permutation iff defect is 0,
    in which case dupl(w) is empty as well.
    """

    excl: StateSet
    dupl: StateSet

    @property
    def defect(self) -> int:
        return len(self.excl)


def profile_of_map(t: Transformation, n: int) -> WordProfile:
    counts = [0] * n
    for target in t:
        counts[target] += 1
    excl = 0
    dupl = 0
    for q, c in enumerate(counts):
        if c == 0:
            excl |= 1 << q
        elif c >= 2:
            dupl |= 1 << q
    return WordProfile(StateSet(excl, n), StateSet(dupl, n))


def word_profile(dfa: Dfa, w: str) -> WordProfile:
    return profile_of_map(transformation_of(dfa, w), dfa.n)


def transition_monoid(dfa: Dfa, cap: int) -> frozenset[Transformation] | None:
    """Closure of {id, a, b} under composition, or None once it exceeds cap.

    The closure can reach n^n elements, so this exists for small-instance
    checks only; the explicit cap keeps it from being an accidental bomb.
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    if dfa.n <= 255:
        ta, tb = _padded_tables(dfa)
        ident = bytes(range(dfa.n))
        seen = {ident}
        stack = [ident]
        while stack:
            t = stack.pop()
            for tab in (ta, tb):
                c = t.translate(tab)
                if c not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(c)
                    stack.append(c)
        return frozenset(tuple(t) for t in seen)
    seen_t: set[Transformation] = {identity(dfa.n)}
    stack_t = [identity(dfa.n)]
    while stack_t:
        t = stack_t.pop()
        for table in (dfa.a, dfa.b):
            c = compose(t, table)
            if c not in seen_t:
                if len(seen_t) >= cap:
                    return None
                seen_t.add(c)
                stack_t.append(c)
    return frozenset(seen_t)
