"""Bundled example automata.

All five are binary DFAs with b acting as the +1 cycle; they exercise the
interesting regimes: full orbit subgroup (E6), singleton orbit with an even
subgroup (E12), a perfectly reachable automaton with a subset that is not
n-expandable (E21), a two-element orbit with gcd chain 24, 6 (E48), and a
synchronizing automaton that is not completely reachable (FIG7).
"""

from __future__ import annotations

from .core import Dfa, cyclic_shift


def _with_fixups(n: int, fixups: dict[int, int]) -> tuple[int, ...]:
    table = list(range(n))
    for q, target in fixups.items():
        table[q] = target
    return tuple(table)


def _cyclic_dfa(n: int, a: tuple[int, ...]) -> Dfa:
    return Dfa(n, a, cyclic_shift(n))


_BUILTINS = {
    "E6": _cyclic_dfa(6, (2, 1, 5, 3, 4, 2)),
    "E12": _cyclic_dfa(12, (10, 2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11)),
    "E21": _cyclic_dfa(21, _with_fixups(21, {0: 14, 7: 18, 18: 7})),
    "E48": _cyclic_dfa(48, _with_fixups(48, {0: 24, 18: 24, 24: 18, 13: 14, 14: 13, 30: 32, 32: 30})),
    "FIG7": _cyclic_dfa(6, (3, 2, 1, 3, 4, 5)),
}

BUILTIN_NAMES = tuple(_BUILTINS)

# A 132-letter product of defect-1 blocks whose image in E21 is {3, 10, 17},
# comfortably below the 21*(21-3) = 378 length bound.
E21_LONG_REACH_WORD = "(ab^15ab^3ab^4)^2ab^4(ab^3(ab^4)^2)^2ab^3ab^4ab^7(ab^4)^2ab^14ab^6"


def builtin_example(name: str) -> Dfa:
    """Look up a bundled automaton by name (case-insensitive)."""
    dfa = _BUILTINS.get(name.upper())
    if dfa is None:
        raise ValueError(f"unknown example {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    return dfa
