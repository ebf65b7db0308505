"""Text formats: exponent word notation, JSON automaton files, DOT export."""

from __future__ import annotations

import json
from itertools import groupby

from .core import Dfa, LETTERS, check_word, cyclic_shift
from .digraph import Digraph

_MAX_EXPANDED_WORD = 1_000_000


class WordParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class AutomatonParseError(ValueError):
    pass


def parse_word(text: str) -> str:
    """Expand exponent notation like "(ab^10)^4a" into a plain word.

    Grammar: a sequence of items, where an item is 'a', 'b', or a
    parenthesized sequence, optionally followed by '^' and a positive
    integer.  The empty string parses to the empty word.
    """

    def sequence(i: int) -> tuple[str, int]:
        parts: list[str] = []
        total = 0
        while i < len(text) and text[i] != ")":
            c = text[i]
            if c in LETTERS:
                item = c
                i += 1
            elif c == "(":
                item, i = sequence(i + 1)
                if i >= len(text) or text[i] != ")":
                    raise WordParseError("unbalanced parenthesis", i)
                i += 1
            else:
                raise WordParseError(f"unexpected character {c!r}", i)
            if i < len(text) and text[i] == "^":
                j = i + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j == i + 1:
                    raise WordParseError("bad exponent", i)
                k = int(text[i + 1 : j])
                if k < 1:
                    raise WordParseError("bad exponent", i)
                if k * len(item) > _MAX_EXPANDED_WORD:
                    raise WordParseError("expanded word too long", i)
                item *= k
                i = j
            parts.append(item)
            total += len(item)
            if total > _MAX_EXPANDED_WORD:
                raise WordParseError("expanded word too long", i)
        return "".join(parts), i

    word, end = sequence(0)
    if end != len(text):
        raise WordParseError("unbalanced parenthesis", end)
    return word


def render_word(w: str) -> str:
    """Canonical exponent form: maximal letter runs, exponents for runs >= 2.

    parse_word(render_word(w)) == w for every word; parentheses are never
    introduced.
    """
    check_word(w)
    parts = []
    for letter, run in groupby(w):
        k = sum(1 for _ in run)
        parts.append(letter if k == 1 else f"{letter}^{k}")
    return "".join(parts)


def parse_automaton(text: str) -> Dfa:
    """Parse a JSON automaton file: {"n": int, "a": [...], "b": [...] | "cyclic"}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonParseError(
            f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc
    if not isinstance(doc, dict):
        raise AutomatonParseError(f"top level must be an object, got {type(doc).__name__}")
    unknown = sorted(set(doc) - {"n", "a", "b"})
    if unknown:
        raise AutomatonParseError(f"unknown field(s): {', '.join(unknown)}")
    missing = sorted({"n", "a", "b"} - set(doc))
    if missing:
        raise AutomatonParseError(f"missing field(s): {', '.join(missing)}")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise AutomatonParseError(f'field "n" must be a positive integer, got {n!r}')

    def read_table(field: str) -> tuple[int, ...]:
        value = doc[field]
        if value == "cyclic":
            if field != "b":
                raise AutomatonParseError('only field "b" may be the token "cyclic"')
            return cyclic_shift(n)
        if not isinstance(value, list):
            raise AutomatonParseError(f'field "{field}" must be an array')
        if len(value) != n:
            raise AutomatonParseError(f'field "{field}" has length {len(value)}, expected n = {n}')
        for i, entry in enumerate(value):
            if not isinstance(entry, int) or isinstance(entry, bool) or not 0 <= entry < n:
                raise AutomatonParseError(
                    f'field "{field}"[{i}] = {entry!r} is not a state in 0..{n - 1}'
                )
        return tuple(value)

    return Dfa(n, read_table("a"), read_table("b"))


def render_automaton(dfa: Dfa) -> str:
    """The JSON file form of a DFA, using the "cyclic" shorthand when it applies."""
    b = "cyclic" if dfa.b == cyclic_shift(dfa.n) else list(dfa.b)
    return json.dumps({"n": dfa.n, "a": list(dfa.a), "b": b})


def export_dot(g: Digraph, name: str = "G", rankdir: str | None = None) -> str:
    """Deterministic DOT text: vertices ascending, edges sorted by (source, target).

    Word labels, when present, are rendered in exponent notation.  Output
    is byte-stable for equal inputs.
    """
    lines = [f"digraph {name} {{"]
    if rankdir is not None:
        lines.append(f"  rankdir={rankdir};")
    for v in range(g.n):
        lines.append(f"  {v};")
    for source, target in sorted(g.edges):
        label = g.label_of(source, target)
        if label is None:
            lines.append(f"  {source} -> {target};")
        else:
            lines.append(f'  {source} -> {target} [label="{render_word(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
