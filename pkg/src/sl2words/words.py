"""Words of even evaluation parameters and their symmetry operations."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DomainError",
    "Word",
    "as_word",
    "parse_word",
    "format_word",
    "normalize_shift",
    "shift",
    "slide",
    "unslide",
    "omega",
    "dual_word",
    "support",
    "content",
    "positions_of",
    "gap_factorize",
    "ConfPartition",
    "conf_components",
    "is_conf_connected",
    "class_moves",
    "canonical_form",
    "word_class",
]

Word = tuple[int, ...]


class DomainError(ValueError):
    """Input outside the domain of an operation."""


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    for a in w:
        if a % 2:
            raise DomainError(f"letter {a} is not even")
    return w


_COMPACT = re.compile(r"^[02468]+$")
_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_word(text: str) -> Word:
    """Parse ``"0,2,-2"`` or the compact digit form ``"020242"``.

    The empty string and ``"()"`` give the empty word.
    """
    s = text.strip()
    if s in ("", "()", "[]"):
        return ()
    if s[0] in "([" and s[-1] in ")]":
        s = s[1:-1]
    if "," in s or s.startswith("-"):
        if not _LIST.match(s):
            raise DomainError(f"cannot parse word {text!r}")
        return as_word(int(t) for t in s.split(","))
    if not s.isdigit():
        raise DomainError(f"cannot parse word {text!r}")
    if not _COMPACT.match(s):
        raise DomainError(f"compact word {text!r} must use the digits 0,2,4,6,8")
    return tuple(int(c) for c in s)


def format_word(w: Sequence[int]) -> str:
    """Compact digits when every letter lies in 0..8, else comma separated."""
    if all(0 <= a <= 8 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def shift(w: Sequence[int], c: int) -> Word:
    return tuple(a + c for a in w)


def normalize_shift(w: Sequence[int]) -> Word:
    if not w:
        return tuple(w)
    m = min(w)
    return tuple(a - m for a in w)


def slide(w: Sequence[int]) -> Word:
    if not w:
        raise DomainError("slide of the empty word")
    return tuple(w[1:]) + (w[0] + 4,)


def unslide(w: Sequence[int]) -> Word:
    if not w:
        raise DomainError("slide of the empty word")
    return (w[-1] - 4,) + tuple(w[:-1])


def omega(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def dual_word(w: Sequence[int]) -> Word:
    return tuple(a + 2 for a in reversed(w))


def support(w: Sequence[int]) -> list[int]:
    return sorted(set(w))


def content(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(w))


def positions_of(w: Sequence[int], b: int) -> list[int]:
    """1-based positions ``I_w(b)`` holding letter ``b``."""
    return [i + 1 for i, a in enumerate(w) if a == b]


def gap_factorize(w: Sequence[int]) -> list[Word]:
    """Split by maximal segments of the support; parts ordered by least letter."""
    sup = support(w)
    groups: list[list[int]] = []
    for a in sup:
        if groups and a - groups[-1][-1] <= 2:
            groups[-1].append(a)
        else:
            groups.append([a])
    parts = []
    for g in groups:
        lo, hi = g[0], g[-1]
        parts.append(tuple(a for a in w if lo <= a <= hi))
    return parts


@dataclass(frozen=True)
class ConfPartition:
    """Blocks of positions (1-based) linked through arcs of configurations.

    ``offsets[i-1]`` is the letter at ``i`` minus the least letter of its block.
    """

    blocks: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]

    def block_of(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise KeyError(i)

    def subwords(self, w: Sequence[int]) -> list[Word]:
        return [tuple(w[i - 1] for i in b) for b in self.blocks]


def conf_components(w: Sequence[int]) -> ConfPartition:
    """Conf-connected components of ``w``.

    Positions lying on no arc of any configuration stay singletons, which
    happens exactly when the word admits no configuration at all.
    """
    from .arcs import all_configs

    n = len(w)
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for C in all_configs(w):
        for i, j in C:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    offsets = [0] * n
    for b in blocks:
        lo = min(w[i - 1] for i in b)
        for i in b:
            offsets[i - 1] = w[i - 1] - lo
    return ConfPartition(blocks, tuple(offsets))


def is_conf_connected(w: Sequence[int]) -> bool:
    if not w:
        return False
    return len(conf_components(w).blocks) == 1


# ---------------------------------------------------------------------------
# equivalence classes used for table keys
# ---------------------------------------------------------------------------


def class_moves(w: Word) -> list[Word]:
    """Neighbours of ``w`` up to shift: slides both ways, omega, commutations."""
    out = []
    if w:
        out.append(normalize_shift(slide(w)))
        out.append(normalize_shift(unslide(w)))
    out.append(normalize_shift(omega(w)))
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a != b and abs(a - b) != 2:
            out.append(w[:i] + (b, a) + w[i + 2 :])
    return out


def word_class(w: Sequence[int]) -> set[Word]:
    """All shift-normalized words reachable by slides, omega and commutations.

    The moves preserve configurations, so the class is finite for a
    conf-connected word. Other words can drift apart without bound, as
    ``(0, 8) -> (8, 0) -> (0, 12) -> ...`` shows, and are rejected.
    """
    start = normalize_shift(as_word(w))
    if not is_conf_connected(start):
        raise DomainError(f"{format_word(start)} is not conf-connected; its class is infinite")
    seen = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for y in class_moves(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def canonical_form(w: Sequence[int]) -> Word:
    """Lexicographically least member of the class of ``w``."""
    return min(word_class(w))
