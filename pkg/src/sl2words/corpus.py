"""Enumeration of words with configurations and their table classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .arcs import intersection_polynomial
from .words import Word, class_moves, is_conf_connected

__all__ = [
    "words_with_config",
    "conf_connected_words",
    "table_classes",
    "TableRow",
    "table_rows",
]

State = tuple[int, ...]


def _step(state: State, b: int) -> list[State]:
    """Letter ``b`` either closes an open arc from ``b-2`` or opens one to ``b+2``."""
    out = []
    k = b // 2
    if k >= 1 and state[k - 1] > 0:
        s = list(state)
        s[k - 1] -= 1
        out.append(tuple(s))
    if k < len(state):
        s = list(state)
        s[k] += 1
        out.append(tuple(s))
    return out


def words_with_config(length: int) -> Iterator[Word]:
    """Words of the given even length, least letter 0, admitting a configuration.

    Words come out in lexicographic order.
    """
    if length % 2 or length <= 0:
        return
    top = length  # letters 0..length suffice for a matching of length/2 arcs
    ncolors = top // 2

    def rec(prefix: list[int], states: frozenset[State], has_zero: bool) -> Iterator[Word]:
        left = length - len(prefix)
        if left == 0:
            if has_zero and (0,) * ncolors in states:
                yield tuple(prefix)
            return
        for b in range(0, top + 1, 2):
            nxt = set()
            for s in states:
                for t in _step(s, b):
                    if sum(t) <= left - 1:
                        nxt.add(t)
            if nxt:
                prefix.append(b)
                yield from rec(prefix, frozenset(nxt), has_zero or b == 0)
                prefix.pop()

    yield from rec([], frozenset({(0,) * ncolors}), False)


def conf_connected_words(length: int, progress: Callable[[str], None] | None = None) -> list[Word]:
    out = []
    for k, w in enumerate(words_with_config(length)):
        if progress and k % 20000 == 0 and k:
            progress(f"length {length}: scanned {k} words")
        if is_conf_connected(w):
            out.append(w)
    return out


def table_classes(length: int, progress: Callable[[str], None] | None = None) -> list[list[Word]]:
    """Conf-connected words grouped under slides, omega and commutations.

    Classes are returned sorted by their least member, each class sorted.
    """
    words = conf_connected_words(length, progress)
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, w in enumerate(words):
        for v in class_moves(w):
            j = index.get(v)
            if j is None:
                continue
            a, b = find(k), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[Word]] = {}
    for k, w in enumerate(words):
        groups.setdefault(find(k), []).append(w)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class TableRow:
    word: Word
    h: int
    conf_count: int
    poly: tuple[int, ...]
    class_size: int = 1


def table_rows(
    length: int,
    h_func: Callable[[Word], int],
    progress: Callable[[str], None] | None = None,
) -> list[TableRow]:
    """One row per class, sorted by h and |Conf| descending, then by word."""
    rows = []
    classes = table_classes(length, progress)
    for k, cls in enumerate(classes):
        w = cls[0]
        if progress:
            progress(f"length {length}: class {k + 1}/{len(classes)}")
        poly = tuple(intersection_polynomial(w))
        rows.append(TableRow(w, h_func(w), poly and sum(poly) or 0, poly, len(cls)))
    rows.sort(key=lambda r: (-r.h, -r.conf_count, r.word))
    return rows
