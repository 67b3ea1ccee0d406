"""Arc configurations of words and their distinguished subclasses.

Positions are 1-based.  An arc ``(i, j)`` with ``i < j`` joins letters
``a_i`` and ``a_j = a_i + 2``; its color is ``a_i + 1``.  A configuration is a
tuple of arcs sorted by left end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .words import DomainError, Word, as_word, positions_of, slide

__all__ = [
    "Arc",
    "ArcConfig",
    "GeneralizedProduct",
    "iter_configs",
    "all_configs",
    "count_configs",
    "has_config",
    "arc_count_by_color",
    "arc_count_by_color_right",
    "crossings",
    "is_reducible_crossing",
    "reducible_crossings",
    "is_catalan",
    "is_irreducible",
    "is_nconf",
    "catalan_configs",
    "irreducible_configs",
    "nconf_configs",
    "relevant_configs",
    "steady_configs",
    "standard_config",
    "intersection_polynomial",
    "left_end_map",
    "left_ends",
    "slide_config",
    "uncolored_matchings",
    "uncolored_catalan",
    "validate_config",
]

Arc = tuple[int, int]
ArcConfig = tuple[Arc, ...]


def _norm(arcs: Iterable[Arc]) -> ArcConfig:
    return tuple(sorted(arcs))


def validate_config(w: Sequence[int], C: Iterable[Arc]) -> ArcConfig:
    C = _norm(C)
    ends = sorted(p for arc in C for p in arc)
    if ends != list(range(1, len(w) + 1)):
        raise DomainError("arcs do not partition the positions")
    for i, j in C:
        if not i < j or w[j - 1] != w[i - 1] + 2:
            raise DomainError(f"({i},{j}) is not an arc of the word")
    return C


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def iter_configs(w: Sequence[int]) -> Iterator[ArcConfig]:
    """All configurations, in lexicographic order of their arc lists."""
    n = len(w)
    if n % 2:
        return
    used = [False] * n
    arcs: list[Arc] = []

    def rec(start: int) -> Iterator[ArcConfig]:
        i = start
        while i < n and used[i]:
            i += 1
        if i == n:
            yield tuple(arcs)
            return
        used[i] = True
        target = w[i] + 2
        for j in range(i + 1, n):
            if not used[j] and w[j] == target:
                used[j] = True
                arcs.append((i + 1, j + 1))
                yield from rec(i + 1)
                arcs.pop()
                used[j] = False
        used[i] = False

    yield from rec(0)


def all_configs(w: Sequence[int]) -> list[ArcConfig]:
    return list(iter_configs(w))


def count_configs(w: Sequence[int]) -> int:
    return _count_configs(tuple(w))


@lru_cache(maxsize=200_000)
def _count_configs(w: Word) -> int:
    if not w:
        return 1
    if len(w) % 2:
        return 0
    a = w[0]
    total = 0
    for j in range(1, len(w)):
        if w[j] == a + 2:
            total += _count_configs(w[1:j] + w[j + 1 :])
    return total


def has_config(w: Sequence[int]) -> bool:
    return standard_config(w) is not None


def arc_count_by_color(w: Sequence[int], b: int) -> int:
    """``sum_j (-1)**j |I_w(b-1-2j)|``: arcs of color ``b`` in any configuration."""
    if b % 2 == 0:
        raise DomainError("colors are odd")
    if not w:
        return 0
    lo = min(w)
    total, j = 0, 0
    while b - 1 - 2 * j >= lo:
        total += (-1) ** j * len(positions_of(w, b - 1 - 2 * j))
        j += 1
    return total


def arc_count_by_color_right(w: Sequence[int], b: int) -> int:
    """The same count read from above: ``sum_j (-1)**j |I_w(b+1+2j)|``."""
    if b % 2 == 0:
        raise DomainError("colors are odd")
    if not w:
        return 0
    hi = max(w)
    total, j = 0, 0
    while b + 1 + 2 * j <= hi:
        total += (-1) ** j * len(positions_of(w, b + 1 + 2 * j))
        j += 1
    return total


# ---------------------------------------------------------------------------
# crossings and classes
# ---------------------------------------------------------------------------


def crossings(C: Sequence[Arc]) -> list[tuple[Arc, Arc]]:
    """Pairs ``((i1,j1),(i2,j2))`` with ``i1 < i2 < j1 < j2``."""
    C = sorted(C)
    out = []
    for x in range(len(C)):
        i1, j1 = C[x]
        for y in range(x + 1, len(C)):
            i2, j2 = C[y]
            if i2 > j1:
                break
            if i2 < j1 < j2:
                out.append((C[x], C[y]))
    return out


def is_reducible_crossing(w: Sequence[int], first: Arc, second: Arc) -> bool:
    (i1, j1), (i2, _) = first, second
    return w[i2 - 1] in (w[i1 - 1], w[j1 - 1])


def reducible_crossings(w: Sequence[int], C: Sequence[Arc]) -> int:
    return sum(1 for x, y in crossings(C) if is_reducible_crossing(w, x, y))


def is_catalan(C: Sequence[Arc]) -> bool:
    return not crossings(C)


def is_irreducible(w: Sequence[int], C: Sequence[Arc]) -> bool:
    return reducible_crossings(w, C) == 0


def is_nconf(w: Sequence[int], C: Sequence[Arc]) -> bool:
    """No crossing between arcs of the same color."""
    return all(w[x[0] - 1] != w[y[0] - 1] for x, y in crossings(C))


def catalan_configs(w: Sequence[int]) -> list[ArcConfig]:
    return [C for C in iter_configs(w) if is_catalan(C)]


def irreducible_configs(w: Sequence[int]) -> list[ArcConfig]:
    return [C for C in iter_configs(w) if is_irreducible(w, C)]


def nconf_configs(w: Sequence[int]) -> list[ArcConfig]:
    return [C for C in iter_configs(w) if is_nconf(w, C)]


def intersection_polynomial(w: Sequence[int]) -> list[int]:
    """Coefficients, lowest degree first, of ``sum_C x**J(C)``; ``[]`` if no configuration."""
    counts: dict[int, int] = {}
    for C in iter_configs(w):
        k = reducible_crossings(w, C)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return []
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def left_ends(C: Sequence[Arc]) -> frozenset[int]:
    return frozenset(i for i, _ in C)


def left_end_map(C: Sequence[Arc], length: int | None = None) -> tuple[int, ...]:
    """Sign sequence with ``+1`` at left ends and ``-1`` at right ends."""
    n = length if length is not None else 2 * len(C)
    signs = [-1] * n
    for i, _ in C:
        signs[i - 1] = 1
    return tuple(signs)


def slide_config(C: Sequence[Arc], length: int) -> ArcConfig:
    """Image of ``C`` under the bijection induced by :func:`slide`."""
    out = []
    for i, j in C:
        if i == 1:
            out.append((j - 1, length))
        else:
            out.append((i - 1, j - 1))
    return _norm(out)


# ---------------------------------------------------------------------------
# standard configuration
# ---------------------------------------------------------------------------


def standard_config(w: Sequence[int]) -> ArcConfig | None:
    """Join the rightmost least letter to the rightmost next letter, repeatedly."""
    if len(w) % 2:
        return None
    alive = list(range(1, len(w) + 1))
    arcs = []
    while alive:
        letters = [w[p - 1] for p in alive]
        a = min(letters)
        i = max(p for p in alive if w[p - 1] == a)
        right = [p for p in alive if w[p - 1] == a + 2]
        if not right:
            return None
        j = max(right)
        if j < i:
            return None
        arcs.append((i, j))
        alive.remove(i)
        alive.remove(j)
    return _norm(arcs)


# ---------------------------------------------------------------------------
# generalized products and steady configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedProduct:
    """Tensor product of strings ``[alpha, ..., beta]``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, b in self.factors:
            if a % 2 or b % 2 or b < a:
                raise DomainError(f"[{a},{b}] is not a string")

    @classmethod
    def from_word(cls, w: Sequence[int]) -> GeneralizedProduct:
        return cls(tuple((a, a) for a in w))

    def expanded(self) -> Word:
        out: list[int] = []
        for a, b in self.factors:
            out.extend(range(a, b + 2, 2))
        return tuple(out)

    def blocks(self) -> list[range]:
        """1-based position ranges of each factor in :meth:`expanded`."""
        out, pos = [], 1
        for a, b in self.factors:
            k = (b - a) // 2 + 1
            out.append(range(pos, pos + k))
            pos += k
        return out

    def steady_shape(self) -> tuple[Word, int, int, Word]:
        """Return ``(w1, c, m, w2)`` for the shape ``w1 [c..c+2m] w2``.

        For a plain word the segment is the rightmost least letter.
        """
        thick = [k for k, (a, b) in enumerate(self.factors) if b > a]
        if len(thick) > 1:
            raise DomainError("steady recursion allows a single thick factor")
        if not self.factors:
            raise DomainError("empty product has no steady shape")
        if thick:
            k = thick[0]
        else:
            letters = [a for a, _ in self.factors]
            lo = min(letters)
            k = max(i for i, a in enumerate(letters) if a == lo)
        c, top = self.factors[k]
        w1 = tuple(a for a, b in self.factors[:k] if a == b)
        w2 = tuple(a for a, b in self.factors[k + 1 :] if a == b)
        if any(a < c for a in w1) or any(a <= c for a in w2):
            raise DomainError("segment must hold the rightmost least letter")
        return w1, c, (top - c) // 2, w2


def relevant_configs(V: GeneralizedProduct) -> list[ArcConfig]:
    """Configurations of ``V`` whose segment arcs all go from the segment into ``w2``."""
    w1, c, m, w2 = V.steady_shape()
    E = V.expanded()
    L = len(w1)
    seg = range(L + 1, L + m + 2)
    right_start = L + m + 2
    out = []
    for C in iter_configs(E):
        ok = True
        for i, j in C:
            if i in seg or j in seg:
                if not (i in seg and j >= right_start):
                    ok = False
                    break
        if ok:
            out.append(C)
    return out


def steady_configs(V: GeneralizedProduct | Sequence[int]) -> list[ArcConfig]:
    """Steady configurations, as arcs on the expanded word, sorted."""
    if not isinstance(V, GeneralizedProduct):
        w = as_word(V)
        if len(w) % 2:
            return []
        return sorted(_steady_plain(_shape_key(w)))
    if all(a == b for a, b in V.factors):
        return steady_configs(tuple(a for a, _ in V.factors))
    w1, c, m, w2 = V.steady_shape()
    return sorted(_steady_segment(tuple(a - c for a in w1), m, tuple(a - c for a in w2)))


def _shape_key(w: Word) -> Word:
    if not w:
        return w
    lo = min(w)
    return tuple(a - lo for a in w)


@lru_cache(maxsize=500_000)
def _steady_plain(w: Word) -> frozenset[ArcConfig]:
    if not w:
        return frozenset([()])
    lo = min(w)
    p = max(i for i, a in enumerate(w) if a == lo)
    w1 = tuple(a - lo for a in w[:p])
    w2 = tuple(a - lo for a in w[p + 1 :])
    return _steady_segment(w1, 0, w2)


def _feasible(w1: Word, m: int, w2: Word) -> bool:
    """Cheap necessary condition for a relevant configuration to exist."""
    letters = w1 + tuple(range(0, 2 * m + 2, 2)) + w2
    if len(letters) % 2:
        return False
    # each segment letter 2k needs a partner 2k+2 strictly inside w2
    need: dict[int, int] = {}
    for k in range(m + 1):
        need[2 * k + 2] = need.get(2 * k + 2, 0) + 1
    have: dict[int, int] = {}
    for a in w2:
        have[a] = have.get(a, 0) + 1
    return all(have.get(b, 0) >= cnt for b, cnt in need.items())


@lru_cache(maxsize=500_000)
def _steady_segment(w1: Word, m: int, w2: Word) -> frozenset[ArcConfig]:
    """Steady configurations of ``w1 [0..2m] w2`` (letters already shifted)."""
    if not w2:
        return frozenset()
    if not _feasible(w1, m, w2):
        return frozenset()
    a, rest = w2[0], w2[1:]
    L = len(w1)
    out: set[ArcConfig] = set()
    if a != 2 * m + 2:
        # the letter a moves left of the segment in the smaller product
        for C in _steady_segment(w1 + (a,), m, rest):
            out.add(_norm((_iota0(i, L, m), _iota0(j, L, m)) for i, j in C))
        return frozenset(out)
    out.update(_steady_segment(w1, m + 1, rest))
    if m >= 1:
        smaller = _steady_segment(w1, m - 1, rest)
    else:
        smaller = _steady_plain_unshifted(w1 + rest)
    cut = L + m
    for C in smaller:
        moved = [(i + 2 if i > cut else i, j + 2 if j > cut else j) for i, j in C]
        moved.append((cut + 1, cut + 2))
        out.add(_norm(moved))
    return frozenset(out)


def _iota0(p: int, L: int, m: int) -> int:
    if p <= L:
        return p
    if p == L + 1:
        return L + m + 2
    if p <= L + m + 2:
        return p - 1
    return p


def _steady_plain_unshifted(w: Word) -> frozenset[ArcConfig]:
    return _steady_plain(_shape_key(w))


# ---------------------------------------------------------------------------
# uncolored matchings
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def uncolored_matchings(n: int) -> tuple[ArcConfig, ...]:
    """All perfect matchings of ``1..2n`` in lexicographic order."""

    def rec(free: tuple[int, ...]) -> Iterator[list[Arc]]:
        if not free:
            yield []
            return
        i = free[0]
        for k in range(1, len(free)):
            j = free[k]
            for rest in rec(free[1:k] + free[k + 1 :]):
                yield [(i, j)] + rest

    return tuple(tuple(M) for M in rec(tuple(range(1, 2 * n + 1))))


@lru_cache(maxsize=64)
def uncolored_catalan(n: int) -> tuple[ArcConfig, ...]:
    """Noncrossing matchings of ``1..2n``.

    Ordered by descending left-end sets, which is ascending order of the
    leading sign sequences ``left_end_map(C)`` with ``+ > -``.
    """
    cats = [C for C in uncolored_matchings(n) if is_catalan(C)]
    return tuple(sorted(cats, key=lambda C: sorted(left_ends(C)), reverse=True))


def _check_slide_equivariance(w: Sequence[int]) -> bool:
    """Internal self-check used by tests."""
    s = slide(w)
    return sorted(slide_config(C, len(w)) for C in iter_configs(w)) == all_configs(s)
