"""Formal q-characters of strings and words, composition factors and h_char."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .words import DomainError, as_word, normalize_shift

__all__ = [
    "EllMonomial",
    "QCharacter",
    "String",
    "StringSet",
    "is_string",
    "general_position",
    "eval_module_qchar",
    "string_set_qchar",
    "word_qchar",
    "h_char_coeff",
    "h_char_closed",
    "dominant_factorize",
    "dominant_monomial",
    "peel_composition_factors",
    "two_string_product_sequences",
    "overpartition_class_count",
    "overpartition_series",
    "is_right_negative",
]

String = tuple[int, int]
StringSet = tuple[String, ...]


@dataclass(frozen=True, order=True)
class EllMonomial:
    """Product of ``1_a ** e``, stored as sorted ``(a, e)`` pairs with ``e != 0``."""

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, m: Mapping[int, int]) -> "EllMonomial":
        return cls(tuple(sorted((a, e) for a, e in m.items() if e)))

    @classmethod
    def one(cls) -> "EllMonomial":
        return cls(())

    def as_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def __mul__(self, other: "EllMonomial") -> "EllMonomial":
        m = self.as_map()
        for a, e in other.exponents:
            m[a] = m.get(a, 0) + e
        return EllMonomial.from_map(m)

    def inverse(self) -> "EllMonomial":
        return EllMonomial(tuple((a, -e) for a, e in self.exponents))

    def is_one(self) -> bool:
        return not self.exponents

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def peel_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        """Total degree first, then letters read from the top down."""
        return self.degree, tuple(sorted(self.exponents, reverse=True))

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for a, e in self.exponents:
            parts.append(f"1_{a}" if e == 1 else f"1_{a}^{e}")
        return " ".join(parts)


class QCharacter:
    """Multiset of ell-monomials with positive multiplicities."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[EllMonomial, int] | None = None) -> None:
        self.terms: dict[EllMonomial, int] = {}
        for m, c in (terms or {}).items():
            if c < 0:
                raise DomainError("negative multiplicity in a q-character")
            if c:
                self.terms[m] = c

    @classmethod
    def one(cls) -> "QCharacter":
        return cls({EllMonomial.one(): 1})

    def __mul__(self, other: "QCharacter") -> "QCharacter":
        out: Counter[EllMonomial] = Counter()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m1 * m2] += c1 * c2
        return QCharacter(out)

    def __add__(self, other: "QCharacter") -> "QCharacter":
        out = Counter(self.terms)
        out.update(other.terms)
        return QCharacter(out)

    def __sub__(self, other: "QCharacter") -> "QCharacter":
        out = dict(self.terms)
        for m, c in other.terms.items():
            left = out.get(m, 0) - c
            if left < 0:
                raise ArithmeticError(f"multiplicity of {m} would become negative")
            out[m] = left
        return QCharacter(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QCharacter) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, m: EllMonomial) -> int:
        return self.terms.get(m, 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def dominant(self) -> list[EllMonomial]:
        return [m for m in self.terms if m.is_dominant()]

    def records(self) -> list[tuple[list[tuple[int, int]], int]]:
        return [(list(m.exponents), c) for m, c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        return f"QCharacter({len(self.terms)} monomials, total {self.total()})"


# ---------------------------------------------------------------------------
# strings
# ---------------------------------------------------------------------------


def is_string(s: Sequence[int]) -> bool:
    a, b = s
    return a % 2 == 0 and b % 2 == 0 and b >= a


def _check_string(a: int, b: int) -> None:
    if a % 2 or b % 2 or b < a:
        raise DomainError(f"[{a},{b}] is not a string")


def general_position(s: String, t: String) -> bool:
    """Nested, or the union is not a string."""
    (a1, b1), (a2, b2) = s, t
    if (a1 <= a2 and b2 <= b1) or (a2 <= a1 and b1 <= b2):
        return True
    return a2 > b1 + 2 or a1 > b2 + 2


def eval_module_qchar(alpha: int, beta: int) -> QCharacter:
    _check_string(alpha, beta)
    m = (beta - alpha) // 2 + 1
    terms = {}
    for j in range(m + 1):
        e = {a: 1 for a in range(alpha, beta - 2 * j + 1, 2)}
        for a in range(beta - 2 * j + 4, beta + 3, 2):
            e[a] = e.get(a, 0) - 1
        terms[EllMonomial.from_map(e)] = 1
    return QCharacter(terms)


def string_set_qchar(strings: Iterable[String]) -> QCharacter:
    out = QCharacter.one()
    for a, b in strings:
        out = out * eval_module_qchar(a, b)
    return out


def word_qchar(w: Sequence[int]) -> QCharacter:
    w = as_word(w)
    return string_set_qchar((a, a) for a in w)


def h_char_coeff(w: Sequence[int]) -> int:
    """Multiplicity of the monomial 1 in the q-character of ``w``."""
    w = as_word(w)
    if len(w) % 2:
        return 0
    # only the count of each letter matters; multiply letter powers one at a time
    ch = QCharacter.one()
    for a, k in sorted(Counter(w).items()):
        ch = ch * _binomial_power(a, k)
    return ch.coefficient(EllMonomial.one())


def _binomial_power(a: int, k: int) -> QCharacter:
    return QCharacter(
        {EllMonomial.from_map({a: k - r, a + 2: -r}): comb(k, r) for r in range(k + 1)}
    )


def h_char_closed(w: Sequence[int]) -> int:
    """Product of binomials ``C(n_{2k}, m_{2k-1})`` over the normalized support."""
    w = normalize_shift(as_word(w))
    if len(w) % 2:
        return 0
    if not w:
        return 1
    count = Counter(w)
    N = max(w) // 2
    total = 1
    for k in range(1, N + 2):
        m = sum((-1) ** j * count.get(2 * k - 2 - 2 * j, 0) for j in range(k))
        n = count.get(2 * k, 0)
        if m < 0:
            return 0
        total *= comb(n, m)
        if not total:
            return 0
    return total


# ---------------------------------------------------------------------------
# dominant monomials and composition factors
# ---------------------------------------------------------------------------


def dominant_factorize(m: EllMonomial) -> StringSet:
    """Strings in pairwise general position whose heads multiply to ``m``.

    Each round takes the maximal runs of the remaining support as strings and
    removes one copy of every letter in them.
    """
    if not m.is_dominant():
        raise DomainError("dominant_factorize needs a dominant monomial")
    left = m.as_map()
    out: list[String] = []
    while left:
        for s, t in list(_runs(sorted(left))):
            out.append((s, t))
            for a in range(s, t + 1, 2):
                left[a] -= 1
                if not left[a]:
                    del left[a]
    return tuple(sorted(out))


def _runs(letters: list[int]) -> Iterator[String]:
    start = prev = letters[0]
    for a in letters[1:]:
        if a == prev + 2:
            prev = a
        else:
            yield start, prev
            start = prev = a
    yield start, prev


def dominant_monomial(strings: Iterable[String]) -> EllMonomial:
    e: Counter[int] = Counter()
    for a, b in strings:
        for x in range(a, b + 1, 2):
            e[x] += 1
    return EllMonomial.from_map(e)


def peel_composition_factors(w: Sequence[int]) -> list[StringSet]:
    """Composition factors of ``w`` read off its q-character.

    The trivial factor is the empty string set.
    """
    rest = word_qchar(w)
    factors: list[StringSet] = []
    while rest:
        head = max(rest.dominant(), key=EllMonomial.peel_key)
        strings = dominant_factorize(head)
        rest = rest - string_set_qchar(strings)
        factors.append(strings)
    return factors


def two_string_product_sequences(a1: int, b1: int, a2: int, b2: int) -> tuple[StringSet, StringSet]:
    """Sub and quotient factors of ``[a1,b1][a2,b2]`` for ``a1 < a2 <= b1+2 <= b2``."""
    for x, y in ((a1, b1), (a2, b2)):
        _check_string(x, y)
    if not (a1 < a2 <= b1 + 2 <= b2):
        raise DomainError("strings are not in the required relative position")

    def nonempty(*ss: String) -> StringSet:
        return tuple(sorted(s for s in ss if s[1] >= s[0]))

    return nonempty((a1, a2 - 4), (b1 + 4, b2)), nonempty((a1, b2), (a2, b1))


def is_right_negative(m: EllMonomial) -> bool:
    e = m.as_map()
    neg = [a for a, x in e.items() if x < 0]
    if not neg:
        return False
    top = max(neg)
    return not any(a > top for a in e)


# ---------------------------------------------------------------------------
# overpartitions
# ---------------------------------------------------------------------------


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _unimodal(alpha: tuple[int, ...]) -> bool:
    k = 0
    while k + 1 < len(alpha) and alpha[k] <= alpha[k + 1]:
        k += 1
    return all(alpha[t] > alpha[t + 1] for t in range(k, len(alpha) - 1))


def overpartition_class_count(n: int) -> int:
    """Degree-``n`` words ``x_1^a_1 ... x_r^a_r`` with alternating letters and unimodal exponents."""
    if n < 0:
        raise DomainError("negative degree")
    if n == 0:
        return 1
    return 2 * sum(1 for a in _compositions(n) if _unimodal(a))


def overpartition_series(N: int) -> list[int]:
    """Coefficients of ``prod (1+q^i)/(1-q^i)`` up to ``q**N``."""
    c = [1] + [0] * N
    for i in range(1, N + 1):
        for k in range(N, i - 1, -1):
            c[k] += c[k - i]
        for k in range(i, N + 1):
            c[k] += c[k - i]
    return c
