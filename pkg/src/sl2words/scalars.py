"""Exact scalars in the quantum parameter q and exact linear algebra over Q(q).

Polynomial arithmetic is delegated to python-flint (``fmpz_poly`` and
``fmpz_mpoly``).  A :class:`QRat` stores ``q**val * num / den`` with ``num`` and
``den`` coprime, neither divisible by ``q``, and ``den`` with positive leading
coefficient, so Laurent polynomials are the special case ``den == 1``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import flint

__all__ = [
    "QRat",
    "qint",
    "qpow",
    "ZERO",
    "ONE",
    "Q",
    "nullity",
    "nullspace",
    "rank_certified",
    "rank_specialized",
    "random_specializations",
    "UPolyVec",
]

_ZP = flint.fmpz_poly
_X = _ZP([0, 1])


def _strip_q(p: flint.fmpz_poly) -> tuple[flint.fmpz_poly, int]:
    """Split ``p = q**k * p'`` with ``p'(0) != 0``; ``p`` must be nonzero."""
    coeffs = p.coeffs()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k == 0:
        return p, 0
    return _ZP(coeffs[k:]), k


class QRat:
    """Rational function ``q**val * num / den`` in one variable ``q``."""

    __slots__ = ("num", "den", "val")

    def __init__(self, num: flint.fmpz_poly | int = 0, den: flint.fmpz_poly | int = 1, val: int = 0):
        num = num if isinstance(num, _ZP) else _ZP([num])
        den = den if isinstance(den, _ZP) else _ZP([den])
        if den.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        if num.is_zero():
            self.num, self.den, self.val = _ZP(), _ZP([1]), 0
            return
        num, kn = _strip_q(num)
        den, kd = _strip_q(den)
        if den.degree() > 0 or abs(int(den[0])) != 1:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num // g, den // g
        if den[den.degree()] < 0:
            num, den = -num, -den
        self.num, self.den, self.val = num, den, val + kn - kd

    @classmethod
    def _raw(cls, num: flint.fmpz_poly, den: flint.fmpz_poly, val: int) -> QRat:
        obj = cls.__new__(cls)
        obj.num, obj.den, obj.val = num, den, val
        return obj

    @classmethod
    def laurent(cls, coeffs: Mapping[int, int]) -> QRat:
        """Build from ``{exponent: coefficient}``."""
        items = {e: c for e, c in coeffs.items() if c}
        if not items:
            return ZERO
        lo = min(items)
        dense = [0] * (max(items) - lo + 1)
        for e, c in items.items():
            dense[e - lo] = c
        return cls(_ZP(dense), 1, lo)

    # --- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.val == other.val and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.val, tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs())))

    # --- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(x: QRat | int) -> QRat:
        return x if isinstance(x, QRat) else QRat(x)

    def __add__(self, other: QRat | int) -> QRat:
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        v = min(self.val, other.val)
        a = self.num * _X ** (self.val - v) if self.val > v else self.num
        b = other.num * _X ** (other.val - v) if other.val > v else other.num
        if self.den == other.den:
            return QRat(a + b, self.den, v)
        return QRat(a * other.den + b * self.den, self.den * other.den, v)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat._raw(-self.num, self.den, self.val)

    def __sub__(self, other: QRat | int) -> QRat:
        return self + (-self._coerce(other))

    def __rsub__(self, other: QRat | int) -> QRat:
        return self._coerce(other) - self

    def __mul__(self, other: QRat | int) -> QRat:
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_laurent() and other.is_laurent():
            return QRat._raw(self.num * other.num, self.den, self.val + other.val)
        return QRat(self.num * other.num, self.den * other.den, self.val + other.val)

    __rmul__ = __mul__

    def inverse(self) -> QRat:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero QRat")
        return QRat(self.den, self.num, -self.val)

    def __truediv__(self, other: QRat | int) -> QRat:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: QRat | int) -> QRat:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> QRat:
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num**k, self.den**k, self.val * k)

    # --- evaluation and display -----------------------------------------
    def evaluate(self, r: Fraction | int) -> Fraction:
        """Value at ``q = r``; raises on a pole."""
        x = flint.fmpq(Fraction(r).numerator, Fraction(r).denominator)
        return _fmpq_to_fraction(self.evaluate_fmpq(x))

    def evaluate_fmpq(self, x: flint.fmpq) -> flint.fmpq:
        if self.is_zero():
            return flint.fmpq(0)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("specialization hits a pole")
        return self.num(x) / d * x**self.val

    def laurent_coeffs(self) -> dict[int, int]:
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return {self.val + i: int(c) for i, c in enumerate(self.num.coeffs()) if c}

    def __repr__(self) -> str:
        return f"QRat({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        top = _poly_str(self.num, self.val if self.val > 0 else 0)
        bot_shift = -self.val if self.val < 0 else 0
        if self.den.is_one() and bot_shift == 0:
            return top
        bot = _poly_str(self.den, bot_shift)
        return f"({top})/({bot})"


def _poly_str(p: flint.fmpz_poly, shift: int) -> str:
    terms = []
    for i, c in reversed(list(enumerate(p.coeffs()))):
        c = int(c)
        if not c:
            continue
        e = i + shift
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    out = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _fmpq_to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat(_ZP([0, 1]))


def qpow(k: int) -> QRat:
    return QRat._raw(_ZP([1]), _ZP([1]), k)


def qint(i: int) -> QRat:
    """Quantum integer ``(q**i - q**-i) / (q - q**-1)``."""
    if i == 0:
        return ZERO
    sign = 1 if i > 0 else -1
    i = abs(i)
    return QRat.laurent({i - 1 - 2 * k: sign for k in range(i)})


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

Matrix = Sequence[Sequence[QRat]]


def _shape(M: Matrix) -> tuple[int, int]:
    rows = len(M)
    return rows, (len(M[0]) if rows else 0)


def random_specializations(count: int, seed: int | str = 0) -> list[Fraction]:
    """Distinct rationals in (1, 3) with numerator and denominator below 100."""
    rng = random.Random(str(seed))
    out: list[Fraction] = []
    while len(out) < count:
        den = rng.randint(2, 49)
        num = rng.randint(den + 1, min(3 * den - 1, 99))
        r = Fraction(num, den)
        if r.denominator > 1 and r not in out:
            out.append(r)
    return out


def rank_specialized(M: Matrix, r: Fraction) -> int:
    """Rank over Q of ``M`` evaluated at ``q = r``."""
    m, n = _shape(M)
    if m == 0 or n == 0:
        return 0
    x = flint.fmpq(r.numerator, r.denominator)
    flat = [e.evaluate_fmpq(x) if e else flint.fmpq(0) for row in M for e in row]
    return flint.fmpq_mat(m, n, flat).rank()


def _poly_rows(M: Matrix) -> list[list[flint.fmpz_poly]]:
    """Scale each row by a unit times denominators so entries are in Z[q]."""
    out = []
    for row in M:
        nz = [e for e in row if e]
        if not nz:
            out.append([_ZP() for _ in row])
            continue
        lo = min(e.val for e in nz)
        den = _ZP([1])
        for e in nz:
            if not e.den.is_one():
                g = den.gcd(e.den)
                den = den * (e.den // g)
        new = []
        for e in row:
            if not e:
                new.append(_ZP())
                continue
            p = e.num * (den // e.den) * _X ** (e.val - lo)
            new.append(p)
        out.append(new)
    return out


def rank_certified(M: Matrix) -> int:
    """Rank over Q(q) by fraction-free (Bareiss) elimination in Z[q].

    Column by column, the pivot is the nonzero entry of lowest degree.  Every
    division by the previous pivot is checked to be exact.
    """
    A = _poly_rows(M)
    m, n = _shape(A)
    prev = _ZP([1])
    r = 0
    for c in range(n):
        if r == m:
            break
        best = None
        for i in range(r, m):
            e = A[i][c]
            if not e.is_zero() and (best is None or e.degree() < A[best][c].degree()):
                best = i
        if best is None:
            continue
        A[r], A[best] = A[best], A[r]
        p = A[r][c]
        prow = A[r]
        for i in range(r + 1, m):
            row = A[i]
            f = row[c]
            if f.is_zero():
                if not prev.is_one():
                    for j in range(c + 1, n):
                        if not row[j].is_zero():
                            row[j] = _exact_div(p * row[j], prev)
                else:
                    for j in range(c + 1, n):
                        if not row[j].is_zero():
                            row[j] = p * row[j]
                continue
            for j in range(c + 1, n):
                val = p * row[j] - f * prow[j]
                row[j] = _exact_div(val, prev) if not prev.is_one() else val
            row[c] = _ZP()
        prev = p
        r += 1
    return r


def _exact_div(a: flint.fmpz_poly, b: flint.fmpz_poly) -> flint.fmpz_poly:
    quo, rem = divmod(a, b)
    if not rem.is_zero():
        raise ArithmeticError("Bareiss division left a remainder")
    return quo


def nullspace(M: Matrix, ncols: int | None = None) -> list[list[QRat]]:
    """Basis of the right kernel over Q(q) by Gauss-Jordan elimination.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns.
    """
    m, n = _shape(M)
    if ncols is not None:
        n = ncols
    A = [list(row) for row in M]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        best = None
        for i in range(r, m):
            e = A[i][c]
            if e and (best is None or e.num.degree() + e.den.degree() < A[best][c].num.degree() + A[best][c].den.degree()):
                best = i
        if best is None:
            continue
        A[r], A[best] = A[best], A[r]
        inv = A[r][c].inverse()
        A[r] = [e * inv if e else e for e in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y if y else x for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ZERO] * n
        v[fcol] = ONE
        for row_idx, pc in enumerate(pivots):
            if A[row_idx][fcol]:
                v[pc] = -A[row_idx][fcol]
        basis.append(v)
    return basis


def nullity(M: Matrix, ncols: int | None = None) -> tuple[int, list[list[QRat]]]:
    """Nullity over Q(q) together with a kernel basis."""
    basis = nullspace(M, ncols)
    return len(basis), basis


# ---------------------------------------------------------------------------
# multivariate vectors for generic singular vectors
# ---------------------------------------------------------------------------


class UPolyVec:
    """Vector of polynomials in ``q, u_1, ..., u_n`` with integer coefficients.

    Negative powers of ``q`` never survive: callers multiply through by a
    power of ``q``, which is harmless for projective vectors.
    """

    def __init__(self, ctx: flint.fmpz_mpoly_ctx, coords: Sequence[flint.fmpz_mpoly]):
        self.ctx = ctx
        self.coords = list(coords)

    @staticmethod
    def context(n: int) -> flint.fmpz_mpoly_ctx:
        names = ("q",) + tuple(f"u{k}" for k in range(1, n + 1))
        return flint.fmpz_mpoly_ctx.get(names, "lex")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def normalized(self) -> UPolyVec:
        """Divide out the polynomial content and fix the overall sign."""
        nz = [c for c in self.coords if not c.is_zero()]
        if not nz:
            raise ValueError("zero vector has no projective normalization")
        g = nz[0]
        for c in nz[1:]:
            g = g.gcd(c)
        coords = [c / g if not c.is_zero() else c for c in self.coords]
        lead = next(c for c in coords if not c.is_zero())
        if lead.leading_coefficient() < 0:
            coords = [-c for c in coords]
        return UPolyVec(self.ctx, coords)

    def substitute(self, var: int, replacement: flint.fmpz_mpoly) -> UPolyVec:
        """Replace generator number ``var`` (0 is ``q``) and renormalize."""
        gens = list(self.ctx.gens())
        gens[var] = replacement
        coords = [c.compose(*gens) if not c.is_zero() else c for c in self.coords]
        out = UPolyVec(self.ctx, coords)
        if out.is_zero():
            raise ValueError("restriction killed the vector identically")
        return out.normalized()

    def projectively_equal(self, other: Sequence[flint.fmpz_mpoly] | UPolyVec) -> bool:
        w = other.coords if isinstance(other, UPolyVec) else list(other)
        v = self.coords
        if len(v) != len(w):
            return False
        for i in range(len(v)):
            for j in range(i + 1, len(v)):
                if v[i] * w[j] != v[j] * w[i]:
                    return False
        return any(not c.is_zero() for c in w)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coords) if not c.is_zero()]

    def __iter__(self) -> Iterable[flint.fmpz_mpoly]:
        return iter(self.coords)

    def __repr__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"
