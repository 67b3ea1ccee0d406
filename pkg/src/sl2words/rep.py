"""Generators on tensor powers of the two-dimensional module, singular vectors and h(w).

A vector is a dict from sign sequences (tuples of +1/-1) to :class:`QRat`.
The Catalan basis of the weight-zero singular space is indexed by
:func:`uncolored_catalan`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, TypeVar

import flint

from .arcs import (
    ArcConfig,
    crossings,
    has_config,
    irreducible_configs,
    is_catalan,
    is_irreducible,
    left_end_map,
    steady_configs,
    uncolored_catalan,
)
from .scalars import ONE, ZERO, QRat, nullspace, qpow, random_specializations, rank_certified
from .words import DomainError, Word, as_word, dual_word, gap_factorize, normalize_shift, slide

__all__ = [
    "Signs",
    "Vector",
    "act_e1",
    "act_f1",
    "act_e0",
    "act_f0",
    "act_K",
    "catalan_vector",
    "catalan_from_signs",
    "to_catalan_coords",
    "from_catalan_coords",
    "leading_term",
    "f0_matrix",
    "HResult",
    "HomSpace",
    "h_exact",
    "hom_space",
    "hom_dim",
    "rmatrix_2dim",
    "apply_rmatrix",
    "rmatrix_eigenvalues",
    "rmatrix_on_catalan",
    "catalan_rmatrix_rules",
    "sigma_vector",
    "pivots",
    "is_singular",
    "h_rules",
    "nonisom_witness",
    "H_CAP",
]

Signs = tuple[int, ...]
Vector = dict[Signs, QRat]

H_CAP = 14

R = TypeVar("R")


def _add(v: Vector, m: Signs, c: QRat) -> None:
    old = v.get(m)
    new = c if old is None else old + c
    if new:
        v[m] = new
    elif old is not None:
        del v[m]


def _check(w: Sequence[int], v: Mapping[Signs, QRat]) -> None:
    for m in v:
        if len(m) != len(w):
            raise DomainError("sign sequence length differs from the word")
        break


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def act_K(w: Sequence[int], v: Mapping[Signs, QRat]) -> Vector:
    _check(w, v)
    return {m: c * qpow(sum(m)) for m, c in v.items() if c}


def act_f0(w: Sequence[int], v: Mapping[Signs, QRat]) -> Vector:
    """``f_0`` flips ``-`` to ``+`` at ``i`` with ``q**(-a_i) * K`` on the left."""
    _check(w, v)
    out: Vector = {}
    for m, c in v.items():
        left = 0
        for i, s in enumerate(m):
            if s < 0:
                _add(out, m[:i] + (1,) + m[i + 1 :], c * qpow(left - w[i]))
            left += s
    return out


def act_e1(w: Sequence[int], v: Mapping[Signs, QRat]) -> Vector:
    """``e_1`` flips ``-`` to ``+`` at ``i`` with ``K`` on the right."""
    _check(w, v)
    out: Vector = {}
    for m, c in v.items():
        right = sum(m)
        for i, s in enumerate(m):
            right -= s
            if s < 0:
                _add(out, m[:i] + (1,) + m[i + 1 :], c * qpow(right))
    return out


def act_f1(w: Sequence[int], v: Mapping[Signs, QRat]) -> Vector:
    """``f_1`` flips ``+`` to ``-`` at ``i`` with ``K**-1`` on the left."""
    _check(w, v)
    out: Vector = {}
    for m, c in v.items():
        left = 0
        for i, s in enumerate(m):
            if s > 0:
                _add(out, m[:i] + (-1,) + m[i + 1 :], c * qpow(-left))
            left += s
    return out


def act_e0(w: Sequence[int], v: Mapping[Signs, QRat]) -> Vector:
    """``e_0`` flips ``+`` to ``-`` at ``i`` with ``q**a_i * K**-1`` on the right."""
    _check(w, v)
    out: Vector = {}
    for m, c in v.items():
        right = sum(m)
        for i, s in enumerate(m):
            right -= s
            if s > 0:
                _add(out, m[:i] + (-1,) + m[i + 1 :], c * qpow(w[i] - right))
    return out


def is_singular(w: Sequence[int], v: Mapping[Signs, QRat]) -> bool:
    """Annihilated by ``e_1, f_1, e_0, f_0`` and fixed by ``K``."""
    if any(act(w, v) for act in (act_e1, act_f1, act_e0, act_f0)):
        return False
    return act_K(w, v) == dict(v)


# ---------------------------------------------------------------------------
# Catalan basis
# ---------------------------------------------------------------------------


def catalan_vector(C: Sequence[tuple[int, int]], length: int | None = None) -> Vector:
    """``prod (1 - q**-1 P_ij) eps_C`` over the arcs of a noncrossing ``C``."""
    if not is_catalan(C):
        raise DomainError("catalan_vector needs a noncrossing configuration")
    n = length if length is not None else 2 * len(C)
    base = list(left_end_map(C, n))
    out: Vector = {}
    arcs = list(C)
    for k in range(len(arcs) + 1):
        coeff = qpow(-k) * (-1) ** k
        for S in combinations(arcs, k):
            m = base[:]
            for i, j in S:
                m[i - 1], m[j - 1] = m[j - 1], m[i - 1]
            out[tuple(m)] = coeff
    return out


def catalan_from_signs(m: Signs) -> ArcConfig | None:
    """The noncrossing matching whose left-end sequence is ``m``, if any."""
    stack: list[int] = []
    arcs = []
    for i, s in enumerate(m, start=1):
        if s > 0:
            stack.append(i)
        else:
            if not stack:
                return None
            arcs.append((stack.pop(), i))
    if stack:
        return None
    return tuple(sorted(arcs))


def leading_term(v: Mapping[Signs, QRat]) -> Signs | None:
    """Largest sign sequence in the order with ``+ > -`` read left to right."""
    return max(v) if v else None


def to_catalan_coords(v: Mapping[Signs, QRat]) -> dict[ArcConfig, QRat]:
    """Expand a weight-zero singular vector in the Catalan basis."""
    rest: Vector = dict(v)
    coords: dict[ArcConfig, QRat] = {}
    while rest:
        m = max(rest)
        C = catalan_from_signs(m)
        if C is None:
            raise DomainError("vector is not in the span of Catalan vectors")
        c = rest[m]
        coords[C] = c
        for mm, cc in catalan_vector(C, len(m)).items():
            _add(rest, mm, -c * cc)
    return coords


def from_catalan_coords(coords: Mapping[ArcConfig, QRat], length: int) -> Vector:
    out: Vector = {}
    for C, c in coords.items():
        if not c:
            continue
        for m, cc in catalan_vector(C, length).items():
            _add(out, m, c * cc)
    return out


# ---------------------------------------------------------------------------
# the f_0 matrix and h(w)
# ---------------------------------------------------------------------------


def _f0_entries(w: Word) -> tuple[list[Signs], dict[Signs, dict[int, dict[int, int]]]]:
    """Sparse f_0 on the Catalan basis: row -> column -> {q-exponent: coeff}."""
    n = len(w) // 2
    cats = uncolored_catalan(n)
    rows: dict[Signs, dict[int, dict[int, int]]] = {}
    for col, C in enumerate(cats):
        base = list(left_end_map(C, 2 * n))
        arcs = list(C)
        for k in range(n + 1):
            sign = (-1) ** k
            for S in combinations(arcs, k):
                m = base[:]
                for i, j in S:
                    m[i - 1], m[j - 1] = m[j - 1], m[i - 1]
                left = 0
                for i, s in enumerate(m):
                    if s < 0:
                        target = tuple(m[:i]) + (1,) + tuple(m[i + 1 :])
                        e = left - w[i] - k
                        cell = rows.setdefault(target, {}).setdefault(col, {})
                        cell[e] = cell.get(e, 0) + sign
                    left += s
    order = sorted(rows, reverse=True)
    return order, rows


def f0_matrix(w: Sequence[int]) -> list[list[QRat]]:
    """Matrix of ``f_0`` from the Catalan basis to weight-two monomials.

    Only monomials that occur are listed as rows; the remaining rows of the
    full ``C(2n, n-1)``-row matrix are zero.
    """
    w = as_word(w)
    if len(w) % 2:
        raise DomainError("odd length")
    n = len(w) // 2
    ncols = len(uncolored_catalan(n))
    order, rows = _f0_entries(w)
    out = []
    for r in order:
        row = [ZERO] * ncols
        for col, cell in rows[r].items():
            row[col] = QRat.laurent(cell)
        out.append(row)
    return out


def _rank_at(w: Word, r: Fraction) -> int:
    n = len(w) // 2
    ncols = len(uncolored_catalan(n))
    order, rows = _f0_entries(w)
    if not order:
        return 0
    x = flint.fmpq(r.numerator, r.denominator)
    exps = {e for row in rows.values() for cell in row.values() for e in cell}
    powers = {e: x**e for e in exps}
    flat = []
    for rsig in order:
        row = [flint.fmpq(0)] * ncols
        for col, cell in rows[rsig].items():
            val = flint.fmpq(0)
            for e, c in cell.items():
                if c:
                    val += c * powers[e]
            row[col] = val
        flat.extend(row)
    return flint.fmpq_mat(len(order), ncols, flat).rank()


@dataclass
class HomSpace:
    word: Word
    basis: list[Vector]

    def to_records(self) -> list[list[tuple[str, str]]]:
        out = []
        for v in self.basis:
            out.append([("".join("+" if s > 0 else "-" for s in m), str(c)) for m, c in sorted(v.items(), reverse=True)])
        return out


@dataclass
class HResult:
    word: Word
    h: int
    method: str
    lower: int | None = None
    upper: int | None = None
    ranks: dict[str, int] = field(default_factory=dict)
    certified: bool = False
    seconds: float = 0.0
    space: HomSpace | None = None


def h_exact(
    w: Sequence[int],
    *,
    certify: bool = False,
    with_basis: bool = False,
    cap: int | None = H_CAP,
    seed: int | str | None = None,
) -> HResult:
    """Dimension of the trivial-submodule space of ``w``.

    Ranks of the f_0 matrix are first taken at two rational values of q.  The
    symbolic Bareiss rank runs when ``certify`` is set, when the two ranks
    disagree, or when the resulting nullity leaves ``[|IConf|, |SConf|]``.
    If the specialized nullity equals ``|IConf|`` it is already certified,
    because a specialized rank never exceeds the generic one.
    """
    t0 = time.perf_counter()
    w = as_word(w)
    if len(w) % 2:
        return HResult(w, 0, "parity", 0, 0, certified=True, seconds=time.perf_counter() - t0)
    if cap is not None and len(w) > cap:
        raise DomainError(f"length {len(w)} exceeds the cap {cap}")
    if not w:
        res = HResult(w, 1, "empty", 1, 1, certified=True)
        if with_basis:
            res.space = HomSpace(w, [{(): ONE}])
        return res
    n = len(w) // 2
    ncols = len(uncolored_catalan(n))
    lower = len(irreducible_configs(w))
    upper = len(steady_configs(w))
    pts = random_specializations(2, seed if seed is not None else "".join(map(str, w)))
    ranks = {str(r): _rank_at(w, r) for r in pts}
    rank = max(ranks.values())
    nul = ncols - rank
    method = "specialized"
    certified = nul == lower
    need_symbolic = certify and not certified
    if len(set(ranks.values())) > 1 or not (lower <= nul <= upper):
        need_symbolic = True
    if need_symbolic:
        srank = rank_certified(f0_matrix(w))
        ranks["symbolic"] = srank
        nul = ncols - srank
        method = "symbolic"
        certified = True
    res = HResult(w, nul, method, lower, upper, ranks, certified)
    if with_basis:
        res.space = hom_space(w)
        if len(res.space.basis) != nul:
            raise ArithmeticError("kernel dimension disagrees with the rank computation")
    res.seconds = time.perf_counter() - t0
    return res


def hom_space(w: Sequence[int]) -> HomSpace:
    """Kernel of f_0 on the singular weight-zero space, in the standard basis.

    Every kernel vector is checked against all four Chevalley generators.
    """
    w = as_word(w)
    if len(w) % 2:
        return HomSpace(w, [])
    n = len(w) // 2
    cats = uncolored_catalan(n)
    M = f0_matrix(w)
    kernel = nullspace(M, len(cats))
    basis = []
    for coords in kernel:
        v = from_catalan_coords({C: c for C, c in zip(cats, coords) if c}, 2 * n)
        if not is_singular(w, v):
            raise ArithmeticError("kernel vector of f_0 fails the singularity check")
        basis.append(v)
    return HomSpace(w, basis)


def hom_dim(w1: Sequence[int], w2: Sequence[int], **kw) -> int:
    """``dim Hom(w1, w2) = h(w2 w1*)``."""
    return h_exact(tuple(w2) + dual_word(w1), **kw).h


# ---------------------------------------------------------------------------
# R-matrices
# ---------------------------------------------------------------------------

_PAIR_INDEX = {(1, 1): 0, (1, -1): 1, (-1, 1): 2, (-1, -1): 3}
_INDEX_PAIR = {v: k for k, v in _PAIR_INDEX.items()}


def rmatrix_2dim(a: int, b: int) -> list[list[QRat]]:
    """Intertwiner ``(a, b) -> (b, a)`` in the basis ``++, +-, -+, --``."""
    d = a - b
    z = qpow(d)
    A = z - qpow(2)
    B = z - qpow(d + 2)
    X = qpow(d + 1) - qpow(1)
    D = ONE - qpow(2)
    return [
        [A, ZERO, ZERO, ZERO],
        [ZERO, B, X, ZERO],
        [ZERO, X, D, ZERO],
        [ZERO, ZERO, ZERO, A],
    ]


def apply_rmatrix(v: Mapping[Signs, QRat], i: int, a: int, b: int) -> Vector:
    """Apply ``R(a, b)`` on factors ``i, i+1`` (1-based)."""
    R = rmatrix_2dim(a, b)
    out: Vector = {}
    for m, c in v.items():
        col = _PAIR_INDEX[(m[i - 1], m[i])]
        for row in range(4):
            e = R[row][col]
            if e:
                s, t = _INDEX_PAIR[row]
                _add(out, m[: i - 1] + (s, t) + m[i + 1 :], c * e)
    return out


def rmatrix_eigenvalues(alpha1: int, beta1: int, alpha2: int, beta2: int, c: QRat = ONE) -> list[QRat]:
    """Eigenvalues ``lambda_0, ..., lambda_min(m,n)`` on ``[alpha1,beta1] x [alpha2,beta2]``."""
    for x, y in ((alpha1, beta1), (alpha2, beta2)):
        if x % 2 or y % 2 or y < x:
            raise DomainError(f"[{x},{y}] is not a string")
    m = (beta1 - alpha1) // 2 + 1
    n = (beta2 - alpha2) // 2 + 1
    d = (alpha1 + beta1) // 2 - (alpha2 + beta2) // 2
    z = qpow(d)
    out = []
    for k in range(min(m, n) + 1):
        lam = c
        for l in range(k):
            lam = lam * (ONE - z * qpow(m + n - 2 * l))
        for l in range(k, min(m, n)):
            lam = lam * (z - qpow(m + n - 2 * l))
        out.append(lam)
    return out


def rmatrix_on_catalan(i: int, a: int, b: int, coords: Mapping[ArcConfig, QRat]) -> dict[ArcConfig, QRat]:
    """``R_i(a, b)`` on Catalan coordinates by the four local rules."""
    d = a - b
    return catalan_rmatrix_rules(i, qpow(d) - qpow(2), qpow(d + 1) - qpow(1), ONE - qpow(d + 2), coords)


def catalan_rmatrix_rules(i: int, c1: R, c2: R, c4: R, coords: Mapping[ArcConfig, R]) -> dict[ArcConfig, R]:
    """The local rules with coefficients from any commutative ring.

    ``c1`` keeps a configuration, ``c2`` re-pairs ``i, i+1`` together and
    their partners together, ``c4`` scales a short arc ``(i, i+1)``.
    """
    out: dict[ArcConfig, R] = {}

    def put(C: Iterable[tuple[int, int]], val: R) -> None:
        C = tuple(sorted(C))
        if C in out:
            new = out[C] + val
            if new:
                out[C] = new
            else:
                del out[C]
        elif val:
            out[C] = val

    j = i + 1
    for C, x in coords.items():
        if not x:
            continue
        partner = {}
        for p, r in C:
            partner[p] = r
            partner[r] = p
        if partner[i] == j:
            put(C, c4 * x)
            continue
        others = [arc for arc in C if i not in arc and j not in arc]
        put(C, c1 * x)
        put(others + [(i, j), tuple(sorted((partner[i], partner[j])))], c2 * x)
    return out


# ---------------------------------------------------------------------------
# vectors attached to irreducible configurations
# ---------------------------------------------------------------------------


def _choose_crossing(C: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    pairs = crossings(C)
    return min(pairs, key=lambda p: (p[1][0], -p[0][0]))


def _embed(outer: Mapping[Signs, QRat], inner: Mapping[Signs, QRat], at: int) -> Vector:
    """Insert ``inner`` after the first ``at`` factors of ``outer``."""
    out: Vector = {}
    for m, c in outer.items():
        for mm, cc in inner.items():
            _add(out, m[:at] + mm + m[at:], c * cc)
    return out


def _relabel(C: Iterable[tuple[int, int]], keep: Sequence[int]) -> ArcConfig:
    pos = {p: k + 1 for k, p in enumerate(keep)}
    return tuple(sorted((pos[i], pos[j]) for i, j in C))


def sigma_vector(w: Sequence[int], C: Sequence[tuple[int, int]]) -> Vector:
    """Singular vector with leading term ``left_end_map(C)`` for irreducible ``C``."""
    w = as_word(w)
    C = tuple(sorted(C))
    if not is_irreducible(w, C):
        raise DomainError("sigma_vector needs an irreducible configuration")
    v = _sigma(w, C)
    if leading_term(v) != left_end_map(C, len(w)):
        raise ArithmeticError("leading term of the constructed vector is off")
    return v


def _sigma(w: Word, C: ArcConfig) -> Vector:
    if is_catalan(C):
        return catalan_vector(C, len(w))
    (i1, j1), (i2, j2) = _choose_crossing(C)
    if i2 > i1 + 1:
        block = list(range(i1 + 1, i2))
        rest = [p for p in range(1, len(w) + 1) if p not in block]
        inner = [arc for arc in C if arc[0] in block]
        outer = [arc for arc in C if arc[0] not in block]
        v_in = _sigma(tuple(w[p - 1] for p in block), _relabel(inner, block))
        v_out = _sigma(tuple(w[p - 1] for p in rest), _relabel(outer, rest))
        return _embed(v_out, v_in, i1)
    swapped = [arc for arc in C if arc not in ((i1, j1), (i2, j2))] + [(i1, j2), (i1 + 1, j1)]
    wt = list(w)
    wt[i1 - 1], wt[i1] = wt[i1], wt[i1 - 1]
    inner_vec = _sigma(tuple(wt), tuple(sorted(swapped)))
    return apply_rmatrix(inner_vec, i1, w[i1], w[i1 - 1])


def pivots(w: Sequence[int], space: HomSpace | None = None) -> list[Signs]:
    """Leading sign sequences of an echelon basis of ``H(w)``, sorted descending."""
    space = space or hom_space(w)
    reduced: dict[Signs, Vector] = {}
    for v in space.basis:
        v = dict(v)
        while v:
            m = max(v)
            if m not in reduced:
                break
            c = v[m]
            for mm, cc in reduced[m].items():
                _add(v, mm, -c * cc)
        if not v:
            continue
        m = max(v)
        inv = v[m].inverse()
        reduced[m] = {mm: cc * inv for mm, cc in v.items()}
    return sorted(reduced, reverse=True)


# ---------------------------------------------------------------------------
# exact rules
# ---------------------------------------------------------------------------


@dataclass
class RuleResult:
    value: int | None
    rules: list[str]


def h_rules(w: Sequence[int]) -> RuleResult:
    """Try the closed-form rules; ``value`` is ``None`` when none applies."""
    trace: list[str] = []
    val = _rules(normalize_shift(as_word(w)), trace, True)
    return RuleResult(val, trace)


def _rules(w: Word, trace: list[str], allow_slides: bool) -> int | None:
    if len(w) % 2:
        trace.append("parity")
        return 0
    if not w:
        trace.append("empty")
        return 1
    parts = gap_factorize(w)
    if len(parts) > 1:
        trace.append("gap-factorization")
        total = 1
        for p in parts:
            v = _rules(normalize_shift(p), trace, True)
            if v is None:
                return None
            total *= v
        return total
    direct = _direct_rules(w, trace)
    if direct is not None:
        return direct
    if allow_slides:
        x = w
        for _ in range(len(w) - 1):
            x = normalize_shift(slide(x))
            sub: list[str] = []
            val = _direct_rules(x, sub)
            if val is not None:
                trace.append("slide")
                trace.extend(sub)
                return val
        x = w
        for _ in range(len(w) - 1):
            x = normalize_shift(slide(x))
            sub = []
            val = _split_rules(x, sub)
            if val is not None:
                trace.append("slide")
                trace.extend(sub)
                return val
    return _split_rules(w, trace)


def _direct_rules(w: Word, trace: list[str]) -> int | None:
    lo, hi = min(w), max(w)
    if w[-1] == lo or w[0] == hi:
        trace.append("extreme-end")
        return 0
    if not has_config(w):
        trace.append("support")
        return 0
    if set(w) <= {lo, lo + 2}:
        trace.append("support-02")
        return 1
    k = 0
    while k + 1 < len(w) and w[k + 1] <= w[k]:
        k += 1
    if all(w[t] <= w[t + 1] for t in range(k, len(w) - 1)):
        trace.append("weyl")
        return 1
    return None


def _split_rules(w: Word, trace: list[str]) -> int | None:
    if not set(w) <= {0, 2, 4}:
        return None
    for t in range(len(w) - 2):
        if w[t : t + 3] == (0, 2, 4):
            trace.append("split-024")
            a = _rules(normalize_shift(w[:t] + (0,) + w[t + 3 :]), trace, True)
            b = _rules(normalize_shift(w[:t] + (4,) + w[t + 3 :]), trace, True)
            if a is None or b is None:
                return None
            return a + b
    if w.count(4) == 1:
        return _one_four(w, trace)
    return None


def _one_four(w: Word, trace: list[str]) -> int | None:
    """Reduction for support {0,2,4} with a single letter 4."""
    w = list(w)
    trace.append("one-four")
    while True:
        p = w.index(4)
        zeros_right = [t for t in range(p + 1, len(w)) if w[t] == 0]
        if zeros_right:
            if w[-1] == 0:
                return 0
            t = zeros_right[-1]
            del w[t : t + 2]
            continue
        if p == len(w) - 1:
            x = (0,) + tuple(w[:-1])
            return _rules(normalize_shift(x), trace, True)
        if p == 0:
            return 0
        if w[p - 1] == 0:
            w[p - 1], w[p] = w[p], w[p - 1]
            continue
        if p == 1:
            return _rules(normalize_shift(tuple(w[2:])), trace, True)
        if w[p - 2] == 2:
            # 2 2 4 2 -> 2 4 2 2
            w[p - 1 : p + 2] = [4, 2, 2]
            continue
        a = _rules(normalize_shift(tuple(w[: p - 2] + [0] + w[p + 1 :])), trace, True)
        b = _rules(normalize_shift(tuple(w[: p - 2] + [4] + w[p + 1 :])), trace, True)
        if a is None or b is None:
            return None
        return a + b


# ---------------------------------------------------------------------------
# separating invariant
# ---------------------------------------------------------------------------


def nonisom_witness(w1: Sequence[int], w2: Sequence[int]) -> Word | None:
    """A subword of ``w1`` with a configuration whose content has none in ``w2``."""
    w1, w2 = as_word(w1), as_word(w2)
    if sorted(w1) != sorted(w2):
        raise DomainError("words with different content")
    n = len(w1)
    by_content: dict[tuple[int, ...], bool] = {}

    def w2_has(cont: tuple[int, ...]) -> bool:
        if cont not in by_content:
            found = False
            for idx in combinations(range(n), len(cont)):
                sub = tuple(w2[i] for i in idx)
                if tuple(sorted(sub)) == cont and has_config(sub):
                    found = True
                    break
            by_content[cont] = found
        return by_content[cont]

    for size in range(2, n + 1, 2):
        for idx in combinations(range(n), size):
            sub = tuple(w1[i] for i in idx)
            if has_config(sub) and not w2_has(tuple(sorted(sub))):
                return sub
    return None
