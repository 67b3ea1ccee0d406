"""Generic singular vectors, their restrictions, and the degeneracy graph.

Parameters of a matching ``C`` are ``u_k = q**a_k`` for the arcs ``k`` ordered
by left end.  Vectors live in Catalan coordinates (the order of
:func:`uncolored_catalan`) with entries in ``Z[q, u_1, ..., u_n]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import flint

from .arcs import ArcConfig, crossings, is_catalan, standard_config, uncolored_catalan, uncolored_matchings
from .corpus import conf_connected_words
from .rep import catalan_rmatrix_rules, from_catalan_coords, h_exact, is_singular
from .scalars import QRat, UPolyVec, rank_certified
from .words import DomainError, Word, as_word, is_conf_connected, normalize_shift, positions_of

__all__ = [
    "generic_word",
    "generic_vector",
    "generic_coords",
    "restrict",
    "specialize_vector",
    "restriction_chains",
    "chain_limits",
    "deg_std_onto_check",
    "PlaneVertex",
    "DegeneracyGraph",
    "degeneracy_graph",
    "one_dim_orbit_count",
    "vertex_over_check",
    "DG_CAP",
]

DG_CAP = 4


# ---------------------------------------------------------------------------
# generic words and vectors
# ---------------------------------------------------------------------------


def _arc_order(C: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(C)


def generic_word(C: Sequence[tuple[int, int]], a: Sequence[int]) -> Word:
    arcs = _arc_order(C)
    if len(a) != len(arcs):
        raise DomainError("one parameter per arc is required")
    w = [0] * (2 * len(arcs))
    for (i, j), x in zip(arcs, a):
        w[i - 1] = x
        w[j - 1] = x + 2
    return as_word(w)


def _relabel(C: Iterable[tuple[int, int]], keep: Sequence[int]) -> ArcConfig:
    pos = {p: k + 1 for k, p in enumerate(keep)}
    return tuple(sorted((pos[i], pos[j]) for i, j in C))


def generic_coords(C: Sequence[tuple[int, int]], letters: Sequence, q) -> dict[ArcConfig, object]:
    """Catalan coordinates of the vector of ``C`` for letter values ``q**a_p``.

    ``letters[p]`` is ``q**a_{p+1}`` in any ring holding ``q``.  Each R-matrix
    step is scaled by the second letter's value, so polynomial input gives
    polynomial output.
    """
    C = tuple(sorted(C))
    if is_catalan(C):
        return {C: q ** 0}
    (i1, j1), (i2, j2) = min(crossings(C), key=lambda p: (p[1][0], -p[0][0]))
    if i2 > i1 + 1:
        block = list(range(i1 + 1, i2))
        rest = [p for p in range(1, len(letters) + 1) if p not in block]
        inner = generic_coords(
            _relabel([arc for arc in C if arc[0] in block], block), [letters[p - 1] for p in block], q
        )
        outer = generic_coords(
            _relabel([arc for arc in C if arc[0] not in block], rest), [letters[p - 1] for p in rest], q
        )
        out: dict[ArcConfig, object] = {}
        for Co, x in outer.items():
            for Ci, y in inner.items():
                arcs = [(rest[i - 1], rest[j - 1]) for i, j in Co] + [(block[i - 1], block[j - 1]) for i, j in Ci]
                out[tuple(sorted(arcs))] = x * y
        return out
    swapped = [arc for arc in C if arc not in ((i1, j1), (i2, j2))] + [(i1, j2), (i1 + 1, j1)]
    lt = list(letters)
    lt[i1 - 1], lt[i1] = lt[i1], lt[i1 - 1]
    coords = generic_coords(tuple(sorted(swapped)), lt, q)
    ua, ub = letters[i1], letters[i1 - 1]
    q2 = q * q
    return catalan_rmatrix_rules(i1, ua - q2 * ub, q * (ua - ub), ub - q2 * ua, coords)


def generic_vector(C: Sequence[tuple[int, int]]) -> UPolyVec:
    """Projectively normalized vector of ``C`` with symbolic parameters."""
    arcs = _arc_order(C)
    n = len(arcs)
    ctx = UPolyVec.context(n)
    gens = ctx.gens()
    q = gens[0]
    letters = [None] * (2 * n)
    for k, (i, j) in enumerate(arcs, start=1):
        letters[i - 1] = gens[k]
        letters[j - 1] = q * q * gens[k]
    coords = generic_coords(arcs, letters, q)
    basis = uncolored_catalan(n)
    zero = ctx.from_dict({})
    return UPolyVec(ctx, [coords.get(B, zero) for B in basis]).normalized()


def restrict(v: UPolyVec, i: int, j: int, m: int) -> UPolyVec:
    """Restrict to the hyperplane ``a_i - a_j = m`` and renormalize."""
    gens = v.ctx.gens()
    q = gens[0]
    if m >= 0:
        return v.substitute(i, q**m * gens[j])
    return v.substitute(j, q ** (-m) * gens[i])


def _mpoly_to_qrat(p: flint.fmpz_mpoly) -> QRat:
    """A polynomial in ``q`` alone, as a :class:`QRat`."""
    coeffs: dict[int, int] = {}
    for exps, c in p.to_dict().items():
        if any(exps[1:]):
            raise ValueError("polynomial still depends on the u parameters")
        coeffs[exps[0]] = int(c)
    return QRat.laurent(coeffs)


def specialize_vector(v: UPolyVec) -> list[QRat]:
    """Set every remaining ``u`` to 1; valid once the vector is a single line."""
    gens = list(v.ctx.gens())
    one = v.ctx.from_dict({(0,) * len(gens): 1})
    for k in range(1, len(gens)):
        gens[k] = one
    return [_mpoly_to_qrat(c.compose(*gens)) if not c.is_zero() else QRat() for c in v.coords]


# ---------------------------------------------------------------------------
# restriction chains
# ---------------------------------------------------------------------------


def restriction_chains(n: int) -> Iterator[list[tuple[int, int]]]:
    """Orders in which ``n`` parameter classes can be merged down to one.

    A step ``(x, y)`` merges the classes led by ``x`` and ``y``.
    """

    def rec(classes: list[int]) -> Iterator[list[tuple[int, int]]]:
        if len(classes) == 1:
            yield []
            return
        for s in range(len(classes)):
            for t in range(s + 1, len(classes)):
                x, y = classes[s], classes[t]
                nxt = [c for c in classes if c != y]
                for tail in rec(nxt):
                    yield [(x, y)] + tail

    yield from rec(list(range(1, n + 1)))


def chain_limits(w: Sequence[int], C: Sequence[tuple[int, int]]) -> list[list[QRat]]:
    """Limits of the vector of ``C`` along every restriction chain ending at ``w``."""
    w = as_word(w)
    arcs = _arc_order(C)
    a = [w[i - 1] for i, _ in arcs]
    if generic_word(arcs, a) != w:
        raise DomainError("configuration is not one of the word")
    base = generic_vector(arcs)
    out = []
    for chain in restriction_chains(len(arcs)):
        v = base
        live = {k: k for k in range(1, len(arcs) + 1)}  # class -> surviving variable
        for x, y in chain:
            s, t = live[x], live[y]
            m = a[t - 1] - a[s - 1]
            v = restrict(v, t, s, m)
            live[x] = s if m >= 0 else t
        out.append(specialize_vector(v))
    return out


@dataclass
class OntoReport:
    word: Word
    h: int
    span: int
    singular: bool


def deg_std_onto_check(w: Sequence[int]) -> OntoReport:
    """Do the limits of the standard configuration's vector span ``H(w)``?"""
    w = as_word(w)
    h = h_exact(w).h
    C = standard_config(w)
    if C is None:
        return OntoReport(w, h, 0, True)
    limits = chain_limits(w, C)
    basis = uncolored_catalan(len(w) // 2)
    singular = True
    for vec in limits:
        full = from_catalan_coords({B: c for B, c in zip(basis, vec) if c}, len(w))
        if not is_singular(w, full):
            singular = False
    span = rank_certified(limits) if limits else 0
    return OntoReport(w, h, span, singular)


# ---------------------------------------------------------------------------
# planes cut out by arcs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PlaneVertex:
    """Affine plane of ``(alpha_1, ..., alpha_2n)`` given by fixed differences.

    ``comp[p]`` numbers the block of position ``p+1`` (blocks in order of least
    position); ``off[p]`` is the letter offset within that block, least 0.
    """

    comp: tuple[int, ...]
    off: tuple[int, ...]

    @property
    def dim(self) -> int:
        return max(self.comp) + 1 if self.comp else 0

    @property
    def length(self) -> int:
        return len(self.comp)

    def constraints(self) -> list[tuple[int, int, int]]:
        lead: dict[int, int] = {}
        out = []
        for p, c in enumerate(self.comp):
            if c in lead:
                r = lead[c]
                out.append((r, p, self.off[p] - self.off[r]))
            else:
                lead[c] = p
        return out

    def contains(self, other: "PlaneVertex") -> bool:
        """``other`` is a subset of ``self``."""
        return all(
            other.comp[i] == other.comp[j] and other.off[j] - other.off[i] == d for i, j, d in self.constraints()
        )

    def admits(self, C: Sequence[tuple[int, int]]) -> bool:
        return all(self.comp[i - 1] == self.comp[j - 1] and self.off[j - 1] - self.off[i - 1] == 2 for i, j in C)

    def generic_word(self) -> Word:
        """A point of the plane off every extra arc hyperplane of other blocks."""
        gap = max(self.off, default=0) + 6
        return tuple(self.comp[p] * gap + self.off[p] for p in range(self.length))

    def blocks(self) -> list[Word]:
        out = []
        for c in range(self.dim):
            out.append(tuple(self.off[p] for p in range(self.length) if self.comp[p] == c))
        return out

    def label(self) -> str:
        return "|".join("".join(str(x) if x < 10 else f"({x})" for x in b) for b in self.blocks())


def _solve(length: int, constraints: Iterable[tuple[int, int, int]]) -> PlaneVertex | None:
    """Union-find with offsets: ``alpha_j - alpha_i = d`` for each constraint."""
    parent = list(range(length))
    pot = [0] * length  # alpha_p - alpha_root

    def find(x: int) -> tuple[int, int]:
        acc = 0
        path = []
        while parent[x] != x:
            path.append(x)
            acc += pot[x]
            x = parent[x]
        root = x
        for y in path:
            # compress: pot relative to root
            tot = 0
            z = y
            while z != root:
                tot += pot[z]
                z = parent[z]
            pot[y] = tot
        for y in path:
            parent[y] = root
        return root, acc

    for i, j, d in constraints:
        ri, pi = find(i)
        rj, pj = find(j)
        if ri == rj:
            if pj - pi != d:
                return None
            continue
        # attach rj under ri: alpha_rj - alpha_ri = pi + d - pj
        if rj < ri:
            ri, rj, pi, pj, d = rj, ri, pj, pi, -d
        parent[rj] = ri
        pot[rj] = pi + d - pj
    roots: dict[int, int] = {}
    comp = []
    vals = []
    for p in range(length):
        r, v = find(p)
        if r not in roots:
            roots[r] = len(roots)
        comp.append(roots[r])
        vals.append(v)
    lows = {}
    for c, v in zip(comp, vals):
        lows[c] = min(lows.get(c, v), v)
    return PlaneVertex(tuple(comp), tuple(v - lows[c] for c, v in zip(comp, vals)))


def plane_of(C: Sequence[tuple[int, int]], length: int) -> PlaneVertex:
    v = _solve(length, [(i - 1, j - 1, 2) for i, j in C])
    assert v is not None
    return v


def intersect(A: PlaneVertex, B: PlaneVertex) -> PlaneVertex | None:
    return _solve(A.length, A.constraints() + B.constraints())


def rotate(A: PlaneVertex) -> PlaneVertex:
    """Image under ``(alpha_1..alpha_2n) -> (alpha_2n - 4, alpha_1, ..., alpha_{2n-1})``."""
    L = A.length

    def new(p: int) -> int:
        return 0 if p == L - 1 else p + 1

    cons = []
    for i, j, d in A.constraints():
        dd = d - (4 if j == L - 1 else 0) + (4 if i == L - 1 else 0)
        cons.append((new(i), new(j), dd))
    out = _solve(L, cons)
    assert out is not None
    return out


@dataclass
class DegeneracyGraph:
    n: int
    vertices: list[PlaneVertex]
    edges: list[tuple[int, int]]
    configs: list[list[ArcConfig]]
    orbit: list[int]
    h: list[int | None] = field(default_factory=list)

    def orbit_sizes(self) -> dict[int, list[int]]:
        """Orbit sizes grouped by dimension, largest first."""
        sizes: dict[int, dict[int, int]] = {}
        for v, o in zip(self.vertices, self.orbit):
            sizes.setdefault(v.dim, {}).setdefault(o, 0)
            sizes[v.dim][o] += 1
        return {d: sorted(s.values(), reverse=True) for d, s in sorted(sizes.items(), reverse=True)}

    def to_json(self) -> dict:
        nodes = []
        for k, v in enumerate(self.vertices):
            nodes.append(
                {
                    "id": k,
                    "label": v.label(),
                    "dim": v.dim,
                    "configs": len(self.configs[k]),
                    "orbit": self.orbit[k],
                    "h": self.h[k] if self.h else None,
                }
            )
        return {"n": self.n, "nodes": nodes, "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        lines = [f"digraph DG{2 * self.n} {{"]
        for k, v in enumerate(self.vertices):
            extra = f" h={self.h[k]}" if self.h and self.h[k] is not None else ""
            lines.append(f'  n{k} [label="{v.label()}\\ndim={v.dim} |S|={len(self.configs[k])}{extra}"];')
        for a, b in self.edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"
        if fmt == "dot":
            return self.to_dot()
        raise DomainError(f"unknown format {fmt!r}")


def degeneracy_graph(
    n: int,
    *,
    with_h: bool = False,
    override_cap: bool = False,
    progress: Callable[[str], None] | None = None,
) -> DegeneracyGraph:
    if n < 1:
        raise DomainError("n must be positive")
    if n > DG_CAP and not override_cap:
        raise DomainError(f"n = {n} is above the cap {DG_CAP}")
    L = 2 * n
    matchings = uncolored_matchings(n)
    found = {plane_of(C, L) for C in matchings}
    frontier = set(found)
    while frontier:
        new = set()
        for A in frontier:
            for B in found:
                X = intersect(A, B)
                if X is not None and X not in found:
                    new.add(X)
        found |= new
        frontier = new
        if progress:
            progress(f"DG({L}): {len(found)} vertices")
    vertices = sorted(found, key=lambda v: (-v.dim, v))
    index = {v: k for k, v in enumerate(vertices)}
    by_dim: dict[int, list[int]] = {}
    for k, v in enumerate(vertices):
        by_dim.setdefault(v.dim, []).append(k)
    edges = []
    for k, v in enumerate(vertices):
        for t in by_dim.get(v.dim - 1, []):
            if v.contains(vertices[t]):
                edges.append((k, t))
    configs = [[C for C in matchings if v.admits(C)] for v in vertices]
    orbit = [-1] * len(vertices)
    count = 0
    for k, v in enumerate(vertices):
        if orbit[k] >= 0:
            continue
        x = v
        while orbit[index[x]] < 0:
            orbit[index[x]] = count
            x = rotate(x)
        count += 1
    graph = DegeneracyGraph(n, vertices, edges, configs, orbit)
    if with_h:
        memo: dict[Word, int] = {}

        def hb(b: Word) -> int:
            if b not in memo:
                memo[b] = h_exact(b).h
            return memo[b]

        graph.h = []
        for v in vertices:
            total = 1
            for b in v.blocks():
                total *= hb(normalize_shift(b))
            graph.h.append(total)
    return graph


def one_dim_orbit_count(length: int) -> int:
    """Slide classes of conf-connected words, i.e. orbits of one-dimensional vertices."""
    from .words import slide

    seen: set[Word] = set()
    count = 0
    for w in conf_connected_words(length):
        if w in seen:
            continue
        count += 1
        x = w
        while x not in seen:
            seen.add(x)
            x = normalize_shift(slide(x))
    return count


def vertex_over_check(max_len: int, progress: Callable[[str], None] | None = None) -> list[Word]:
    """Conf-connected words whose reduction by the rightmost least arc disconnects."""
    bad = []
    for L in range(4, max_len + 1, 2):
        for w in conf_connected_words(L, progress):
            a = min(w)
            i = positions_of(w, a)[-1]
            j = positions_of(w, a + 2)[-1]
            rest = tuple(x for p, x in enumerate(w, start=1) if p not in (i, j))
            if not is_conf_connected(rest):
                bad.append(w)
        if progress:
            progress(f"vertex-over: length {L} done, {len(bad)} counterexamples")
    return bad
