from collections import Counter
from fractions import Fraction

import pytest

from sl2words.arcs import all_configs, uncolored_catalan
from sl2words.corpus import conf_connected_words
from sl2words.degeneracy import (
    chain_limits,
    deg_std_onto_check,
    degeneracy_graph,
    generic_vector,
    generic_word,
    intersect,
    one_dim_orbit_count,
    plane_of,
    restrict,
    restriction_chains,
    rotate,
    specialize_vector,
    vertex_over_check,
)
from sl2words.rep import sigma_vector, to_catalan_coords
from sl2words.scalars import ONE, ZERO, UPolyVec
from sl2words.words import DomainError, conf_components, normalize_shift, slide

C3 = ((1, 4), (2, 5), (3, 6))


@pytest.fixture(scope="module")
def dg4():
    return degeneracy_graph(2)


@pytest.fixture(scope="module")
def dg6():
    return degeneracy_graph(3, with_h=True)


def test_generic_word_examples():
    assert generic_word(((1, 2), (3, 4)), (0, 6)) == (0, 2, 6, 8)
    assert generic_word(((1, 2),), (0,)) == (0, 2)
    with pytest.raises(DomainError):
        generic_word(((1, 2),), (0, 2))


def displayed_vector():
    ctx = UPolyVec.context(3)
    q, u1, u2, u3 = ctx.gens()
    q2 = q * q
    return [
        q * (u1 - u3) * (q2 * u1 - u2) * (q2 * u2 - u3),
        q2 * (u1 - u2) * (u1 - u3) * (q2 * u2 - u3),
        q2 * (u1 - u3) * (u2 - u3) * (q2 * u1 - u2),
        q * (u1 - u3) * (q2 * u1 - u2) * (q2 * u2 - u3),
        (q2 * u1 - u2) * (q2 * u1 - u3) * (q2 * u2 - u3),
    ]


def test_catalan_order_matches_display():
    want = [[1, 3, 5], [1, 3, 4], [1, 2, 5], [1, 2, 4], [1, 2, 3]]
    assert [sorted(i for i, _ in C) for C in uncolored_catalan(3)] == want


def test_generic_vector_matches_display():
    v = generic_vector(C3)
    assert v.projectively_equal(displayed_vector())


def test_base_vector_is_pure_tensor():
    v = generic_vector(((1, 2), (3, 4), (5, 6)))
    assert v.support() == [0]
    v = restrict(v, 2, 1, 4)
    assert v.support() == [0]


def test_restriction_chains_example():
    v = generic_vector(C3)
    first = restrict(restrict(v, 2, 1, 2), 3, 1, 0)
    assert specialize_vector(first) == [ZERO, ONE, ZERO, ZERO, ZERO]
    second = restrict(restrict(v, 3, 1, 0), 2, 1, 2)
    assert specialize_vector(second) == [ZERO, ZERO, ZERO, ZERO, ONE]


def test_chain_limits_span():
    w = (0, 2, 0, 2, 4, 2)
    limits = {tuple(x) for x in chain_limits(w, C3)}
    assert (ZERO, ONE, ZERO, ZERO, ZERO) in limits
    assert (ZERO, ZERO, ZERO, ZERO, ONE) in limits
    assert deg_std_onto_check(w).span == 2


def test_chain_count():
    # pick one pair of classes to merge at every step
    assert [len(list(restriction_chains(n))) for n in (1, 2, 3, 4)] == [1, 1, 3, 18]


@pytest.mark.parametrize("C", [C3, ((1, 3), (2, 4)), ((1, 4), (2, 6), (3, 5)), ((1, 5), (2, 3), (4, 6))])
def test_generic_vector_specializes_to_sigma(C):
    n = len(C)
    a = [6 * k for k in range(n)]
    w = generic_word(C, a)
    v = generic_vector(C)
    gens = list(v.ctx.gens())
    q = gens[0]
    subs = [q] + [q ** a[k] for k in range(n)]
    spec = [c.compose(*subs) for c in v.coords]
    sig = to_catalan_coords(sigma_vector(w, C))
    sig_list = [sig.get(B, ZERO) for B in uncolored_catalan(n)]
    # cross-multiply after evaluating both at a rational q
    r = Fraction(7, 5)
    xs = [_eval(c, r) for c in spec]
    ys = [s.evaluate(r) for s in sig_list]
    for i in range(len(xs)):
        for j in range(len(xs)):
            assert xs[i] * ys[j] == xs[j] * ys[i]
    assert any(xs)


def _eval(p, r):
    total = 0
    for exps, c in p.to_dict().items():
        assert not any(exps[1:])
        total += int(c) * r ** int(exps[0])
    return total


class TestGraph:
    def test_dg4(self, dg4):
        assert len(dg4.vertices) == 5
        assert len(dg4.edges) == 4
        dims = Counter(v.dim for v in dg4.vertices)
        assert dims == {2: 3, 1: 2}

    def test_dg4_empty_intersection(self):
        A = plane_of(((1, 2), (3, 4)), 4)
        B = plane_of(((1, 4), (2, 3)), 4)
        assert intersect(A, B) is None
        X = intersect(A, plane_of(((1, 3), (2, 4)), 4))
        assert X is not None and X.generic_word()[:4] == (0, 2, 2, 4)

    def test_dg6_counts(self, dg6):
        assert len(dg6.vertices) == 57
        sizes = dg6.orbit_sizes()
        assert {d: sorted(s) for d, s in sizes.items()} == {
            3: [1, 2, 3, 3, 6],
            2: [3, 3, 6, 6, 6, 6],
            1: [3, 3, 6],
        }
        assert sum(len(s) for s in sizes.values()) == 14

    def test_dg6_h_labels(self, dg6):
        twos = {dg6.orbit[k] for k, h in enumerate(dg6.h) if h == 2}
        assert len(twos) == 1
        members = [normalize_shift(dg6.vertices[k].generic_word()) for k in range(len(dg6.vertices)) if dg6.orbit[k] in twos]
        assert all(dg6.vertices[k].dim == 1 for k in range(len(dg6.vertices)) if dg6.orbit[k] in twos)
        orbit_020242 = {(0, 2, 0, 2, 4, 2)}
        x = (0, 2, 0, 2, 4, 2)
        for _ in range(6):
            x = normalize_shift(slide(x))
            orbit_020242.add(x)
        assert set(members) <= orbit_020242
        assert set(dg6.h) == {1, 2}

    def test_dg6_quotient_multiplicities(self, dg6):
        mult = Counter()
        for a, b in dg6.edges:
            mult[(dg6.orbit[a], b)] += 1
        assert set(mult.values()) <= {1, 2}
        assert 2 in mult.values()

    def test_structure(self, dg6):
        n = dg6.n
        targets = {b for _, b in dg6.edges}
        sources = {a for a, _ in dg6.edges}
        for k, v in enumerate(dg6.vertices):
            if v.dim == n:
                assert k not in targets
                assert len(dg6.configs[k]) >= 1
            if v.dim == 1:
                assert k not in sources
            w = v.generic_word()
            assert len(conf_components(w).blocks) == v.dim
            assert set(all_configs(w)) == set(dg6.configs[k])

    def test_edges_are_codim_one(self, dg6):
        for a, b in dg6.edges:
            A, B = dg6.vertices[a], dg6.vertices[b]
            assert A.contains(B) and A.dim == B.dim + 1

    def test_rotation_is_order_2n(self, dg6):
        for v in dg6.vertices[:10]:
            x = v
            for _ in range(6):
                x = rotate(x)
            assert x == v

    def test_one_dim_vertices_are_words(self, dg6):
        ones = sorted(normalize_shift(v.generic_word()) for v in dg6.vertices if v.dim == 1)
        assert ones == sorted(conf_connected_words(6))

    def test_exports(self, dg4):
        js = dg4.to_json()
        assert len(js["nodes"]) == 5 and len(js["edges"]) == 4
        dot = dg4.to_dot()
        assert dot.startswith("digraph DG4 {") and dot.count("->") == 4
        assert dg4.dumps("json") == dg4.dumps("json")
        with pytest.raises(DomainError):
            dg4.dumps("xml")

    def test_cap(self):
        with pytest.raises(DomainError):
            degeneracy_graph(5)


@pytest.mark.slow
def test_dg8_one_dim_orbits():
    assert one_dim_orbit_count(8) == 20


@pytest.mark.parametrize("L", [4, 6])
def test_vertex_over_small(L):
    assert vertex_over_check(L) == []


@pytest.mark.slow
def test_vertex_over_to_ten():
    assert vertex_over_check(10) == []


def test_deg_std_onto_small():
    for L in (2, 4, 6):
        for w in conf_connected_words(L):
            r = deg_std_onto_check(w)
            assert r.singular and r.span == r.h, w
