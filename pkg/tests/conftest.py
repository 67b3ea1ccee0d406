import itertools

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def even_words(min_size=0, max_size=8, top=8):
    return st.lists(st.integers(0, top // 2).map(lambda k: 2 * k), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def paired_words(draw, max_pairs=4, top=8):
    """Even-length words, biased towards ones that admit configurations."""
    n = draw(st.integers(1, max_pairs))
    lefts = draw(st.lists(st.integers(0, top // 2 - 1), min_size=n, max_size=n))
    letters = [2 * x for x in lefts] + [2 * x + 2 for x in lefts]
    return tuple(draw(st.permutations(letters)))


def brute_configs(w):
    """All perfect matchings by arcs; the first free position is always a left end."""
    out = []

    def rec(free, arcs):
        if not free:
            out.append(tuple(sorted(arcs)))
            return
        i = free[0]
        for j in free[1:]:
            if w[j] == w[i] + 2:
                rec([x for x in free if x not in (i, j)], arcs + [(i + 1, j + 1)])

    if len(w) % 2 == 0:
        rec(list(range(len(w))), [])
    return sorted(set(out))


def all_even_words(length, top):
    return itertools.product(range(0, top + 1, 2), repeat=length)


@pytest.fixture(scope="session")
def corpus8():
    from sl2words.corpus import conf_connected_words

    return [w for L in (2, 4, 6, 8) for w in conf_connected_words(L)]
