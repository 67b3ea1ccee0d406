import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from conftest import even_words
from sl2words.qchar import (
    EllMonomial,
    QCharacter,
    dominant_factorize,
    dominant_monomial,
    eval_module_qchar,
    general_position,
    h_char_closed,
    h_char_coeff,
    is_right_negative,
    overpartition_class_count,
    overpartition_series,
    peel_composition_factors,
    string_set_qchar,
    two_string_product_sequences,
    word_qchar,
)
from sl2words.words import DomainError, slide


def mono(**kw):
    return EllMonomial.from_map({int(k[1:]): v for k, v in kw.items()})


def test_eval_module_examples():
    a = eval_module_qchar(4, 4)
    assert a == QCharacter({mono(l4=1): 1, mono(l6=-1): 1})
    ch = eval_module_qchar(0, 2)
    assert ch == QCharacter({mono(l0=1, l2=1): 1, mono(l0=1, l4=-1): 1, mono(l2=-1, l4=-1): 1})
    assert ch.dominant() == [mono(l0=1, l2=1)]
    with pytest.raises(DomainError):
        eval_module_qchar(2, 0)
    with pytest.raises(DomainError):
        eval_module_qchar(1, 3)


def test_word_qchar_examples():
    ch = word_qchar((0, 2))
    assert len(ch) == 4 and ch.coefficient(EllMonomial.one()) == 1
    sq = word_qchar((0, 0))
    assert sq.coefficient(mono(l0=1, l2=-1)) == 2
    assert sq.total() == 4


@pytest.mark.parametrize("w, h", [((0, 0, 2, 2), 1), ((0, 2, 2, 4), 2), ((0, 0, 2, 2, 2, 2, 4, 4), 6)])
def test_h_char_values(w, h):
    assert h_char_coeff(w) == h
    assert h_char_closed(w) == h


def test_h_char_not_slide_invariant():
    w = (0, 0, 2, 2)
    assert slide(w) == (0, 2, 2, 4)
    assert h_char_coeff(w) == 1 != h_char_coeff(slide(w)) == 2


def test_h_char_random_words():
    rng = random.Random(20240601)
    for _ in range(1000):
        n = rng.randint(0, 5)
        w = tuple(2 * rng.randint(0, 4) for _ in range(2 * n))
        assert h_char_closed(w) == h_char_coeff(w), w


def test_h_char_brute_force_small():
    # the coefficient read off the full product of letter characters
    for w in [(0, 2), (0, 0, 2, 2), (0, 2, 2, 4), (2, 0, 4, 2)]:
        assert word_qchar(w).coefficient(EllMonomial.one()) == h_char_coeff(w)


@given(even_words(max_size=8))
def test_h_char_permutation_invariant(w):
    rng = random.Random(len(w))
    v = list(w)
    rng.shuffle(v)
    assert h_char_coeff(tuple(v)) == h_char_coeff(w)
    assert h_char_closed(tuple(v)) == h_char_closed(w)


def test_right_negativity():
    for alpha in range(0, 6, 2):
        for beta in range(alpha, alpha + 10, 2):
            for m in eval_module_qchar(alpha, beta).terms:
                assert m.is_dominant() or is_right_negative(m)


def brute_factorizations(m):
    """All pairwise general-position string multisets with head ``m``."""
    target = Counter(m.as_map())
    letters = sorted(target)
    strings = [(a, b) for a in letters for b in letters if b >= a and all(x in target for x in range(a, b + 1, 2))]
    size = sum(target.values())
    out = []
    for k in range(1, size + 1):
        for combo in itertools.combinations_with_replacement(strings, k):
            if dominant_monomial(combo) != m:
                continue
            if all(general_position(s, t) for s, t in itertools.combinations(combo, 2)):
                out.append(tuple(sorted(combo)))
    return out


def test_dominant_factorize_examples():
    assert dominant_factorize(mono(l0=1, l2=1)) == ((0, 2),)
    assert dominant_factorize(mono(l0=1, l6=1)) == ((0, 0), (6, 6))
    assert dominant_factorize(mono(l0=1, l2=2, l4=1)) == ((0, 4), (2, 2))
    with pytest.raises(DomainError):
        dominant_factorize(mono(l0=1, l2=-1))


@given(st.dictionaries(st.sampled_from([0, 2, 4, 6, 8]), st.integers(1, 2), min_size=1, max_size=4))
def test_dominant_factorize_unique(exps):
    m = EllMonomial.from_map(exps)
    if m.degree > 8:
        return
    found = brute_factorizations(m)
    assert found == [dominant_factorize(m)]


@pytest.mark.parametrize("w", [(0, 2), (0, 2, 4, 6), (0, 0, 2, 2), (0, 2, 2, 4), (4, 0, 2, 6, 2)])
def test_peeling_sums_to_word(w):
    factors = peel_composition_factors(w)
    total = QCharacter()
    for f in factors:
        total = total + string_set_qchar(f)
    assert total == word_qchar(w)


def test_peeling_examples():
    assert sorted(peel_composition_factors((0, 2))) == [(), ((0, 2),)]
    got = Counter(peel_composition_factors((0, 2, 4, 6)))
    assert got == Counter([((0, 6),), ((0, 2),), ((4, 6),), ((0, 0), (6, 6)), ()])


@given(even_words(max_size=5, top=8))
def test_peeling_random(w):
    factors = peel_composition_factors(w)
    total = QCharacter()
    for f in factors:
        total = total + string_set_qchar(f)
    assert total == word_qchar(w)
    # the trivial factor count is the coefficient of 1
    assert factors.count(()) == h_char_coeff(w)


def test_two_string_examples():
    assert two_string_product_sequences(0, 0, 2, 2) == ((), ((0, 2),))
    assert two_string_product_sequences(0, 10, 4, 16) == (((0, 0), (14, 16)), ((0, 16), (4, 10)))
    assert two_string_product_sequences(0, 2, 2, 4) == ((), ((0, 4), (2, 2)))
    with pytest.raises(DomainError):
        two_string_product_sequences(0, 2, 6, 8)


def test_two_string_character_identity():
    for a1, b1, a2, b2 in itertools.product(range(0, 8, 2), repeat=4):
        if not (a1 <= b1 and a2 <= b2 and a1 < a2 <= b1 + 2 <= b2):
            continue
        sub, quot = two_string_product_sequences(a1, b1, a2, b2)
        lhs = eval_module_qchar(a1, b1) * eval_module_qchar(a2, b2)
        assert string_set_qchar(sub) + string_set_qchar(quot) == lhs


def test_subtraction_guard():
    with pytest.raises(ArithmeticError):
        QCharacter.one() - word_qchar((0, 2)) - QCharacter.one()


def brute_overpartition_basis(n):
    """Alternating words in x, y whose exponents rise weakly to some peak, then fall strictly."""
    if n == 0:
        return 1
    found = set()
    for r in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), r - 1):
            parts = [b - a for a, b in zip((0,) + cuts, cuts + (n,))]
            ok = any(
                all(parts[i] <= parts[i + 1] for i in range(m))
                and all(parts[i] > parts[i + 1] for i in range(m, r - 1))
                for m in range(r)
            )
            if ok:
                for first in "xy":
                    letters = [first if k % 2 == 0 else "yx"["xy".index(first)] for k in range(r)]
                    found.add("".join(c * e for c, e in zip(letters, parts)))
    return len(found)


def test_overpartitions():
    series = overpartition_series(12)
    assert [overpartition_class_count(n) for n in (0, 1, 5)] == [1, 2, 24]
    for n in range(13):
        assert overpartition_class_count(n) == series[n]
        assert brute_overpartition_basis(n) == series[n]
