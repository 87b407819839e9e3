from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confsphere.coefficients import FieldSpec
from confsphere.dyer_lashof import admissible_strings, enumerate_admissible, is_admissible, ops_name, string_degree
from confsphere.nlie import FreeLie
from confsphere.space_input import sphere

from oracles import upper_dl


def test_char2_n3_degree1():
    got = admissible_strings(1, 2, 3, 9)
    assert got == [((), 1), (((0, 1),), 3), (((0, 2),), 4), (((0, 1), (0, 1)), 7), (((0, 1), (0, 2)), 9)]


def test_odd_prime_parity():
    # n = 2, p = 3: Q_1 needs an odd class
    assert admissible_strings(2, 3, 2, 40) == [((), 2)]
    got = {ops_name(ops): d for ops, d in admissible_strings(5, 3, 2, 60)}
    assert got == {"": 5, "bQ1": 16, "Q1": 17, "bQ1 Q1": 52, "Q1 Q1": 53}


def test_char_zero_and_n1():
    assert admissible_strings(3, 0, 4, 50) == [((), 3)]
    assert admissible_strings(3, 2, 1, 50) == [((), 3)]


def test_generator_weight():
    lie = FreeLie(sphere(1), 3, FieldSpec(2), 9)
    gens = enumerate_admissible(lie.basis[0], FieldSpec(2), 3, 9)
    assert [(g.name, g.degree, g.weight) for g in gens] == [
        ("i", 1, 1),
        ("Q1 i", 3, 2),
        ("Q2 i", 4, 2),
        ("Q1 Q1 i", 7, 4),
        ("Q1 Q2 i", 9, 4),
    ]


@settings(max_examples=80, deadline=None)
@given(q=st.integers(0, 7), p=st.sampled_from([2, 3, 5]), n=st.integers(2, 5))
def test_lower_and_upper_index_enumerations_agree(q, p, n):
    bound = 40
    lower = sorted(d for ops, d in admissible_strings(q, p, n, bound) if ops)
    upper = sorted(d for d, _ in upper_dl(q, 1, p, n, bound))
    assert lower == upper


@settings(max_examples=80, deadline=None)
@given(q=st.integers(0, 7), p=st.sampled_from([2, 3]), n=st.integers(2, 5))
def test_enumerated_strings_are_admissible(q, p, n):
    for ops, d in admissible_strings(q, p, n, 50):
        assert is_admissible(ops, q, p, n)
        assert string_degree(ops, q, p) == d


@pytest.mark.parametrize(
    "ops,q,p,n,ok",
    [
        (((0, 2), (0, 1)), 1, 2, 3, False),  # index decreases inward
        (((0, 1), (0, 1)), 1, 2, 2, True),
        (((0, 3),), 1, 2, 3, False),  # index must be below n
        (((1, 1),), 1, 2, 2, False),  # no Bockstein at p = 2
        (((0, 1),), 2, 3, 2, False),  # parity at odd p
        (((1, 1),), 1, 3, 2, True),
    ],
)
def test_is_admissible_cases(ops, q, p, n, ok):
    assert is_admissible(ops, q, p, n) is ok
