from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confsphere.assemble import homology
from confsphere.coefficients import FieldSpec
from confsphere.free_algebra import BlockIndex, UnsupportedError, algebra, group_complete, monomial_basis
from confsphere.space_input import cp, sphere, wedge

from oracles import INF, free, upper_dl

W246 = wedge(sphere(2), sphere(4), sphere(6))
TWO = wedge(sphere(0), sphere(0))


def block_names(alg, block):
    return sorted(alg.mono_name(m) for m in alg.basis(block))


def test_f3_degree9_monomials():
    alg = group_complete(W246, 2, 3, 9)
    got = block_names(alg, BlockIndex(9, (), None))
    assert got == sorted(["[i1,i3]", "i1·[i1,i2]", "i2·[i1,i1]", "[i2,i2]", "i1^2·[i1,i1]"])


def test_two_point_degree1_basis():
    alg = group_complete(TWO, 2, 0, 3)
    got = block_names(alg, BlockIndex(1, (3, 2), 0))
    assert got == sorted(["[i1,i1]·i1·i2^2", "[i1,i2]·i1^2·i2", "[i2,i2]·i1^3"])


def test_square_in_conf_rn():
    got = monomial_basis(sphere(2), 2, FieldSpec(0), BlockIndex(4, (), 2))
    assert len(got) == 1
    assert algebra(sphere(2), 2, 0, 4, False).mono_name(got[0]) == "i^2"


def test_localization_inverts_points():
    alg = group_complete(sphere(0), 2, 0, 2)
    for m in range(-3, 4):
        assert block_names(alg, BlockIndex(0, (m,), 0)) == [f"i^{m}" if m not in (0, 1) else ("1" if m == 0 else "i")]
    plain = algebra(sphere(0), 2, 0, 2, False)
    assert plain.basis(BlockIndex(0, (-1,), 0)) == []


def test_balanced_component_degree0():
    alg = group_complete(TWO, 2, 0, 3)
    assert block_names(alg, BlockIndex(0, (0, 1), 0)) == ["i2"]


def test_connected_localization_is_identity():
    a = algebra(cp(2), 2, 3, 10, False)
    b = group_complete(cp(2), 2, 3, 10)
    for d in range(11):
        assert a.basis(BlockIndex(d, (), None)) == b.basis(BlockIndex(d, (), None))


def test_products():
    alg = group_complete(W246, 2, 3, 12)
    br = alg.lie_vector(alg.lie.bracket(alg.lie.leaf("i1"), alg.lie.leaf("i1")))
    assert alg.multiply(br, br) == {}
    x = alg.class_vector("i2")
    assert alg.multiply(x, x) != {}
    g = group_complete(sphere(0), 2, 0, 2)
    assert g.multiply(g.grouplike(0, 1), g.grouplike(0, -1)) == g.one()


def test_odd_elements_anticommute():
    alg = group_complete(W246, 2, 0, 14)
    lie = alg.lie
    u = alg.lie_vector(lie.bracket(lie.leaf("i1"), lie.leaf("i1")))
    v = alg.lie_vector(lie.bracket(lie.leaf("i1"), lie.leaf("i2")))
    uv, vu = alg.multiply(u, v), alg.multiply(v, u)
    assert uv == {m: -c for m, c in vu.items()}


def test_n1_words_and_limits():
    t = algebra(cp(2), 1, 0, 6, False)
    assert sorted(t.mono_name(w) for w in t.basis(BlockIndex(4, (), None))) == ["e1·e1", "e2"]
    with pytest.raises(UnsupportedError):
        group_complete(sphere(0), 1, 0, 4)
    words = algebra(sphere(0), 1, 0, 2, False)
    assert [words.mono_name(w) for w in words.basis(BlockIndex(0, (2,), 0))] == ["i·i"]


def _random_vectors(alg, degrees, draw):
    out = []
    for d in degrees:
        basis = alg.basis(BlockIndex(d, (), None))
        if not basis:
            out.append({})
            continue
        k = draw(st.integers(0, len(basis) - 1))
        c = draw(st.integers(1, 4))
        out.append({basis[k]: alg.field(c)})
    return out


@settings(max_examples=60, deadline=None)
@given(data=st.data(), p=st.sampled_from([0, 2, 3]))
def test_associative_and_graded_commutative(data, p):
    alg = group_complete(W246, 2, p, 24)
    degs = data.draw(st.lists(st.integers(2, 8), min_size=3, max_size=3))
    u, v, w = _random_vectors(alg, degs, data.draw)
    assert alg.multiply(alg.multiply(u, v), w) == alg.multiply(u, alg.multiply(v, w))
    sign = -1 if (degs[0] * degs[1]) % 2 else 1
    uv, vu = alg.multiply(u, v), alg.multiply(v, u)
    assert uv == {m: alg.field(sign * c) for m, c in vu.items() if alg.field(sign * c)}


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_words_associative(data):
    t = algebra(wedge(sphere(1), sphere(2)), 1, 0, 12, False)
    vecs = []
    for _ in range(3):
        basis = t.basis(BlockIndex(data.draw(st.integers(1, 4)), (), None))
        vecs.append({basis[data.draw(st.integers(0, len(basis) - 1))]: 1} if basis else {})
    u, v, w = vecs
    assert t.multiply(t.multiply(u, v), w) == t.multiply(u, t.multiply(v, w))


def test_saturation():
    small = group_complete(W246, 2, 3, 9)
    big = group_complete(W246, 2, 3, 15)
    for d in range(10):
        assert len(small.basis(BlockIndex(d, (), None))) == len(big.basis(BlockIndex(d, (), None)))


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (2, 0)])
@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_sphere_labels_match_closed_form(n, k, p):
    # free algebra on Q_I(iota), plus Q_J([iota,iota]) when n, k share parity and p != 2
    D, Wt = 14, 6
    gens = [(k, 1)] + upper_dl(k, 1, p, n, D)
    if (n - k) % 2 == 0 and p != 2:
        br = 2 * k + n - 1
        gens += [(br, 2)] + upper_dl(br, 2, p, n, D)
    want = free(gens, p, D, Wt if k == 0 else INF)
    table = homology(sphere(k), n, p, "conf_rn", D, max_weight=Wt, with_basis=False)
    if k == 0:
        got = {(d, c[0]): v for (d, c), v in table.dims().items()}
        assert got == want.by_degree_weight()
    else:
        got = {}
        for (d, _), v in table.dims().items():
            got[d] = got.get(d, 0) + v
        assert got == want.by_degree()
