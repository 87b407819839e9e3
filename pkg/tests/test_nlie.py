from __future__ import annotations

import itertools
import random

import pytest

from confsphere.coefficients import FieldSpec, Echelon
from confsphere.nlie import BoundError, FreeLie, enumerate_lie_basis, tree_leaves, tree_name
from confsphere.space_input import sphere, wedge


def names(basis):
    return [g.name for g in basis]


@pytest.mark.parametrize("p", [0, 3])
def test_wedge_basis_odd_char(p):
    spec = wedge(sphere(2), sphere(4), sphere(6))
    basis = enumerate_lie_basis(spec, 2, FieldSpec(p), 9)
    assert names(basis) == ["i1", "i2", "i3", "[i1,i1]", "[i1,i2]", "[i1,i3]", "[i2,i2]"]
    assert [g.degree for g in basis] == [2, 4, 6, 5, 7, 9, 9]


def test_wedge_basis_char_two():
    spec = wedge(sphere(2), sphere(4), sphere(6))
    assert names(enumerate_lie_basis(spec, 2, FieldSpec(2), 9)) == ["i1", "i2", "i3", "[i1,i2]", "[i1,i3]"]


def test_two_points_counts():
    # weights of basis elements for two degree-0 classes at n = 2
    spec = wedge(sphere(0), sphere(0))
    for p, expected in ((2, [2, 1, 2, 3, 6]), (0, [2, 3, 2, 3, 6])):
        lie = FreeLie(spec, 2, FieldSpec(p), 4)
        counts = [sum(1 for g in lie.basis if g.weight == w) for w in range(1, 6)]
        assert counts == expected


def test_bound_error():
    lie = FreeLie(wedge(sphere(2), sphere(4)), 2, FieldSpec(0), 6)
    assert names(lie.basis) == ["i1", "i2", "[i1,i1]"]
    with pytest.raises(BoundError):
        lie.normal_form({("i1", "i2"): 1})


# -- brute-force oracle: bracket trees modulo the Lie relations ------------


def _trees(content, leaves):
    """All bracket trees with the given multiset of leaves."""
    w = sum(content)
    if w == 1:
        return [leaves[content.index(1)]]
    out = []
    for left in itertools.product(*(range(c + 1) for c in content)):
        left = tuple(left)
        right = tuple(c - a for c, a in zip(content, left))
        if sum(left) == 0 or sum(right) == 0:
            continue
        for a in _trees(left, leaves):
            for b in _trees(right, leaves):
                out.append((a, b))
    return out


def quotient_dims(spec, n, p, max_weight):
    """dim of (free magma / Lie ideal) per content, by direct elimination."""
    f = FieldSpec(p)
    leaves = spec.ids()
    shift = {c.id: (c.degree + n - 1) % 2 for c in spec.classes}

    def par(t):
        return sum(shift[x] for x in tree_leaves(t)) % 2

    contents = [
        c for w in range(1, max_weight + 1) for c in itertools.product(range(w + 1), repeat=len(leaves)) if sum(c) == w
    ]
    trees = {c: _trees(c, leaves) for c in contents}
    relations: dict = {c: [] for c in contents}

    def add(c, rel):
        rel = {k: f(v) for k, v in rel.items() if f(v)}
        if rel:
            relations[c].append(rel)

    for c in contents:
        for t in trees[c]:
            if isinstance(t, str):
                continue
            u, v = t
            s = -1 if par(u) * par(v) else 1
            add(c, {t: 1, (v, u): s} if (v, u) != t else {t: 1 + s})
            if u == v and (p == 2 or par(u) == 0):
                add(c, {t: 1})
            if not isinstance(v, str) and v[0] == u and v[1] == u and par(u) == 1:
                add(c, {t: 1})
    # Jacobi for every triple of trees
    for c in contents:
        for t in trees[c]:
            if isinstance(t, str) or isinstance(t[1], str):
                continue
            u, (v, w) = t
            pu, pv, pw = par(u), par(v), par(w)
            rel: dict = {}
            for tree, sign in (
                ((u, (v, w)), pu * pw),
                ((v, (w, u)), pv * pu),
                ((w, (u, v)), pw * pv),
            ):
                rel[tree] = rel.get(tree, 0) + (-1 if sign % 2 else 1)
            add(c, rel)
    # close under bracketing with trees on either side
    for c in sorted(contents, key=sum):
        for c1 in contents:
            c2 = tuple(a - b for a, b in zip(c, c1))
            if c2 not in trees:
                continue
            for rel in list(relations[c1]):
                for t in trees[c2]:
                    add(c, {(r, t): v for r, v in rel.items()})
                    add(c, {(t, r): v for r, v in rel.items()})
    dims = {}
    for c in contents:
        index = {t: i for i, t in enumerate(trees[c])}
        ech = Echelon(f)
        for rel in relations[c]:
            ech.insert({index[t]: v for t, v in rel.items()})
        dims[c] = len(trees[c]) - len(ech)
    return dims


CASES = [
    (wedge(sphere(1), sphere(2)), 2),
    (wedge(sphere(0), sphere(0)), 2),
    (wedge(sphere(1), sphere(1)), 2),
    (sphere(2), 3),
]


@pytest.mark.parametrize("spec,n", CASES, ids=lambda x: getattr(x, "name", str(x)))
@pytest.mark.parametrize("p", [0, 2, 3])
def test_basis_matches_relation_quotient(spec, n, p):
    oracle = quotient_dims(spec, n, p, 4)
    lie = FreeLie(spec, n, FieldSpec(p), 40, max_weight=4)
    for content, dim in oracle.items():
        assert len(lie._by_content.get(content, [])) == dim, content


# -- antisymmetry and Jacobi under normal_form ---------------------------


def random_tree(rng, leaves, weight):
    if weight == 1:
        return rng.choice(leaves)
    k = rng.randint(1, weight - 1)
    return (random_tree(rng, leaves, k), random_tree(rng, leaves, weight - k))


def relation_trials(p: int, count: int, seed: int = 7) -> int:
    """Random antisymmetry/Jacobi instances; returns how many failed to vanish."""
    spec = wedge(sphere(1), sphere(2), sphere(0))
    lie = FreeLie(spec, 2, FieldSpec(p), 30, max_weight=6)
    rng = random.Random(seed + p)
    leaves = spec.ids()

    def par(t):
        return lie.tree_image(t)[1]

    failures = 0
    for k in range(count):
        if k % 2 == 0:
            u = random_tree(rng, leaves, rng.randint(1, 3))
            v = random_tree(rng, leaves, rng.randint(1, 3))
            s = -1 if par(u) * par(v) else 1
            expr = {(u, v): 1}
            expr[(v, u)] = expr.get((v, u), 0) + s
        else:
            u, v, w = (random_tree(rng, leaves, rng.randint(1, 2)) for _ in range(3))
            expr = {}
            for tree, sign in (((u, (v, w)), par(u) * par(w)), ((v, (w, u)), par(v) * par(u)), ((w, (u, v)), par(w) * par(v))):
                expr[tree] = expr.get(tree, 0) + (-1 if sign else 1)
        if lie.normal_form(expr):
            failures += 1
    return failures


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_relations_vanish(p):
    assert relation_trials(p, 200) == 0


def test_tree_name():
    assert tree_name(("a", ("b", "c"))) == "[a,[b,c]]"
