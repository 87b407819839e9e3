"""The Browder action of label classes on the free algebra, plain and twisted.

``act(alg, x, v)`` is [x, v] for a label class x and an algebra vector v;
``act_twisted`` adds the correction sum [x', x''] chi(x''') v over the triple
coproduct of x.  ``action_matrix`` assembles either map on one target block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import ExactMatrix, axpy
from .free_algebra import BlockIndex, FreeAlgebra, TensorAlgebra
from .hopf import antipode, iterated_coproduct
from .space_input import UNIT


# -- n >= 2 -------------------------------------------------------------


def _lie_against_generator(alg: FreeAlgebra, lievec: dict, gen_ops, base: int) -> dict:
    """[w, Q_I b] for a Lie vector w, as a Lie vector."""
    if not lievec:
        return {}
    if not gen_ops:
        return alg.lie.bracket_vectors(lievec, {base: alg.field.one()})
    eps, i = gen_ops[0]
    if eps or i != alg.n - 1:
        return {}
    # top operation: ad_z^p(w) with z = the rest of the string applied to base
    inner = gen_ops[1:]
    out = lievec
    for _ in range(alg.field.characteristic):
        out = _lie_against_generator(alg, out, inner, base)
        if not out:
            break
    return out


def _act_generator(alg: FreeAlgebra, xleaf: int, g: int) -> dict:
    key = ("gen", xleaf, g)
    hit = alg.act_cache.get(key)
    if hit is None:
        gen = alg.generators[g]
        lie = _lie_against_generator(alg, {xleaf: alg.field.one()}, gen.ops, gen.base)
        hit = alg.lie_vector(lie)
        alg.act_cache[key] = hit
    return hit


def _act_grouplike(alg: FreeAlgebra, xleaf: int, slot: int) -> dict:
    key = ("gl", xleaf, slot)
    hit = alg.act_cache.get(key)
    if hit is None:
        aleaf = next(b for b, s in alg._gl_slot.items() if s == slot)
        hit = alg.lie_vector(alg.lie.bracket(xleaf, aleaf))
        alg.act_cache[key] = hit
    return hit


def _act_monomial(alg: FreeAlgebra, cid: str, m) -> dict:
    key = ("mono", cid, m)
    hit = alg.act_cache.get(key)
    if hit is not None:
        return hit
    f = alg.field
    xleaf = alg.lie.leaf(cid)
    xpar = (alg.spec.degree(cid) + alg.n - 1) % 2
    gl, factors = m
    zero_gl = tuple(0 for _ in gl)
    out: dict = {}
    prefix_deg = 0
    for pos, (g, e) in enumerate(factors):
        br = _act_generator(alg, xleaf, g)
        if br:
            # move x past f1..f_{j-1}; [x, g^e] = e [x,g] g^(e-1) (odd g has e = 1 unless char 2)
            sign = -1 if (prefix_deg * xpar) % 2 else 1
            after = ((g, e - 1),) if e > 1 else ()
            head = {(zero_gl, factors[:pos]): f.one()}
            tail = {(gl, after + factors[pos + 1 :]): f.one()}
            axpy(f, out, f(sign * e), alg.multiply(alg.multiply(head, br), tail))
        prefix_deg += alg._gen_deg[g] * e
    # grouplikes have degree 0, so no Koszul sign on their part
    for slot, k in enumerate(gl):
        if not k:
            continue
        br = _act_grouplike(alg, xleaf, slot)
        if not br:
            continue
        lowered = tuple(e - (1 if j == slot else 0) for j, e in enumerate(gl))
        sign = -1 if (prefix_deg * xpar) % 2 else 1
        term = alg.multiply({(zero_gl, factors): f.one()}, alg.multiply(br, {(lowered, ()): f.one()}))
        axpy(f, out, f(sign * k), term)
    alg.act_cache[key] = out
    return out


# -- n = 1 --------------------------------------------------------------


def _act_word(alg: TensorAlgebra, cid: str, w) -> dict:
    f = alg.field
    xi = alg.spec.index(cid)
    dx = alg.spec.degree(cid)
    sign = -1 if (dx * alg.mono_degree(w)) % 2 else 1
    out = {(xi,) + w: f.one()}
    axpy(f, out, f(-sign), {w + (xi,): f.one()})
    return out


# -- public -------------------------------------------------------------


def act(alg, cid: str, v: dict) -> dict:
    """[x, v] for the label class ``cid`` and an algebra vector ``v``."""
    f = alg.field
    out: dict = {}
    single = _act_word if isinstance(alg, TensorAlgebra) else _act_monomial
    for m, c in v.items():
        axpy(f, out, c, single(alg, cid, m))
    return out


def class_bracket(alg, a: str, b: str) -> dict:
    """[a, b] of two label classes as an algebra vector (zero if either is the unit)."""
    if a == UNIT or b == UNIT:
        return {}
    return act(alg, a, alg.class_vector(b))


def twist_correction(alg, cid: str) -> dict:
    """sum over the triple coproduct of [x', x''] chi(x''')."""
    key = ("twist", cid)
    hit = alg.act_cache.get(key)
    if hit is not None:
        return hit
    f = alg.field
    out: dict = {}
    for c, a, b, d in iterated_coproduct(alg.spec, cid):
        br = class_bracket(alg, a, b)
        if br:
            axpy(f, out, f(c), alg.multiply(br, antipode(alg, d)))
    alg.act_cache[key] = out
    return out


def act_twisted(alg, cid: str, v: dict) -> dict:
    """k(x (x) v) = [x, v] + sum [x', x''] chi(x''') v."""
    out = act(alg, cid, v)
    corr = twist_correction(alg, cid)
    if corr:
        axpy(alg.field, out, alg.field.one(), alg.multiply(corr, v))
    return out


@dataclass
class ActionBlock:
    target: BlockIndex
    sources: list  # (class id, monomial) pairs, column order
    targets: list  # monomials, row order
    matrix: ExactMatrix


def source_pairs(alg, target: BlockIndex) -> list:
    """Enumerated (x, v) with |x| + n - 1 + |v| and component matching the target block."""
    spec = alg.spec
    pairs = []
    for cls in spec.classes:
        d = target.degree - cls.degree - (alg.n - 1)
        if d < 0:
            continue
        comp = tuple(a - b for a, b in zip(target.component, spec.component_vector(cls.id)))
        w = None if target.weight is None else target.weight - spec.base_weight(cls.id)
        if w is not None and w < 0:
            continue
        for m in alg.basis(BlockIndex(d, comp, w)):
            pairs.append((cls.id, m))
    return pairs


def action_matrix(alg, target: BlockIndex, twisted: bool = False) -> ActionBlock:
    rows = alg.basis(target)
    row_index = {m: i for i, m in enumerate(rows)}
    sources = source_pairs(alg, target)
    fn = act_twisted if twisted else act
    one = alg.field.one()
    cols = []
    for cid, m in sources:
        img = fn(alg, cid, {m: one})
        col = {}
        for mono, c in img.items():
            i = row_index.get(mono)
            if i is None:
                raise ArithmeticError(f"[{cid}, {alg.mono_name(m)}] left the block {target}: {alg.mono_name(mono)}")
            col[i] = c
        cols.append(col)
    return ActionBlock(target, sources, rows, ExactMatrix(alg.field, len(rows), len(sources), cols))
