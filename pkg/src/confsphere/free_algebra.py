"""Homology of the free objects C(R^n, X) and its group completion.

For n >= 2 this is the free graded-commutative algebra on Dyer-Lashof
strings applied to a Lie basis, with the degree-0 component classes kept
apart as an exponent vector (integers once localized).  For n = 1 it is the
tensor algebra on the label classes.

A monomial for n >= 2 is ``(grouplike_exponents, ((gen, exp), ...))`` with
generator indices increasing; for n = 1 it is a word, a tuple of class
indices.  Vectors are dicts from monomials to nonzero scalars.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .coefficients import FieldSpec, axpy
from .dyer_lashof import DLGenerator, enumerate_admissible
from .nlie import BoundError, FreeLie
from .space_input import CoalgebraSpec

log = logging.getLogger(__name__)


class UnsupportedError(Exception):
    """The requested space/label combination is outside what this engine handles."""


@dataclass(frozen=True, order=True)
class BlockIndex:
    """Degree, pi_0 component vector and (optionally) base-component weight."""

    degree: int
    component: tuple[int, ...] = ()
    weight: int | None = None


class FreeAlgebra:
    """H(C(R^n,X)) for n >= 2, or H(Omega^n Sigma^n X) when ``localized``."""

    def __init__(self, spec: CoalgebraSpec, n: int, field: FieldSpec, max_degree: int, localized: bool = False):
        if n < 2:
            raise ValueError("use TensorAlgebra for n = 1")
        self.spec = spec
        self.n = n
        self.field = field
        self.max_degree = max_degree
        self.localized = localized
        self.rank = len(spec.components)
        self.lie = FreeLie(spec, n, field, max_degree)
        self._zero_gl = (0,) * self.rank
        self._gl_slot: dict[int, int] = {}
        for j, comp in enumerate(spec.components):
            self._gl_slot[self.lie.leaf(spec.component_class(comp))] = j
        gens: list[DLGenerator] = []
        for b in self.lie.basis:
            for g in enumerate_admissible(b, field, n, max_degree):
                if not g.ops and b.index in self._gl_slot:
                    continue
                gens.append(g)
        gens.sort(key=lambda g: (g.degree, g.weight, g.component, g.base, g.ops))
        self.generators = gens
        self._gen_index = {(g.ops, g.base): k for k, g in enumerate(gens)}
        self._gen_deg = [g.degree for g in gens]
        self._gen_odd = [g.degree % 2 == 1 for g in gens]
        self._signs = field.characteristic != 2
        self._positive: dict[int, list] = {}
        self._mul_cache: dict = {}
        self.act_cache: dict = {}
        log.debug("free algebra %s n=%d %s: %d lie, %d generators", spec.name, n, field.name, len(self.lie.basis), len(gens))

    # -- generators ----------------------------------------------------
    def gen_index(self, ops, base: int) -> int:
        try:
            return self._gen_index[(ops, base)]
        except KeyError:
            raise BoundError(f"generator {ops} on Lie class {self.lie.basis[base].name} is beyond degree {self.max_degree}") from None

    def is_grouplike_leaf(self, lie_idx: int) -> bool:
        return lie_idx in self._gl_slot

    # -- vectors -------------------------------------------------------
    def one(self) -> dict:
        return {(self._zero_gl, ()): self.field.one()}

    def gen_vector(self, k: int) -> dict:
        return {(self._zero_gl, ((k, 1),)): self.field.one()}

    def grouplike(self, slot: int, exponent: int = 1) -> dict:
        if exponent < 0 and not self.localized:
            raise UnsupportedError("inverting a component class needs the group completion")
        gl = tuple(exponent if j == slot else 0 for j in range(self.rank))
        return {(gl, ()): self.field.one()}

    def lie_vector(self, lievec: dict) -> dict:
        """Embed a Lie element as a sum of degree-one generators."""
        out: dict = {}
        for b, c in lievec.items():
            if b in self._gl_slot:
                axpy(self.field, out, c, self.grouplike(self._gl_slot[b]))
            else:
                axpy(self.field, out, c, self.gen_vector(self.gen_index((), b)))
        return out

    def class_vector(self, class_id: str) -> dict:
        return self.lie_vector({self.lie.leaf(class_id): self.field.one()})

    # -- products ------------------------------------------------------
    def mono_mul(self, a, b):
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        gl = tuple(x + y for x, y in zip(a[0], b[0]))
        fa, fb = a[1], b[1]
        sign = 1
        merged = []
        i = j = 0
        odd_left_after = 0  # odd factors of a not yet emitted
        if self._signs:
            odd_left_after = sum(1 for g, e in fa if self._gen_odd[g])
        result = None
        while i < len(fa) or j < len(fb):
            if j >= len(fb) or (i < len(fa) and fa[i][0] < fb[j][0]):
                g, e = fa[i]
                merged.append((g, e))
                if self._signs and self._gen_odd[g]:
                    odd_left_after -= 1
                i += 1
            elif i >= len(fa) or fb[j][0] < fa[i][0]:
                g, e = fb[j]
                if self._signs and self._gen_odd[g] and odd_left_after % 2:
                    sign = -sign
                merged.append((g, e))
                j += 1
            else:
                g = fa[i][0]
                if self._signs and self._gen_odd[g]:
                    result = (0, None)
                    break
                merged.append((g, fa[i][1] + fb[j][1]))
                i += 1
                j += 1
        if result is None:
            result = (sign, (gl, tuple(merged)))
        self._mul_cache[key] = result
        return result

    def multiply(self, u: dict, v: dict) -> dict:
        f = self.field
        out: dict = {}
        for ma, ca in u.items():
            for mb, cb in v.items():
                sign, m = self.mono_mul(ma, mb)
                if not sign:
                    continue
                c = f.mul(ca, cb)
                if sign < 0:
                    c = f.neg(c)
                s = f.add(out.get(m, 0), c)
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return out

    # -- gradings ------------------------------------------------------
    def mono_degree(self, m) -> int:
        return sum(self._gen_deg[g] * e for g, e in m[1])

    def mono_component(self, m) -> tuple[int, ...]:
        comp = list(m[0])
        for g, e in m[1]:
            for j, c in enumerate(self.generators[g].component):
                comp[j] += e * c
        return tuple(comp)

    def mono_base_weight(self, m) -> int:
        return sum(self.generators[g].base_weight * e for g, e in m[1])

    def mono_weight(self, m) -> int:
        return sum(self.mono_component(m)) + self.mono_base_weight(m)

    def block_of(self, m, weighted: bool = True) -> BlockIndex:
        return BlockIndex(self.mono_degree(m), self.mono_component(m), self.mono_base_weight(m) if weighted else None)

    def mono_name(self, m) -> str:
        parts = []
        for g, e in m[1]:
            name = self.generators[g].name
            if " " in name:
                name = f"({name})"
            parts.append(name if e == 1 else f"{name}^{e}")
        for j, e in enumerate(m[0]):
            if e:
                cid = self.spec.component_class(self.spec.components[j])
                parts.append(cid if e == 1 else f"{cid}^{e}")
        return "·".join(parts) if parts else "1"

    # -- bases ---------------------------------------------------------
    def positive_monomials(self, degree: int) -> list:
        """(factors, component, base_weight) for every positive-degree product of the given degree."""
        if degree > self.max_degree:
            raise BoundError(f"degree {degree} exceeds the bound {self.max_degree}")
        hit = self._positive.get(degree)
        if hit is not None:
            return hit
        gens = [k for k, g in enumerate(self.generators) if 0 < g.degree <= degree]
        out = []

        def rec(pos: int, remaining: int, factors: list):
            if remaining == 0:
                out.append(tuple(factors))
                return
            for q in range(pos, len(gens)):
                k = gens[q]
                d = self._gen_deg[k]
                if d > remaining:
                    break
                top = 1 if (self._signs and self._gen_odd[k]) else remaining // d
                for e in range(1, top + 1):
                    factors.append((k, e))
                    rec(q + 1, remaining - e * d, factors)
                    factors.pop()

        if degree == 0:
            out.append(())
        else:
            rec(0, degree, [])
        res = []
        for factors in out:
            m = (self._zero_gl, factors)
            res.append((factors, self.mono_component(m), self.mono_base_weight(m)))
        self._positive[degree] = res
        return res

    def basis(self, block: BlockIndex) -> list:
        if block.degree < 0:
            return []
        out = []
        for factors, comp, bw in self.positive_monomials(block.degree):
            if block.weight is not None and bw != block.weight:
                continue
            gl = tuple(c - x for c, x in zip(block.component, comp)) if self.rank else ()
            if not self.localized and any(e < 0 for e in gl):
                continue
            out.append((gl, factors))
        return out

    def positive_weights(self, max_degree: int) -> set[int]:
        return {bw for d in range(max_degree + 1) for _, _, bw in self.positive_monomials(d)}


class TensorAlgebra:
    """H(C(R,X)) = T(H~(X)); words in the label classes, no group completion beyond connected X."""

    def __init__(self, spec: CoalgebraSpec, field: FieldSpec, max_degree: int, localized: bool = False):
        if localized and not spec.connected:
            raise UnsupportedError("n = 1 group completion of a non-connected label space is not supported")
        self.spec = spec
        self.n = 1
        self.field = field
        self.max_degree = max_degree
        self.localized = localized
        self.rank = len(spec.components)
        self._deg = [c.degree for c in spec.classes]
        self._comp = [spec.component_vector(c.id) for c in spec.classes]
        self._bw = [spec.base_weight(c.id) for c in spec.classes]
        self.act_cache: dict = {}

    def one(self) -> dict:
        return {(): self.field.one()}

    def class_vector(self, class_id: str) -> dict:
        return {(self.spec.index(class_id),): self.field.one()}

    def grouplike(self, slot: int, exponent: int = 1) -> dict:
        if exponent < 0:
            raise UnsupportedError("n = 1 group completion of a non-connected label space is not supported")
        cid = self.spec.component_class(self.spec.components[slot])
        return {(self.spec.index(cid),) * exponent: self.field.one()}

    def multiply(self, u: dict, v: dict) -> dict:
        f = self.field
        out: dict = {}
        for a, ca in u.items():
            for b, cb in v.items():
                axpy(f, out, f.mul(ca, cb), {a + b: f.one()})
        return out

    def mono_degree(self, w) -> int:
        return sum(self._deg[i] for i in w)

    def mono_component(self, w) -> tuple[int, ...]:
        comp = [0] * self.rank
        for i in w:
            for j, c in enumerate(self._comp[i]):
                comp[j] += c
        return tuple(comp)

    def mono_base_weight(self, w) -> int:
        return sum(self._bw[i] for i in w)

    def mono_weight(self, w) -> int:
        return len(w)

    def block_of(self, w, weighted: bool = True) -> BlockIndex:
        return BlockIndex(self.mono_degree(w), self.mono_component(w), self.mono_base_weight(w) if weighted else None)

    def mono_name(self, w) -> str:
        if not w:
            return "1"
        return "·".join(self.spec.classes[i].id for i in w)

    def basis(self, block: BlockIndex) -> list:
        if block.degree < 0 or block.degree > self.max_degree:
            if block.degree > self.max_degree:
                raise BoundError(f"degree {block.degree} exceeds the bound {self.max_degree}")
            return []
        if any(c < 0 for c in block.component):
            return []
        out = []
        L = len(self._deg)

        def rec(deg, comp, bw, word):
            if deg == 0 and not any(comp) and (bw is None or bw == 0):
                out.append(tuple(word))
            for i in range(L):
                d = self._deg[i]
                if d > deg:
                    continue
                c2 = tuple(a - b for a, b in zip(comp, self._comp[i]))
                if any(x < 0 for x in c2):
                    continue
                b2 = None if bw is None else bw - self._bw[i]
                if b2 is not None and b2 < 0:
                    continue
                if d == 0 and not any(self._comp[i]):
                    continue
                word.append(i)
                rec(deg - d, c2, b2, word)
                word.pop()

        rec(block.degree, tuple(block.component), block.weight, [])
        return sorted(out)

    def positive_weights(self, max_degree: int) -> set[int]:
        if not self.spec.has_base_classes():
            return {0}
        low = min(d for d, b in zip(self._deg, self._bw) if b)
        return set(range(max_degree // max(low, 1) + 1))


@lru_cache(maxsize=64)
def algebra(spec: CoalgebraSpec, n: int, characteristic: int, max_degree: int, localized: bool):
    """Shared algebra context; the caches inside are value caches."""
    field = FieldSpec(characteristic)
    if n == 1:
        return TensorAlgebra(spec, field, max_degree, localized)
    if n < 1:
        raise UnsupportedError("n must be positive")
    return FreeAlgebra(spec, n, field, max_degree, localized)


def group_complete(spec: CoalgebraSpec, n: int, characteristic: int, max_degree: int):
    """The algebra with component classes inverted, i.e. H(Omega^n Sigma^n X)."""
    if n == 1 and not spec.connected:
        raise UnsupportedError("n = 1 with a non-connected label space: pi_0 is a free group, not handled")
    return algebra(spec, n, characteristic, max_degree, True)


def monomial_basis(spec: CoalgebraSpec, n: int, field: FieldSpec, block: BlockIndex, localized: bool = False, max_degree: int | None = None) -> list:
    alg = (group_complete if localized else lambda s, n_, p, d: algebra(s, n_, p, d, False))(
        spec, n, field.characteristic, max_degree if max_degree is not None else block.degree
    )
    return alg.basis(block)


def multiply(alg, u: dict, v: dict) -> dict:
    return alg.multiply(u, v)
