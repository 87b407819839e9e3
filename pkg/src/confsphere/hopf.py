"""Iterated coproducts of label classes and the conjugation on their image.

Only the coalgebra of X is consulted: the triple expansion comes from the
stored binary coproduct, and the conjugation is solved from
m(chi (x) id) Delta = unit * counit by recursion on degree.
"""

from __future__ import annotations

from collections import defaultdict

from .coefficients import axpy
from .free_algebra import UnsupportedError
from .space_input import UNIT, CoalgebraSpec

TripleTerm = tuple  # (int coefficient, x', x'', x''')


def iterated_coproduct(spec: CoalgebraSpec, cid: str) -> list[TripleTerm]:
    """(Delta (x) id) Delta(x) as sorted (coefficient, x', x'', x''') terms."""
    acc: dict = defaultdict(int)
    for c, a, b in spec.delta(cid):
        for c2, a1, a2 in spec.delta(a):
            acc[(a1, a2, b)] += c * c2
    return sorted((c, a, b, d) for (a, b, d), c in acc.items() if c)


def counit(spec: CoalgebraSpec, cid: str) -> int:
    """epsilon(x): 1 on the unit and on degree-0 classes, 0 otherwise."""
    return 1 if cid == UNIT or spec.degree(cid) == 0 else 0


class Antipode:
    """chi on label classes, valued in a (usually localized) algebra context."""

    def __init__(self, alg):
        self.alg = alg
        self.spec = alg.spec
        self._cache: dict[str, dict] = {}

    def _grouplike_inverse(self, cid: str) -> dict:
        spec = self.spec
        if cid == UNIT:
            return self.alg.one()
        slot = spec.components.index(spec.get(cid).component)
        if not getattr(self.alg, "localized", False):
            raise UnsupportedError(f"chi({cid}) needs the inverse of a component class; use the group completion")
        return self.alg.grouplike(slot, -1)

    def __call__(self, cid: str) -> dict:
        hit = self._cache.get(cid)
        if hit is not None:
            return hit
        spec, alg, f = self.spec, self.alg, self.alg.field
        if cid == UNIT or spec.degree(cid) == 0:
            out = self._grouplike_inverse(cid)
        else:
            # Delta x = x (x) u + sum of terms with a lower-degree left factor
            rest: dict = {}
            unit_right = None
            for c, a, b in spec.delta(cid):
                if a == cid:
                    if spec.degree(b) != 0 and b != UNIT:
                        raise ValueError(f"coproduct of {cid} has a self-term with positive-degree right factor")
                    unit_right = (c, b)
                    continue
                axpy(f, rest, f(c), alg.multiply(self(a), alg.class_vector(b) if b != UNIT else alg.one()))
            if unit_right is None or f(unit_right[0]) == 0:
                raise ValueError(f"coproduct of {cid} lacks the term {cid} (x) (component class)")
            c, b = unit_right
            scale = f.neg(f.inv(f(c)))
            out = {}
            axpy(f, out, scale, alg.multiply(rest, self._grouplike_inverse(b)))
        self._cache[cid] = out
        return out


def antipode(alg, cid: str) -> dict:
    """chi(cid) in the algebra ``alg``; cached on the algebra object."""
    cache = alg.act_cache.setdefault("antipode", None)
    if cache is None:
        cache = Antipode(alg)
        alg.act_cache["antipode"] = cache
    return cache(cid)


def counit_check(alg, cid: str, left: bool = True) -> dict:
    """m(chi (x) id)Delta(x) - eps(x) 1 (or the mirrored identity); zero when chi is right."""
    spec, f = alg.spec, alg.field
    out: dict = {}
    for c, a, b in spec.delta(cid):
        va = alg.class_vector(a) if a != UNIT else alg.one()
        vb = alg.class_vector(b) if b != UNIT else alg.one()
        term = alg.multiply(antipode(alg, a), vb) if left else alg.multiply(va, antipode(alg, b))
        axpy(f, out, f(c), term)
    if counit(spec, cid):
        axpy(f, out, f.neg(f.one()), alg.one())
    return out
