"""Free graded Lie algebra on the label classes, with bracket of degree n-1.

Elements are realised inside the tensor algebra on the label classes, where
each class x sits in shifted degree |x|+n-1 and the bracket is the graded
commutator.  That embedding is faithful for the Lie algebra with the axioms
used here ([u,u]=0 for even shifted degree, [u,[u,u]]=0, and [u,u]=0 for
every u in characteristic 2), so spanning sets of bracket trees can be
row-reduced against their images to get a basis and normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .coefficients import Echelon, FieldSpec, axpy
from .space_input import CoalgebraSpec

BracketTree = Union[str, tuple]


class BoundError(Exception):
    """A computation needed classes beyond the enumerated degree/weight bounds."""


def tree_name(tree: BracketTree) -> str:
    if isinstance(tree, str):
        return tree
    return f"[{tree_name(tree[0])},{tree_name(tree[1])}]"


def tree_leaves(tree: BracketTree) -> list[str]:
    if isinstance(tree, str):
        return [tree]
    return tree_leaves(tree[0]) + tree_leaves(tree[1])


@dataclass(frozen=True)
class LieGenerator:
    index: int
    tree: BracketTree
    degree: int
    weight: int
    content: tuple[int, ...]
    component: tuple[int, ...]
    base_weight: int

    @property
    def name(self) -> str:
        return tree_name(self.tree)

    @property
    def is_leaf(self) -> bool:
        return isinstance(self.tree, str)


class FreeLie:
    """Basis and normal forms of the free Lie algebra up to ``max_degree``."""

    def __init__(self, spec: CoalgebraSpec, n: int, field: FieldSpec, max_degree: int, max_weight: int | None = None):
        if n < 2:
            raise ValueError("the bracket algebra needs n >= 2")
        self.spec = spec
        self.n = n
        self.field = field
        self.max_degree = max_degree
        self.max_weight = max_weight
        self.leaf_ids = spec.ids()
        self.leaf_degree = [c.degree for c in spec.classes]
        self._shift = [(d + n - 1) % 2 for d in self.leaf_degree]
        self.basis: list[LieGenerator] = []
        self._image: list[dict] = []
        self._by_content: dict[tuple, list[int]] = {}
        self._solver: dict[tuple, Echelon] = {}
        self._bracket_cache: dict[tuple[int, int], dict] = {}
        self._leaf_index: dict[str, int] = {}
        self._enumerate()

    # -- gradings ------------------------------------------------------
    def content_degree(self, content: tuple[int, ...]) -> int:
        w = sum(content)
        return sum(c * d for c, d in zip(content, self.leaf_degree)) + (w - 1) * (self.n - 1)

    def _in_bounds(self, content) -> bool:
        if self.content_degree(content) > self.max_degree:
            return False
        return self.max_weight is None or sum(content) <= self.max_weight

    def shifted_parity(self, idx: int) -> int:
        return (self.basis[idx].degree + self.n - 1) % 2

    # -- enumeration ---------------------------------------------------
    def _add_basis(self, tree, content, image) -> int:
        spec = self.spec
        comp = [0] * len(spec.components)
        bw = 0
        for leaf, k in zip(self.leaf_ids, content):
            if k:
                for j, c in enumerate(spec.component_vector(leaf)):
                    comp[j] += k * c
                bw += k * spec.base_weight(leaf)
        idx = len(self.basis)
        gen = LieGenerator(idx, tree, self.content_degree(content), sum(content), content, tuple(comp), bw)
        self.basis.append(gen)
        self._image.append(image)
        self._by_content.setdefault(content, []).append(idx)
        return idx

    def _enumerate(self) -> None:
        L = len(self.leaf_ids)
        layer = []
        for i in range(L):
            content = tuple(1 if j == i else 0 for j in range(L))
            if not self._in_bounds(content):
                continue
            solver = Echelon(self.field, track=True)
            idx = self._add_basis(self.leaf_ids[i], content, {(i,): self.field.one()})
            solver.insert({(i,): self.field.one()}, idx)
            self._solver[content] = solver
            self._leaf_index[self.leaf_ids[i]] = idx
            layer.append(content)
        while layer:
            nxt = set()
            for content in layer:
                for g in range(L):
                    c2 = tuple(k + (1 if j == g else 0) for j, k in enumerate(content))
                    if self._in_bounds(c2):
                        nxt.add(c2)
            layer = sorted(nxt, reverse=True)
            for content in layer:
                self._build_content(content)

    def _build_content(self, content: tuple[int, ...]) -> None:
        solver = Echelon(self.field, track=True)
        self._solver[content] = solver
        for g in range(len(content)):
            if not content[g]:
                continue
            rest = tuple(k - (1 if j == g else 0) for j, k in enumerate(content))
            for b in self._by_content.get(rest, []):
                leaf = self._leaf_index[self.leaf_ids[g]]
                image = self._commutator(leaf, b)
                if not image:
                    continue
                probe = solver.express(image)
                if probe is not None:
                    continue
                idx = self._add_basis((self.leaf_ids[g], self.basis[b].tree), content, image)
                solver.insert(image, idx)

    # -- tensor algebra images -----------------------------------------
    def _commutator(self, i: int, j: int) -> dict:
        f = self.field
        u, v = self._image[i], self._image[j]
        pu, pv = self.shifted_parity(i), self.shifted_parity(j)
        sign = f(-1 if (pu * pv) % 2 else 1)
        out: dict = {}
        for wu, cu in u.items():
            for wv, cv in v.items():
                c = f.mul(cu, cv)
                axpy(f, out, c, {wu + wv: f.one()})
                axpy(f, out, f.neg(f.mul(sign, c)), {wv + wu: f.one()})
        return out

    def tree_image(self, tree: BracketTree) -> tuple[dict, int]:
        """Tensor-algebra image and shifted parity of a bracket tree."""
        f = self.field
        if isinstance(tree, str):
            i = self.leaf_ids.index(tree)
            return {(i,): f.one()}, self._shift[i]
        u, pu = self.tree_image(tree[0])
        v, pv = self.tree_image(tree[1])
        sign = f(-1 if (pu * pv) % 2 else 1)
        out: dict = {}
        for wu, cu in u.items():
            for wv, cv in v.items():
                c = f.mul(cu, cv)
                axpy(f, out, c, {wu + wv: f.one()})
                axpy(f, out, f.neg(f.mul(sign, c)), {wv + wu: f.one()})
        return out, (pu + pv) % 2

    # -- public operations ---------------------------------------------
    def leaf(self, class_id: str) -> int:
        try:
            return self._leaf_index[class_id]
        except KeyError:
            raise BoundError(f"label class {class_id} is outside the degree bound") from None

    def content_of_tree(self, tree: BracketTree) -> tuple[int, ...]:
        content = [0] * len(self.leaf_ids)
        for leaf in tree_leaves(tree):
            content[self.leaf_ids.index(leaf)] += 1
        return tuple(content)

    def express_image(self, image: dict, content: tuple[int, ...]) -> dict:
        if not image:
            return {}
        solver = self._solver.get(content)
        if solver is None:
            raise BoundError(
                f"bracket of content {content} (degree {self.content_degree(content)}) exceeds the bound {self.max_degree}"
            )
        coords = solver.express(image)
        if coords is None:  # pragma: no cover - would mean the embedding failed
            raise ArithmeticError(f"element of content {content} is not in the Lie span")
        return coords

    def normal_form(self, expr: dict) -> dict:
        """Expand a linear combination {tree: coefficient} in the basis."""
        f = self.field
        out: dict = {}
        for tree, coef in expr.items():
            image, _ = self.tree_image(tree)
            axpy(f, out, f(coef), self.express_image(image, self.content_of_tree(tree)))
        return out

    def bracket(self, i: int, j: int) -> dict:
        key = (i, j)
        hit = self._bracket_cache.get(key)
        if hit is None:
            ci, cj = self.basis[i].content, self.basis[j].content
            content = tuple(a + b for a, b in zip(ci, cj))
            hit = self.express_image(self._commutator(i, j), content)
            self._bracket_cache[key] = hit
        return hit

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        f = self.field
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                axpy(f, out, f.mul(a, b), self.bracket(i, j))
        return out


def enumerate_lie_basis(
    spec: CoalgebraSpec, n: int, field: FieldSpec, max_degree: int, max_weight: int | None = None
) -> list[LieGenerator]:
    return list(FreeLie(spec, n, field, max_degree, max_weight).basis)
