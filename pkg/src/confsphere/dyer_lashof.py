"""Admissible Dyer-Lashof strings in lower-index notation.

An op string is a tuple of blocks ``(eps, i)`` read outermost first; a block
stands for beta^eps Q_i.  Indices satisfy 0 < i < n and are weakly
increasing from the outside in (smallest index outermost).  In degree q,
Q_i lands in degree 2q+i at p = 2 and pq+i(p-1) at odd p; a Bockstein
lowers the degree by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import FieldSpec
from .nlie import LieGenerator, tree_name

OpString = tuple  # tuple[tuple[int, int], ...]


def apply_degree(q: int, block: tuple[int, int], p: int) -> int:
    eps, i = block
    if p == 2:
        return 2 * q + i
    return p * q + i * (p - 1) - eps


def string_degree(ops: OpString, q: int, p: int) -> int:
    for block in reversed(ops):
        q = apply_degree(q, block, p)
    return q


def admissible_strings(q: int, p: int, n: int, max_degree: int, max_depth: int | None = None) -> list[tuple[OpString, int]]:
    """All admissible strings on a class of degree q, with their degrees, up to ``max_degree``."""
    out: list[tuple[OpString, int]] = [((), q)]
    if p == 0 or n < 2:
        return out
    # grow outward; the new outer index must not exceed the current outermost one
    frontier = [((), q, n - 1)]
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        nxt = []
        for ops, d, bound in frontier:
            for i in range(1, bound + 1):
                if p != 2 and (i - d) % 2:
                    continue
                for eps in ((0,) if p == 2 else (0, 1)):
                    nd = apply_degree(d, (eps, i), p)
                    if nd > max_degree:
                        continue
                    new = ((eps, i),) + ops
                    out.append((new, nd))
                    nxt.append((new, nd, i))
        frontier = nxt
    out.sort(key=lambda t: (t[1], len(t[0]), t[0]))
    return out


def is_admissible(ops: OpString, q: int, p: int, n: int) -> bool:
    """Check the admissibility rules symbol by symbol on the flattened string."""
    if not ops:
        return True
    if p == 0:
        return False
    symbols: list = []
    for eps, i in ops:
        if eps not in (0, 1) or (p == 2 and eps):
            return False
        if eps:
            symbols.append("b")
        symbols.append(i)
    idx = [s for s in symbols if s != "b"]
    if any(not 0 < i < n for i in idx):
        return False
    if any(a > b for a, b in zip(idx, idx[1:])):
        return False
    if p == 2:
        return True
    if symbols[-1] == "b" or (symbols[-1] - q) % 2:
        return False
    for a, b in zip(symbols, symbols[1:]):
        if a == "b" and b == "b":
            return False
    # adjacent Q's share parity; Q's separated by a single beta differ
    for k in range(len(symbols) - 1):
        a = symbols[k]
        if a == "b":
            continue
        if symbols[k + 1] != "b":
            if (a - symbols[k + 1]) % 2:
                return False
        elif k + 2 < len(symbols) and (a - symbols[k + 2]) % 2 == 0:
            return False
    return True


def ops_name(ops: OpString) -> str:
    return " ".join(("b" if eps else "") + f"Q{i}" for eps, i in ops)


@dataclass(frozen=True)
class DLGenerator:
    ops: OpString
    base: int
    degree: int
    weight: int
    component: tuple[int, ...]
    base_weight: int
    base_name: str

    @property
    def name(self) -> str:
        if not self.ops:
            return self.base_name
        return f"{ops_name(self.ops)} {self.base_name}"


def enumerate_admissible(
    base: LieGenerator, field: FieldSpec, n: int, max_degree: int, max_weight: int | None = None
) -> list[DLGenerator]:
    p = field.characteristic
    out = []
    for ops, deg in admissible_strings(base.degree, p, n, max_degree):
        mult = p ** len(ops) if ops else 1
        if max_weight is not None and base.weight * mult > max_weight:
            continue
        out.append(
            DLGenerator(
                ops,
                base.index,
                deg,
                base.weight * mult,
                tuple(c * mult for c in base.component),
                base.base_weight * mult,
                tree_name(base.tree),
            )
        )
    return out
