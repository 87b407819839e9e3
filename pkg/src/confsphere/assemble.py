"""Homology tables: kernel and cokernel of the (twisted) Browder action, blockwise.

For the compactified kinds the degree-d part of a (component, weight) block is

    H_d = coker(A_d) + ker(A_{d-1}),

where A_d is the action matrix landing in degree d; a kernel vector of
A_{d-1} indexed by the free column (x, v) is reported as ``S[x⊗v]``.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .browder import action_matrix
from .coefficients import FieldSpec, kernel_and_cokernel
from .free_algebra import BlockIndex, UnsupportedError, algebra
from .space_input import CoalgebraSpec

log = logging.getLogger(__name__)

KINDS = ("conf_rn", "omega", "conf_sphere", "sections", "maps", "snaith")
LOCALIZED = {"omega", "sections", "maps"}
ACTION = {"conf_sphere": False, "sections": False, "snaith": False, "maps": True}


@dataclass(frozen=True, order=True)
class HomologyRow:
    degree: int
    component: tuple[int, ...]
    weight: int | None
    dim: int
    basis: tuple[str, ...] = field(default=())
    kind: str = ""
    char: int = 0

    def label(self, show_weight: bool) -> str:
        parts = []
        if self.component:
            parts.append(",".join(str(c) for c in self.component))
        if show_weight and self.weight is not None:
            parts.append(f"w={self.weight}")
        return ";".join(parts) if parts else "*"


@dataclass
class HomologyTable:
    kind: str
    char: int
    spec_name: str
    n: int
    rows: list[HomologyRow]
    show_weight: bool = False
    ranks: dict = field(default_factory=dict)  # BlockIndex -> (rows, cols, rank)

    def dims(self, aggregate_weights: bool = True) -> dict:
        """{(degree, component[, weight]): dim}, nonzero entries only."""
        out: dict = {}
        for r in self.rows:
            key = (r.degree, r.component) if aggregate_weights else (r.degree, r.component, r.weight)
            out[key] = out.get(key, 0) + r.dim
        return {k: v for k, v in out.items() if v}

    def records(self) -> list[dict]:
        return [
            {
                "kind": self.kind,
                "char": self.char,
                "degree": r.degree,
                "component": r.label(self.show_weight),
                "dim": r.dim,
                "basis": list(r.basis),
            }
            for r in self.rows
        ]


def check_kind(spec: CoalgebraSpec, n: int, kind: str, weight: int | None = None) -> None:
    if kind not in KINDS:
        raise UnsupportedError(f"unknown space kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 1:
        raise UnsupportedError("n must be at least 1")
    if kind in LOCALIZED and n == 1 and not spec.connected:
        raise UnsupportedError(f"{kind} with n = 1 needs a connected label space")
    if kind == "snaith" and (weight is None or weight < 1):
        raise UnsupportedError("snaith pieces need a weight k >= 1")


def component_box(spec: CoalgebraSpec, kind: str, max_weight: int) -> list[tuple[int, ...]]:
    r = len(spec.components)
    if r == 0:
        return [()]
    if kind in LOCALIZED:
        rng = range(-max_weight, max_weight + 1)
        return list(itertools.product(rng, repeat=r))
    return [c for c in itertools.product(range(max_weight + 1), repeat=r) if sum(c) <= max_weight]


def _weights(alg, kind: str, component: tuple, max_degree: int, snaith_weight: int | None) -> list:
    if kind == "maps":
        return [None]
    # a suspended kernel class carries one more particle than its monomial
    ws = alg.positive_weights(max_degree) | {0}
    ws = sorted(ws | {w + 1 for w in ws}) if alg.spec.has_base_classes() else sorted(ws)
    if kind == "snaith":
        want = snaith_weight - sum(component)
        return [want] if want >= 0 else []
    return ws


def _block_rows(args) -> tuple[list[HomologyRow], dict]:
    spec, n, char, kind, max_degree, comp, weight, with_basis = args
    alg = algebra(spec, n, char, max_degree, kind in LOCALIZED)
    rows: list[HomologyRow] = []
    ranks: dict = {}
    if kind in ("conf_rn", "omega"):
        for d in range(max_degree + 1):
            basis = alg.basis(BlockIndex(d, comp, weight))
            names = tuple(alg.mono_name(m) for m in basis) if with_basis else ()
            rows.append(HomologyRow(d, comp, weight, len(basis), names, kind, char))
        return rows, ranks
    twisted = ACTION[kind]
    kernel_names: list[str] = []
    kernel_dim = 0
    for d in range(max_degree + 1):
        block = action_matrix(alg, BlockIndex(d, comp, weight), twisted)
        free, coker = kernel_and_cokernel(block.matrix)
        rk = block.matrix.cols - len(free)
        ranks[block.target] = (block.matrix.rows, block.matrix.cols, rk)
        names = ()
        if with_basis:
            names = tuple(alg.mono_name(block.targets[i]) for i in coker) + tuple(kernel_names)
        rows.append(HomologyRow(d, comp, weight, len(coker) + kernel_dim, names, kind, char))
        kernel_dim = len(free)
        if with_basis:
            kernel_names = [f"S[{block.sources[j][0]}⊗{alg.mono_name(block.sources[j][1])}]" for j in free]
    return rows, ranks


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CONFSPHERE_JOBS", "1")))
    except ValueError:
        return 1


def homology(
    spec: CoalgebraSpec,
    n: int,
    characteristic: int,
    kind: str,
    max_degree: int,
    max_weight: int = 4,
    components: list[tuple[int, ...]] | None = None,
    weight: int | None = None,
    jobs: int | None = None,
    with_basis: bool = True,
) -> HomologyTable:
    """Betti table of one space kind, computed block by block.

    ``weight`` is the particle count k for ``snaith``; for the other
    weight-graded kinds it restricts the base-component weight.
    """
    FieldSpec(characteristic)
    check_kind(spec, n, kind, weight)
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    box = components if components is not None else component_box(spec, kind, weight if kind == "snaith" else max_weight)
    alg = algebra(spec, n, characteristic, max_degree, kind in LOCALIZED)
    tasks = []
    for comp in box:
        comp = tuple(comp)
        if len(comp) != len(spec.components):
            raise ValueError(f"component {comp} should have {len(spec.components)} entries")
        for w in _weights(alg, kind, comp, max_degree, weight):
            if kind != "snaith" and weight is not None and w is not None and w != weight:
                continue
            tasks.append((spec, n, characteristic, kind, max_degree, comp, w, with_basis))
    jobs = _default_jobs() if jobs is None else max(1, jobs)
    results = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_rows, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_block_rows(t) for t in tasks]
    rows: list[HomologyRow] = []
    ranks: dict = {}
    for r, k in results:
        rows.extend(r)
        ranks.update(k)
    rows.sort(key=lambda r: (r.degree, r.component, -1 if r.weight is None else r.weight))
    show_weight = kind != "maps" and spec.has_base_classes()
    log.info("%s %s n=%d %s: %d blocks", kind, spec.name, n, FieldSpec(characteristic).name, len(tasks))
    return HomologyTable(kind, characteristic, spec.name, n, rows, show_weight, ranks)


@dataclass(frozen=True)
class Difference:
    degree: int
    component: tuple[int, ...]
    dim_a: int
    dim_b: int


def compare(
    spec: CoalgebraSpec,
    n: int,
    characteristic: int,
    kind_a: str,
    kind_b: str,
    max_degree: int,
    max_weight: int = 4,
    offset: tuple[int, ...] | None = None,
    spec_b: CoalgebraSpec | None = None,
    jobs: int | None = None,
) -> list[Difference]:
    """Per-(degree, component) dimension differences, weights summed; empty means agreement.

    A row of ``kind_a`` at component c is matched with ``kind_b`` at c + offset.
    """
    spec_b = spec if spec_b is None else spec_b
    ta = homology(spec, n, characteristic, kind_a, max_degree, max_weight, jobs=jobs, with_basis=False)
    tb = homology(spec_b, n, characteristic, kind_b, max_degree, max_weight, jobs=jobs, with_basis=False)
    da, db = ta.dims(), tb.dims()
    off = tuple(offset) if offset else (0,) * len(spec.components)
    shifted = {(d, tuple(a + o for a, o in zip(c, off)) if c else c): v for (d, c), v in da.items()}
    # only compare components both tables enumerated
    comps_a = {tuple(a + o for a, o in zip(r.component, off)) if r.component else r.component for r in ta.rows}
    comps_b = {r.component for r in tb.rows}
    common = comps_a & comps_b
    diffs = []
    for key in sorted(set(shifted) | set(db)):
        d, c = key
        if c not in common:
            continue
        a, b = shifted.get(key, 0), db.get(key, 0)
        if a != b:
            diffs.append(Difference(d, c, a, b))
    return diffs
