"""Reproduction preset: worked examples with known answers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .assemble import compare, homology
from .browder import action_matrix
from .coefficients import rank
from .free_algebra import BlockIndex, algebra
from .space_input import cp, sphere, wedge


@dataclass
class CheckResult:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def _dim(table, degree: int, component=()) -> int:
    return table.dims().get((degree, tuple(component)), 0)


def _action_rank(spec, degree: int, twisted: bool) -> int:
    alg = algebra(spec, 2, 3, 9, True)
    return rank(action_matrix(alg, BlockIndex(degree, (), None), twisted).matrix)


def check_f3_degree9() -> list[CheckResult]:
    w = wedge(sphere(2), sphere(4), sphere(6))
    c = cp(3)
    return [
        CheckResult("F3 degree 9: dim H9 of maps, S2vS4vS6 labels, F3", 2, _dim(homology(w, 2, 3, "maps", 9), 9)),
        CheckResult("F3 degree 9: dim H9 of maps, CP3 labels, F3", 1, _dim(homology(c, 2, 3, "maps", 9), 9)),
        CheckResult("F3 degree 9: rank lambda_8", 0, _action_rank(w, 8, False)),
        CheckResult("F3 degree 9: rank lambda_9", 4, _action_rank(w, 9, False)),
        CheckResult("F3 degree 9: rank k_8", 0, _action_rank(c, 8, True)),
        CheckResult("F3 degree 9: rank k_9", 5, _action_rank(c, 9, True)),
    ]


def check_two_points(bound: int = 3) -> list[CheckResult]:
    s = wedge(sphere(0), sphere(0))
    sec = homology(s, 2, 0, "sections", 1, bound, with_basis=False)
    maps = homology(s, 2, 0, "maps", 1, bound, with_basis=False)
    rng = range(-bound, bound + 1)
    want_sec = {(i, j): 2 if (i, j) in {(1, 1), (0, 1), (1, 0)} else 1 for i in rng for j in rng}
    want_maps = {(i, j): 3 if (i, j) == (0, 0) else 1 for i in rng for j in rng}
    got_sec = {c: _dim(sec, 1, c) for c in want_sec}
    got_maps = {c: _dim(maps, 1, c) for c in want_maps}
    return [
        CheckResult("two points: H1 of sections, S0vS0 labels, Q", want_sec, got_sec),
        CheckResult("two points: H1 of maps, S0vS0 labels, Q", want_maps, got_maps),
    ]


def check_cp2_labels(max_degree: int = 8) -> list[CheckResult]:
    out = []
    for p in (0, 2, 3, 5):
        diff = compare(cp(2), 2, p, "conf_sphere", "maps", max_degree)
        out.append(CheckResult(f"CP2 labels: C(S2,CP2) vs maps, char {p}", [], diff))
    return out


def check_char2(max_degree: int = 8) -> list[CheckResult]:
    out = []
    for label, spec in (("s0", sphere(0)), ("s2", sphere(2)), ("cp2", cp(2)), ("cp3", cp(3))):
        diff = compare(spec, 2, 2, "sections", "maps", max_degree, max_weight=3)
        out.append(CheckResult(f"char 2: sections vs maps, {label}, F2", [], diff))
    return out


CHECKS: dict[str, Callable[[], list[CheckResult]]] = {
    "f3-degree9": check_f3_degree9,
    "two-points": check_two_points,
    "cp2-labels": check_cp2_labels,
    "char2": check_char2,
}


def run_all() -> list[CheckResult]:
    results = []
    for fn in CHECKS.values():
        results.extend(fn())
    return results
