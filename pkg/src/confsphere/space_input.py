"""The homology coalgebra of a label space X: data model, builtins, loading, validation.

A spec lists a basis of the reduced homology of X.  Degree-0 classes are the
path components other than the base one; they are grouplike.  The coproduct
is stored once with integer coefficients and reduced mod p where needed.
The unit (class of the base point) is spelled ``"1"``.
"""

from __future__ import annotations

import json
import os
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

UNIT = "1"


class SpecError(Exception):
    """Raised for malformed label-space input."""


class SpecParseError(SpecError):
    pass


class ValidationError(SpecError):
    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class LabelClass:
    id: str
    degree: int
    component: str | None = None


@dataclass(frozen=True)
class Violation:
    class_id: str
    message: str

    def __str__(self) -> str:
        return f"{self.class_id}: {self.message}"


Term = tuple  # (int coefficient, left id or UNIT, right id or UNIT)


@dataclass(frozen=True)
class CoalgebraSpec:
    name: str
    components: tuple[str, ...]
    classes: tuple[LabelClass, ...]
    coproduct: dict = field(compare=False, hash=False)

    def __post_init__(self):
        # normalise: sorted, merged, zero terms dropped
        norm = {}
        for cid, terms in self.coproduct.items():
            acc: dict = defaultdict(int)
            for c, left, right in terms:
                acc[(left, right)] += int(c)
            norm[cid] = tuple(sorted((c, l, r) for (l, r), c in acc.items() if c))
        object.__setattr__(self, "coproduct", norm)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoalgebraSpec)
            and self.components == other.components
            and self.classes == other.classes
            and self.coproduct == other.coproduct
        )

    def __hash__(self) -> int:
        return hash((self.components, self.classes))

    # -- lookups -------------------------------------------------------
    def ids(self) -> list[str]:
        return [c.id for c in self.classes]

    def get(self, cid: str) -> LabelClass:
        for c in self.classes:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def index(self, cid: str) -> int:
        for i, c in enumerate(self.classes):
            if c.id == cid:
                return i
        raise KeyError(cid)

    def degree(self, cid: str) -> int:
        return 0 if cid == UNIT else self.get(cid).degree

    @property
    def connected(self) -> bool:
        return not self.components

    def component_class(self, comp: str | None) -> str:
        """The degree-0 class of a component (the unit for the base component)."""
        if comp is None:
            return UNIT
        for c in self.classes:
            if c.degree == 0 and c.component == comp:
                return c.id
        raise KeyError(comp)

    def component_vector(self, cid: str) -> tuple[int, ...]:
        vec = [0] * len(self.components)
        if cid != UNIT:
            comp = self.get(cid).component
            if comp is not None:
                vec[self.components.index(comp)] = 1
        return tuple(vec)

    def base_weight(self, cid: str) -> int:
        if cid == UNIT:
            return 0
        return 1 if self.get(cid).component is None else 0

    def has_base_classes(self) -> bool:
        return any(c.component is None for c in self.classes)

    def delta(self, cid: str) -> tuple:
        if cid == UNIT:
            return ((1, UNIT, UNIT),)
        return self.coproduct.get(cid, ())


# ---------------------------------------------------------------------------
# builtins


def sphere(k: int) -> CoalgebraSpec:
    if k < 0:
        raise SpecError("sphere dimension must be >= 0")
    if k == 0:
        return CoalgebraSpec("s0", ("i",), (LabelClass("i", 0, "i"),), {"i": [(1, "i", "i")]})
    return CoalgebraSpec(f"s{k}", (), (LabelClass("i", k, None),), {"i": [(1, "i", UNIT), (1, UNIT, "i")]})


def two_points() -> CoalgebraSpec:
    return sphere(0)


def cp(m: int) -> CoalgebraSpec:
    if m < 1:
        raise SpecError("cp needs m >= 1")
    name = lambda i: UNIT if i == 0 else f"e{i}"
    classes = tuple(LabelClass(f"e{i}", 2 * i, None) for i in range(1, m + 1))
    cop = {f"e{k}": [(1, name(i), name(k - i)) for i in range(k + 1)] for k in range(1, m + 1)}
    return CoalgebraSpec(f"cp{m}", (), classes, cop)


def wedge(*specs: CoalgebraSpec) -> CoalgebraSpec:
    if not specs:
        raise SpecError("empty wedge")
    all_ids = [c.id for s in specs for c in s.classes] + [c for s in specs for c in s.components]
    rename = len(set(all_ids)) != len(all_ids)
    classes, comps, cop = [], [], {}
    for j, s in enumerate(specs, start=1):
        r = (lambda x, j=j: x if x == UNIT else f"{x}{j}") if rename else (lambda x: x)
        comps.extend(r(c) for c in s.components)
        for c in s.classes:
            classes.append(LabelClass(r(c.id), c.degree, None if c.component is None else r(c.component)))
            cop[r(c.id)] = [(k, r(a), r(b)) for k, a, b in s.delta(c.id)]
    name = "wedge:" + ",".join(s.name for s in specs)
    return CoalgebraSpec(name, tuple(comps), tuple(classes), cop)


def suspension(spec: CoalgebraSpec) -> CoalgebraSpec:
    if any(c.degree == 0 for c in spec.classes):
        raise SpecError("suspension of a label space with several components is not supported")
    classes = tuple(LabelClass(f"s{c.id}", c.degree + 1, None) for c in spec.classes)
    cop = {c.id: [(1, c.id, UNIT), (1, UNIT, c.id)] for c in classes}
    return CoalgebraSpec(f"susp:{spec.name}", (), classes, cop)


_SIMPLE = re.compile(r"^(s|cp)(\d+)$")


def parse_label(text: str) -> CoalgebraSpec:
    """Builtin grammar ``s<k>``, ``cp<m>``, ``wedge:a,b,...``, ``susp:<spec>``, or a JSON path."""
    text = text.strip()
    if text.startswith("susp:"):
        return suspension(parse_label(text[5:]))
    if text.startswith("wedge:"):
        parts = [p for p in text[6:].split(",") if p]
        return wedge(*(parse_label(p) for p in parts))
    if text == "two_points":
        return two_points()
    m = _SIMPLE.match(text)
    if m:
        kind, num = m.group(1), int(m.group(2))
        return sphere(num) if kind == "s" else cp(num)
    if os.path.exists(text):
        return load(text)
    raise SpecError(f"unknown label space {text!r}")


# ---------------------------------------------------------------------------
# file format

_TOP_KEYS = {"name", "components", "classes", "coproduct"}
_CLASS_KEYS = {"id", "degree", "component"}


def from_dict(data: dict, source: str = "<data>") -> CoalgebraSpec:
    if not isinstance(data, dict):
        raise SpecParseError(f"{source}: top level must be an object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SpecParseError(f"{source}: unknown field(s) {sorted(unknown)}")
    missing = {"classes", "coproduct"} - set(data)
    if missing:
        raise SpecParseError(f"{source}: missing field(s) {sorted(missing)}")
    comps = data.get("components", [])
    if not isinstance(comps, list) or not all(isinstance(c, str) for c in comps):
        raise SpecParseError(f"{source}: components must be a list of strings")
    classes = []
    for k, entry in enumerate(data["classes"]):
        if not isinstance(entry, dict):
            raise SpecParseError(f"{source}: classes[{k}] must be an object")
        unknown = set(entry) - _CLASS_KEYS
        if unknown:
            raise SpecParseError(f"{source}: classes[{k}] unknown field(s) {sorted(unknown)}")
        try:
            cid, deg = entry["id"], entry["degree"]
        except KeyError as exc:
            raise SpecParseError(f"{source}: classes[{k}] missing {exc.args[0]!r}") from None
        if not isinstance(cid, str) or not isinstance(deg, int) or isinstance(deg, bool):
            raise SpecParseError(f"{source}: classes[{k}] has a bad id or degree")
        comp = entry.get("component")
        if comp is not None and not isinstance(comp, str):
            raise SpecParseError(f"{source}: classes[{k}] component must be a string or null")
        classes.append(LabelClass(cid, deg, comp))
    cop_raw = data["coproduct"]
    if not isinstance(cop_raw, dict):
        raise SpecParseError(f"{source}: coproduct must be an object")
    cop = {}
    for cid, terms in cop_raw.items():
        parsed = []
        for t in terms:
            if (
                not isinstance(t, list)
                or len(t) != 3
                or not isinstance(t[0], int)
                or not all(isinstance(x, str) for x in t[1:])
            ):
                raise SpecParseError(f"{source}: coproduct term {t!r} of {cid!r} must be [int, str, str]")
            parsed.append((t[0], t[1], t[2]))
        cop[cid] = parsed
    return CoalgebraSpec(data.get("name", os.path.basename(source)), tuple(comps), tuple(classes), cop)


def load(path: str) -> CoalgebraSpec:
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return from_dict(data, path)


def to_dict(spec: CoalgebraSpec) -> dict:
    return {
        "name": spec.name,
        "components": list(spec.components),
        "classes": [{"id": c.id, "degree": c.degree, "component": c.component} for c in spec.classes],
        "coproduct": {cid: [list(t) for t in terms] for cid, terms in spec.coproduct.items()},
    }


def dump(spec: CoalgebraSpec, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_dict(spec), fh, indent=2)


# ---------------------------------------------------------------------------
# validation


def _triple(spec: CoalgebraSpec, cid: str, left_first: bool) -> dict:
    out: dict = defaultdict(int)
    for c, a, b in spec.delta(cid):
        if left_first:
            for c2, a1, a2 in spec.delta(a):
                out[(a1, a2, b)] += c * c2
        else:
            for c2, b1, b2 in spec.delta(b):
                out[(a, b1, b2)] += c * c2
    return {k: v for k, v in out.items() if v}


def validate(spec: CoalgebraSpec) -> list[Violation]:
    """Check every structural invariant and collect (not raise) the violations."""
    bad: list[Violation] = []
    ids = [c.id for c in spec.classes]
    known = set(ids)
    if len(known) != len(ids):
        bad.append(Violation(spec.name, "class ids are not unique"))
    if len(set(spec.components)) != len(spec.components):
        bad.append(Violation(spec.name, "component names are not unique"))
    if UNIT in known:
        bad.append(Violation(UNIT, "the unit symbol cannot be a class id"))
    comps = set(spec.components)
    zero_by_comp: dict = defaultdict(list)
    for c in spec.classes:
        if c.degree < 0:
            bad.append(Violation(c.id, "negative degree"))
        if c.component is not None and c.component not in comps:
            bad.append(Violation(c.id, f"unknown component {c.component!r}"))
        if c.degree == 0:
            if c.component is None:
                bad.append(Violation(c.id, "degree-0 class must name its own component"))
            else:
                zero_by_comp[c.component].append(c.id)
    for comp in spec.components:
        if len(zero_by_comp.get(comp, [])) != 1:
            bad.append(Violation(comp, "each component needs exactly one degree-0 class"))
    if bad:
        return bad

    deg = {c.id: c.degree for c in spec.classes}
    deg[UNIT] = 0
    for c in spec.classes:
        terms = spec.coproduct.get(c.id)
        if terms is None:
            bad.append(Violation(c.id, "missing coproduct"))
            continue
        unknown = [x for _, a, b in terms for x in (a, b) if x not in deg]
        if unknown:
            bad.append(Violation(c.id, f"coproduct mentions unknown class(es) {sorted(set(unknown))}"))
            continue
        if c.degree == 0:
            if terms != ((1, c.id, c.id),):
                bad.append(Violation(c.id, "degree-0 class must be grouplike"))
            continue
        for k, a, b in terms:
            if deg[a] + deg[b] != c.degree:
                bad.append(Violation(c.id, f"coproduct term ({k},{a},{b}) is not degree-additive"))
        u = spec.component_class(c.component)
        for k, a, b in terms:
            for x in (a, b):
                if deg[x] == 0 and x != u:
                    bad.append(Violation(c.id, f"coproduct factor {x} lies in another component"))
                elif deg[x] > 0 and spec.get(x).component != c.component:
                    bad.append(Violation(c.id, f"coproduct factor {x} lies in another component"))
        left_units = [(k, b) for k, a, b in terms if deg[a] == 0]
        right_units = [(k, a) for k, a, b in terms if deg[b] == 0]
        if left_units != [(1, c.id)]:
            bad.append(Violation(c.id, f"counit violated: terms with a unit on the left are {left_units}"))
        if right_units != [(1, c.id)]:
            bad.append(Violation(c.id, f"counit violated: terms with a unit on the right are {right_units}"))
    if bad:
        return bad
    for c in spec.classes:
        lhs = _triple(spec, c.id, True)
        rhs = _triple(spec, c.id, False)
        if lhs != rhs:
            diff = sorted(set(lhs.items()) ^ set(rhs.items()))
            bad.append(Violation(c.id, f"coassociativity violated at {diff[:4]}"))
    return bad


def check(spec: CoalgebraSpec) -> CoalgebraSpec:
    problems = validate(spec)
    if problems:
        raise ValidationError(problems)
    return spec


def iter_positive(spec: CoalgebraSpec) -> Iterable[LabelClass]:
    return (c for c in spec.classes if c.degree > 0)
