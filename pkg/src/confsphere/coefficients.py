"""Exact scalars over Q and F_p, and exact elimination for kernels and cokernels.

Vectors are sparse ``dict`` objects mapping a sortable key to a nonzero
scalar.  Rationals are :class:`fractions.Fraction`; residues mod p are plain
``int`` in ``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, NamedTuple, Sequence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class FieldSpec:
    """The coefficient field: Q when ``characteristic == 0``, else F_p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self) -> str:
        return f"FieldSpec({self.characteristic})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.characteristic))

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __call__(self, value):
        """Coerce an int or Fraction into a canonical scalar."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, p)) % p
        return int(value) % p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        p = self.characteristic
        if p == 0:
            return 1 / a
        return pow(a, -1, p)

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p


Vector = dict


def axpy(field: FieldSpec, acc: dict, coef, vec: dict) -> dict:
    """acc += coef * vec, in place, dropping zeros."""
    if coef == 0:
        return acc
    p = field.characteristic
    for k, c in vec.items():
        if p:
            s = (acc.get(k, 0) + coef * c) % p
        else:
            s = acc.get(k, 0) + coef * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def scale(field: FieldSpec, coef, vec: dict) -> dict:
    if coef == 0:
        return {}
    p = field.characteristic
    if p:
        out = {k: (coef * c) % p for k, c in vec.items()}
        return {k: c for k, c in out.items() if c}
    return {k: coef * c for k, c in vec.items()}


class Echelon:
    """Incremental echelon basis of a subspace, keyed by smallest nonzero index.

    ``insert`` returns True when the vector is independent of everything
    inserted before it.  With ``track=True`` every pivot remembers its
    expression in the inserted vectors, which gives kernel vectors for the
    dependent ones and coordinates for :meth:`express`.
    """

    def __init__(self, field: FieldSpec, track: bool = False):
        self.field = field
        self.track = track
        self.pivots: dict = {}
        self.count = 0
        self.dependencies: list[tuple[Hashable, dict]] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, combo: dict | None):
        f = self.field
        v = dict(vec)
        while v:
            lead = min(v)
            entry = self.pivots.get(lead)
            if entry is None:
                break
            pv, pc = entry
            c = v[lead]
            axpy(f, v, f.neg(c), pv)
            if combo is not None:
                axpy(f, combo, f.neg(c), pc)
        return v

    def insert(self, vec: dict, tag: Hashable = None) -> bool:
        if tag is None:
            tag = self.count
        self.count += 1
        combo = {tag: self.field.one()} if self.track else None
        v = self._reduce(vec, combo)
        if not v:
            if self.track:
                self.dependencies.append((tag, combo))
            return False
        lead = min(v)
        inv = self.field.inv(v[lead])
        self.pivots[lead] = (scale(self.field, inv, v), scale(self.field, inv, combo) if combo is not None else None)
        return True

    def express(self, vec: dict) -> dict | None:
        """Coordinates of ``vec`` in the inserted vectors, or None if outside the span."""
        if not self.track:
            raise RuntimeError("express needs track=True")
        f = self.field
        v = dict(vec)
        coords: dict = {}
        while v:
            lead = min(v)
            entry = self.pivots.get(lead)
            if entry is None:
                return None
            pv, pc = entry
            c = v[lead]
            axpy(f, v, f.neg(c), pv)
            axpy(f, coords, c, pc)
        return coords

    def leads(self) -> set:
        return set(self.pivots)


class F2Echelon:
    """Bitmask specialisation of :class:`Echelon` for F_2 with int keys."""

    def __init__(self, field: FieldSpec | None = None, track: bool = False):
        self.field = field or FieldSpec(2)
        self.track = track
        self.pivots: dict[int, tuple[int, int]] = {}
        self.count = 0
        self.dependencies: list[tuple[int, dict]] = []

    def __len__(self) -> int:
        return len(self.pivots)

    @staticmethod
    def _mask(vec) -> int:
        if isinstance(vec, int):
            return vec
        m = 0
        for k, c in vec.items():
            if c % 2:
                m |= 1 << k
        return m

    def insert(self, vec, tag: int | None = None) -> bool:
        if tag is None:
            tag = self.count
        self.count += 1
        v = self._mask(vec)
        combo = 1 << tag
        pivots = self.pivots
        while v:
            lead = (v & -v).bit_length() - 1
            entry = pivots.get(lead)
            if entry is None:
                break
            v ^= entry[0]
            combo ^= entry[1]
        if not v:
            if self.track:
                self.dependencies.append((tag, _bits_to_dict(combo)))
            return False
        pivots[(v & -v).bit_length() - 1] = (v, combo)
        return True

    def leads(self) -> set:
        return set(self.pivots)


def _bits_to_dict(m: int) -> dict:
    out = {}
    k = 0
    while m:
        if m & 1:
            out[k] = 1
        m >>= 1
        k += 1
    return out


def make_echelon(field: FieldSpec, track: bool = False):
    if field.characteristic == 2:
        return F2Echelon(field, track)
    return Echelon(field, track)


class ExactMatrix:
    """A rows x cols matrix over one field, stored as sparse columns."""

    def __init__(self, field: FieldSpec, rows: int, cols: int, columns: Sequence[dict] | None = None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError("column count mismatch")
        self.columns = [{i: field(c) for i, c in col.items() if field(c) != 0} for col in columns]
        for col in self.columns:
            for i in col:
                if not 0 <= i < rows:
                    raise ValueError(f"row index {i} out of range")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, c in enumerate(row):
                if field(c) != 0:
                    cols[j][i] = c
        return cls(field, nrows, ncols, cols)

    def entry(self, i: int, j: int):
        return self.columns[j].get(i, self.field.zero())

    def dense(self) -> list[list]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        cols = [{} for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                cols[i][j] = c
        return ExactMatrix(self.field, self.cols, self.rows, cols)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.columns == other.columns
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field.name}, {self.rows}x{self.cols})"


class Reduction(NamedTuple):
    rank: int
    kernel_basis: list[list]
    pivot_columns: list[int]
    image_leads: list[int]


def _eliminate(m: ExactMatrix, track: bool) -> tuple[list[int], list[tuple[int, dict]], set]:
    ech = make_echelon(m.field, track=track)
    pivots = []
    for j, col in enumerate(m.columns):
        if ech.insert(col, j):
            pivots.append(j)
    return pivots, ech.dependencies, ech.leads()


def reduce(m: ExactMatrix) -> Reduction:
    """Rank, null space basis and pivot columns of ``m``.

    Pivot columns are the columns independent of the columns to their left,
    i.e. the pivots of the row-reduced echelon form.  The kernel vector
    belonging to a free column j is the unique null vector with entry 1 at j
    supported on j and the pivot columns before it.
    """
    pivots, deps, leads = _eliminate(m, track=True)
    f = m.field
    kernel = []
    for j, combo in deps:
        vec = [f.zero()] * m.cols
        for k, c in combo.items():
            vec[k] = f(c)
        kernel.append(vec)
    return Reduction(len(pivots), kernel, pivots, sorted(leads))


def rank(m: ExactMatrix) -> int:
    pivots, _, _ = _eliminate(m, track=False)
    return len(pivots)


def cokernel_representatives(m: ExactMatrix) -> list[int]:
    """Row indices whose unit vectors span a complement of the image of ``m``.

    These are the non-pivot columns of the reduced transpose.
    """
    _, _, leads = _eliminate(m, track=False)
    return [i for i in range(m.rows) if i not in leads]


def kernel_and_cokernel(m: ExactMatrix) -> tuple[list[int], list[int]]:
    """Free column indices (one per kernel vector) and cokernel row indices."""
    pivots, _, leads = _eliminate(m, track=False)
    piv = set(pivots)
    free = [j for j in range(m.cols) if j not in piv]
    return free, [i for i in range(m.rows) if i not in leads]


def apply(m: ExactMatrix, vec: Iterable) -> list:
    f = m.field
    out = [f.zero()] * m.rows
    for j, c in enumerate(vec):
        if c == 0:
            continue
        for i, a in m.columns[j].items():
            out[i] = f.add(out[i], f.mul(a, c))
    return out
