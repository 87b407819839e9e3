"""Homology of labelled configuration spaces on spheres and related mapping spaces."""

from .assemble import KINDS, HomologyTable, compare, homology
from .coefficients import FieldSpec
from .free_algebra import BlockIndex, UnsupportedError, algebra, group_complete
from .space_input import CoalgebraSpec, parse_label

__all__ = [
    "KINDS",
    "BlockIndex",
    "CoalgebraSpec",
    "FieldSpec",
    "HomologyTable",
    "UnsupportedError",
    "algebra",
    "compare",
    "group_complete",
    "homology",
    "parse_label",
]
