"""Exact computations with skew and ribbon Schur Q-functions."""

from .combinat import compositions_of, format_composition, parse_composition
from .diagram import (
    SkewShape,
    compose,
    compose_transpose,
    concat,
    disjoint_union,
    near_concat,
    ribbon_shape,
    rotate180,
    shape_to_ribbon,
    transpose,
)
from .omega import OmegaElem, canonical_key, equal, mul, ribbon_q, skew_q, straighten

__all__ = [
    "OmegaElem",
    "SkewShape",
    "canonical_key",
    "compose",
    "compose_transpose",
    "compositions_of",
    "concat",
    "disjoint_union",
    "equal",
    "format_composition",
    "mul",
    "near_concat",
    "parse_composition",
    "ribbon_q",
    "ribbon_shape",
    "rotate180",
    "shape_to_ribbon",
    "skew_q",
    "straighten",
    "transpose",
]
