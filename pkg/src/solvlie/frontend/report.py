"""JSON and tab-separated result output."""

from __future__ import annotations

import json

from ..catalog import almost_abelian_check, InconclusiveSearch
from ..classify import Classification
from ..liecore import StructureTensor, center, commutator, derived_dims, is_solvable
from ..scalars import format_scalar


def _fmt(x):
    return None if x is None else format_scalar(x)


def _matrix(m):
    return [[format_scalar(x) for x in row] for row in m]


def invariants(t: StructureTensor) -> dict:
    out = {
        "field": str(t.field),
        "dim": t.dim,
        "dim_commutator": commutator(t).dim,
        "dim_center": center(t).dim,
        "derived_series": derived_dims(t),
        "solvable": is_solvable(t),
    }
    try:
        ideal = almost_abelian_check(t)
        out["almost_abelian_ideal"] = None if ideal is None else _matrix(ideal.basis)
    except InconclusiveSearch:
        out["almost_abelian_ideal"] = "inconclusive"
    return out


def result_record(result: Classification, t: StructureTensor) -> dict:
    label = result.label
    return {
        "class": "NotSolvable" if label is None else label.kind,
        "dim": t.dim,
        "param": None if label is None else _fmt(label.alpha),
        "beta": None if label is None else _fmt(label.beta),
        "canonical_param": None if label is None else _fmt(label.canonical_param),
        "dim_commutator": commutator(t).dim,
        "dim_center": center(t).dim,
        "derived_series": derived_dims(t),
        "solvable": result.solvable,
        "witness": None if result.witness is None else _matrix(result.witness.matrix),
        "field": str(t.field),
    }


def emit_result(result: Classification, t: StructureTensor) -> str:
    """Stable JSON for a classification; the witness maps ``t`` onto the representative."""
    return json.dumps(result_record(result, t)) + "\n"


def witness_json(w) -> str:
    return json.dumps({"isomorphic": w is not None, "witness": None if w is None else _matrix(w.matrix)}) + "\n"
