"""Exact classification of solvable Lie algebras of dimension at most three."""

from .catalog import ClassLabel, representative
from .classify import Classification, classify, iso_decide
from .liecore import IsoWitness, StructureTensor, validate, witness_check
from .scalars import FieldSpec

__version__ = "0.1.0"

__all__ = [
    "ClassLabel",
    "Classification",
    "FieldSpec",
    "IsoWitness",
    "StructureTensor",
    "classify",
    "iso_decide",
    "representative",
    "validate",
    "witness_check",
]
