from .presentation import (
    ParseError,
    Presentation,
    parse_matrices,
    parse_presentation,
    presentation_of,
    render,
    to_tensor,
)
from .report import emit_result, invariants, result_record

__all__ = [
    "ParseError",
    "Presentation",
    "emit_result",
    "invariants",
    "parse_matrices",
    "parse_presentation",
    "presentation_of",
    "render",
    "result_record",
    "to_tensor",
]
