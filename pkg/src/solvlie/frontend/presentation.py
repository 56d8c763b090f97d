"""The ``.lie`` presentation format.

A file gives the field, the dimension and the nonzero brackets::

    field F 5
    dim 3
    [b0,b1] = b2
    [b0,b2] = 2*b1 + b2     # comments start with '#'

Omitted pairs are zero brackets; [bj,bi] follows by antisymmetry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..liecore import InvalidTensorError, StructureTensor
from ..scalars import FieldSpec, ScalarError, format_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Presentation:
    field: FieldSpec
    dim: int
    relations: tuple  # ((i, j, rhs_vector), ...) with i < j

    def brackets(self) -> dict:
        return {(i, j): rhs for i, j, rhs in self.relations}


_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\[\],=+\-*/]))")
_SYM = re.compile(r"b([0-9]+)$")


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", lineno, col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _Line:
    def __init__(self, tokens, lineno, length):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = length + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def col(self):
        tok = self.peek()
        return tok[2] if tok else self.end_col

    def error(self, message):
        return ParseError(message, self.lineno, self.col())

    def take(self, kind=None, value=None, what=None):
        tok = self.peek()
        if tok is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            found = "end of line" if tok is None else repr(tok[1])
            raise self.error(f"expected {what or value or kind}, found {found}")
        self.i += 1
        return tok

    def at(self, value):
        tok = self.peek()
        return tok is not None and tok[1] == value

    def done(self):
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()[1]!r}")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def _parse_field(ln: _Line) -> FieldSpec:
    ln.take("word", "field")
    tok = ln.take("word", what="Q or F <p>")
    if tok[1] == "Q":
        spec = FieldSpec.rationals()
    elif tok[1] == "F" or re.fullmatch(r"F[0-9]+", tok[1]):
        digits = tok[1][1:] or ln.take("num", what="prime modulus")[1]
        try:
            spec = FieldSpec.prime(int(digits))
        except ScalarError as e:
            raise ParseError(str(e), ln.lineno, tok[2]) from None
    else:
        raise ParseError(f"unknown field {tok[1]!r}", ln.lineno, tok[2])
    ln.done()
    return spec


def _parse_dim(ln: _Line) -> int:
    ln.take("word", "dim")
    tok = ln.take("num", what="positive dimension")
    n = int(tok[1])
    if n < 1:
        raise ParseError("dimension must be positive", ln.lineno, tok[2])
    ln.done()
    return n


def _parse_sym(ln: _Line, dim: int) -> int:
    tok = ln.take("word", what="basis symbol b<i>")
    m = _SYM.match(tok[1])
    if not m:
        raise ParseError(f"unknown basis symbol {tok[1]!r}", ln.lineno, tok[2])
    idx = int(m.group(1))
    if idx >= dim:
        raise ParseError(f"index {idx} out of range for dimension {dim}", ln.lineno, tok[2])
    return idx


def _parse_coefficient(ln: _Line, field: FieldSpec):
    """Optional ``scalar *`` prefix of a term; returns the coefficient."""
    sign = 1
    if ln.at("-"):
        ln.take()
        sign = -1
    if ln.peek() is None or ln.peek()[0] != "num":
        return field(sign)
    tok = ln.take("num")
    num = int(tok[1])
    den = 1
    if ln.at("/"):
        ln.take()
        dtok = ln.take("num", what="denominator")
        den = int(dtok[1])
        if den == 0:
            raise ParseError("zero denominator", ln.lineno, dtok[2])
        if not field.is_rational:
            raise ParseError(f"fractions are not allowed over {field}", ln.lineno, tok[2])
    ln.take(value="*")
    return field(Fraction(sign * num, den))


def _parse_lincomb(ln: _Line, field: FieldSpec, dim: int) -> tuple:
    coeffs = [field.zero] * dim
    tok = ln.peek()
    if tok is not None and tok[1] == "0" and ln.i + 1 == len(ln.tokens):
        ln.take()
        return tuple(coeffs)
    sign = 1
    while True:
        coef = _parse_coefficient(ln, field)
        idx = _parse_sym(ln, dim)
        coeffs[idx] = coeffs[idx] + sign * coef
        if ln.peek() is None:
            return tuple(coeffs)
        op = ln.take("op", what="'+' or '-'")
        if op[1] not in "+-":
            raise ParseError(f"expected '+' or '-', found {op[1]!r}", ln.lineno, op[2])
        sign = 1 if op[1] == "+" else -1


def parse_presentation(text: str) -> Presentation:
    field = None
    dim = None
    relations = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        ln = _Line(_tokenize(body, lineno), lineno, len(body.rstrip()))
        if field is None:
            field = _parse_field(ln)
            continue
        if dim is None:
            dim = _parse_dim(ln)
            continue
        ln.take(value="[")
        start_col = ln.tokens[0][2]
        i = _parse_sym(ln, dim)
        ln.take(value=",")
        j = _parse_sym(ln, dim)
        ln.take(value="]")
        ln.take(value="=")
        if i >= j:
            raise ParseError(f"relation [b{i},b{j}] must have i < j", lineno, start_col)
        if (i, j) in seen:
            raise ParseError(f"duplicate relation [b{i},b{j}] (first on line {seen[(i, j)]})", lineno, start_col)
        seen[(i, j)] = lineno
        rhs = _parse_lincomb(ln, field, dim)
        ln.done()
        relations.append((i, j, rhs))
    n_lines = len(text.splitlines()) + 1
    if field is None:
        raise ParseError("missing 'field' line", n_lines, 1)
    if dim is None:
        raise ParseError("missing 'dim' line", n_lines, 1)
    return Presentation(field, dim, tuple(relations))


def render_lincomb(v) -> str:
    terms = [(k, x) for k, x in enumerate(v) if x]
    if not terms:
        return "0"
    out = []
    for pos, (k, x) in enumerate(terms):
        s = format_scalar(x)
        neg = s.startswith("-")
        if pos == 0:
            out.append(f"b{k}" if s == "1" else f"{s}*b{k}")
            continue
        mag = s[1:] if neg else s
        term = f"b{k}" if mag == "1" else f"{mag}*b{k}"
        out.append(("- " if neg else "+ ") + term)
    return " ".join(out)


def render(p: Presentation) -> str:
    lines = [f"field {p.field.tag()}", f"dim {p.dim}"]
    lines += [f"[b{i},b{j}] = {render_lincomb(rhs)}" for i, j, rhs in p.relations]
    return "\n".join(lines) + "\n"


def presentation_of(t: StructureTensor) -> Presentation:
    rels = tuple((i, j, v) for (i, j), v in t.nonzero_brackets().items())
    return Presentation(t.field, t.dim, rels)


def to_tensor(p: Presentation) -> StructureTensor:
    """Antisymmetric completion; raises InvalidTensorError naming the failing triple."""
    t = StructureTensor.from_brackets(p.field, p.dim, p.brackets())
    v = t.validation
    if not v.ok:
        raise InvalidTensorError(v.violation.describe())
    return t


def parse_matrices(text: str, field: FieldSpec) -> list[tuple]:
    """Blank-line separated blocks of whitespace-separated scalar rows."""
    blocks, current = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).strip()
        if not body:
            if current:
                blocks.append(current)
                current = []
            continue
        row = []
        for m in re.finditer(r"\S+", body):
            try:
                row.append(field(m.group()))
            except ScalarError as e:
                raise ParseError(str(e), lineno, m.start() + 1) from None
        if current and len(row) != len(current[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(current[0])}", lineno, 1)
        current.append(tuple(row))
    if current:
        blocks.append(current)
    return [tuple(b) for b in blocks]
