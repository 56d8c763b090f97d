"""Lie algebras given by structure constants.

A :class:`StructureTensor` stores ``c[i][j]``, the coordinate vector of
``[e_i, e_j]``.  The helpers here compute the usual ideals (commutator,
derived series, center), adjoint maps, subalgebra and quotient tensors, and
check isomorphism witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

from . import exactlin as la
from .exactlin import LinAlgError, Matrix, Subspace, Vector
from .scalars import FieldSpec


class LieError(ValueError):
    """Base class for errors raised on structurally bad input."""


class InvalidTensorError(LieError):
    pass


class NotAnIdealError(LieError):
    pass


class Violation(NamedTuple):
    """First axiom failure found by :func:`validate`."""

    axiom: str
    indices: tuple[int, ...]
    residual: Vector

    def describe(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.axiom} fails on ({idx})"


class Validation(NamedTuple):
    ok: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=True)
class StructureTensor:
    """Structure constants of an algebra on K^dim: ``c[i][j]`` is ``[e_i, e_j]``."""

    field: FieldSpec
    dim: int
    c: tuple = dc_field(repr=False)

    @classmethod
    def from_brackets(
        cls, field: FieldSpec, dim: int, brackets: Mapping[tuple[int, int], Sequence]
    ) -> "StructureTensor":
        """Build a tensor from ``{(i, j): [e_i, e_j]}`` with i < j, completing antisymmetrically."""
        zero = (field.zero,) * dim
        c = [[zero] * dim for _ in range(dim)]
        for (i, j), v in brackets.items():
            if not 0 <= i < j < dim:
                raise InvalidTensorError(f"bracket index pair ({i},{j}) must satisfy 0 <= i < j < {dim}")
            v = la.as_vector(v, field)
            if len(v) != dim:
                raise InvalidTensorError(f"bracket [{i},{j}] has {len(v)} coordinates, expected {dim}")
            c[i][j] = v
            c[j][i] = tuple(-x for x in v)
        return cls(field, dim, tuple(tuple(row) for row in c))

    @classmethod
    def from_array(cls, field: FieldSpec, arr) -> "StructureTensor":
        """Build from a raw ``n x n x n`` nested sequence, without completion."""
        n = len(arr)
        return cls(field, n, tuple(tuple(la.as_vector(arr[i][j], field) for j in range(n)) for i in range(n)))

    def nonzero_brackets(self) -> dict[tuple[int, int], Vector]:
        return {
            (i, j): self.c[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if any(self.c[i][j])
        }

    def basis_vector(self, i: int) -> Vector:
        return la.unit_vector(self.dim, i, self.field)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bracket(self, x, y)

    @cached_property
    def validation(self) -> Validation:
        return _validate(self)

    def __str__(self):
        from .scalars import format_scalar

        parts = []
        for (i, j), v in self.nonzero_brackets().items():
            terms = [f"{format_scalar(x)}*b{k}" for k, x in enumerate(v) if x]
            parts.append(f"[b{i},b{j}] = " + " + ".join(terms))
        return f"<Lie algebra over {self.field}, dim {self.dim}: " + ("; ".join(parts) or "abelian") + ">"


def _validate(t: StructureTensor) -> Validation:
    n, c = t.dim, t.c
    for i in range(n):
        if any(c[i][i]):
            return Validation(False, Violation("alternating", (i, i), c[i][i]))
    for i in range(n):
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(c[i][j], c[j][i])):
                return Validation(False, Violation("antisymmetry", (i, j), la.add_vectors(c[i][j], c[j][i])))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = t.basis_vector(i), t.basis_vector(j), t.basis_vector(k)
                total = la.add_vectors(
                    la.add_vectors(bracket(t, ei, c[j][k]), bracket(t, ej, c[k][i])),
                    bracket(t, ek, c[i][j]),
                )
                if any(total):
                    return Validation(False, Violation("Jacobi", (i, j, k), total))
    return Validation(True)


def validate(t: StructureTensor) -> Validation:
    """Check the alternating, antisymmetry and Jacobi axioms exactly.

    The result is truthy when all hold; otherwise ``.violation`` names the
    first failing index tuple.
    """
    return t.validation


def require_valid(t: StructureTensor) -> None:
    v = t.validation
    if not v.ok:
        raise InvalidTensorError(v.violation.describe())


def is_abelian(t: StructureTensor) -> bool:
    return not t.nonzero_brackets()


def bracket(t: StructureTensor, x: Sequence, y: Sequence) -> Vector:
    n = t.dim
    if len(x) != n or len(y) != n:
        raise LieError(f"bracket arguments must have length {n}")
    out = [t.field.zero] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = t.c[i]
        for j, yj in enumerate(y):
            if not yj or i == j:
                continue
            coef = xi * yj
            for k, ck in enumerate(row[j]):
                if ck:
                    out[k] = out[k] + coef * ck
    return tuple(out)


def change_of_basis(t: StructureTensor, p: Matrix) -> StructureTensor:
    """The same algebra written in the basis whose i-th vector is column i of ``p``."""
    p = la.as_matrix(p, t.field)
    if la.shape(p) != (t.dim, t.dim):
        raise LinAlgError(f"basis change must be {t.dim}x{t.dim}")
    pinv = la.inverse(p, t.field)
    if pinv is None:
        raise LinAlgError("basis change matrix is singular")
    cols = la.columns(p)
    n = t.dim
    c = [[None] * n for _ in range(n)]
    zero = (t.field.zero,) * n
    for i in range(n):
        c[i][i] = zero
        for j in range(i + 1, n):
            v = la.matvec(pinv, bracket(t, cols[i], cols[j]))
            c[i][j] = v
            c[j][i] = tuple(-x for x in v)
    return StructureTensor(t.field, n, tuple(tuple(r) for r in c))


def commutator(t: StructureTensor) -> Subspace:
    """Span of all [e_i, e_j]."""
    require_valid(t)
    return la.span(t.nonzero_brackets().values(), t.dim, t.field)


def bracket_span(t: StructureTensor, s: Subspace, u: Subspace) -> Subspace:
    """Span of [x, y] for x, y running over the RREF bases of ``s`` and ``u``."""
    return la.span(
        (bracket(t, x, y) for x in s.basis for y in u.basis), t.dim, t.field
    )


def derived_series(t: StructureTensor) -> list[Subspace]:
    """D^0 = L, D^(k+1) = [D^k, D^k], stopping once the dimension stabilizes."""
    require_valid(t)
    series = [la.full_space(t.dim, t.field)]
    while True:
        nxt = bracket_span(t, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def derived_dims(t: StructureTensor) -> list[int]:
    return [s.dim for s in derived_series(t)]


def is_solvable(t: StructureTensor) -> bool:
    return derived_series(t)[-1].dim == 0


def ad(t: StructureTensor, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]; column j is [x, e_j]."""
    x = la.as_vector(x, t.field)
    return la.from_columns([bracket(t, x, t.basis_vector(j)) for j in range(t.dim)]) if t.dim else ()


def restrict(a: Matrix, s: Subspace) -> Matrix | None:
    """The action of ``a`` on an invariant subspace, in the RREF basis of ``s``.

    Returns None when ``s`` is not invariant under ``a``.
    """
    cols = []
    for v in s.basis:
        coords = la.coordinates(s, la.matvec(a, v))
        if coords is None:
            return None
        cols.append(coords)
    return la.from_columns(cols) if cols else ()


def center(t: StructureTensor) -> Subspace:
    """Joint kernel of the maps x -> [x, e_j]."""
    require_valid(t)
    if t.dim == 0:
        return la.zero_subspace(0, t.field)
    # row (j, k) of the stacked system: coefficient of e_k in [x, e_j], as a linear form in x
    stacked = tuple(
        tuple(t.c[i][j][k] for i in range(t.dim)) for j in range(t.dim) for k in range(t.dim)
    )
    return la.span(la.kernel(stacked, t.dim, t.field), t.dim, t.field)


def is_ideal(t: StructureTensor, s: Subspace) -> bool:
    return all(
        la.contains(s, bracket(t, t.basis_vector(i), v)) for i in range(t.dim) for v in s.basis
    )


def is_subalgebra(t: StructureTensor, s: Subspace) -> bool:
    return all(la.contains(s, bracket(t, u, v)) for u in s.basis for v in s.basis)


def subalgebra_tensor(t: StructureTensor, s: Subspace) -> StructureTensor:
    """Structure constants of a subalgebra in the RREF basis of ``s``."""
    m = s.dim
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            coords = la.coordinates(s, bracket(t, s.basis[a], s.basis[b]))
            if coords is None:
                raise LieError("subspace is not closed under the bracket")
            brackets[(a, b)] = coords
    return StructureTensor.from_brackets(t.field, m, brackets)


def quotient(t: StructureTensor, ideal: Subspace) -> tuple[StructureTensor, Matrix]:
    """Induced tensor on L / ideal and the projection matrix L -> L / ideal.

    The quotient is coordinatized by the greedy standard-vector complement of
    the ideal.
    """
    require_valid(t)
    if not is_ideal(t, ideal):
        raise NotAnIdealError("quotient by a subspace that is not an ideal")
    full = la.extend_to_full_basis(ideal)
    k = ideal.dim
    q = t.dim - k
    # rows of full are the basis vectors; coordinates are inverse of the column matrix
    coords = la.inverse(la.transpose(full), t.field)
    projection = coords[k:]
    comp = full[k:]
    brackets = {}
    for a in range(q):
        for b in range(a + 1, q):
            brackets[(a, b)] = la.matvec(projection, bracket(t, comp[a], comp[b]))
    return StructureTensor.from_brackets(t.field, q, brackets), projection


def solvable_by_extension(t: StructureTensor, ideal: Subspace) -> bool:
    """True when both the ideal (as a subalgebra) and the quotient are solvable."""
    if not is_ideal(t, ideal):
        raise NotAnIdealError("solvable_by_extension needs an ideal")
    quo, _ = quotient(t, ideal)
    return is_solvable(subalgebra_tensor(t, ideal)) and is_solvable(quo)


@dataclass(frozen=True)
class IsoWitness:
    """Linear map ``source -> target``; column i is the image of e_i in target coordinates."""

    source: StructureTensor
    target: StructureTensor
    matrix: Matrix

    def inverse(self) -> "IsoWitness":
        inv = la.inverse(self.matrix, self.source.field)
        if inv is None:
            raise LinAlgError("witness matrix is singular")
        return IsoWitness(self.target, self.source, inv)

    def then(self, other: "IsoWitness") -> "IsoWitness":
        """Compose: first ``self``, then ``other``."""
        return IsoWitness(self.source, other.target, la.matmul(other.matrix, self.matrix))


def witness_check(w: IsoWitness) -> bool:
    """Exact check that ``w.matrix`` is invertible and preserves brackets on basis pairs."""
    s, t, p = w.source, w.target, w.matrix
    if s.dim != t.dim or s.field != t.field or la.shape(p) != (s.dim, s.dim):
        return False
    if s.dim and la.inverse(p, s.field) is None:
        return False
    cols = la.columns(p) if s.dim else []
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            if la.matvec(p, s.c[i][j]) != bracket(t, cols[i], cols[j]):
                return False
    return True
