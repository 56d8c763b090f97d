"""Exact linear algebra over a :class:`~solvlie.scalars.FieldSpec`.

Matrices are tuples of row tuples and vectors are tuples.  Every function is
pure.  Subspaces are kept as RREF bases so that equal subspaces compare equal.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .scalars import FieldSpec, Scalar

Vector = tuple
Matrix = tuple  # tuple[tuple[Scalar, ...], ...]


class LinAlgError(ValueError):
    pass


def as_matrix(rows: Iterable[Iterable], field: FieldSpec) -> Matrix:
    return tuple(tuple(field(x) for x in row) for row in rows)


def as_vector(v: Iterable, field: FieldSpec) -> Vector:
    return tuple(field(x) for x in v)


def zeros(rows: int, cols: int, field: FieldSpec) -> Matrix:
    z = field.zero
    return tuple((z,) * cols for _ in range(rows))


def identity(n: int, field: FieldSpec) -> Matrix:
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def unit_vector(n: int, i: int, field: FieldSpec) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def columns(m: Matrix) -> list[Vector]:
    return list(transpose(m))


def from_columns(cols: Sequence[Vector]) -> Matrix:
    return tuple(zip(*cols))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise LinAlgError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
    if a and len(a[0]) != len(v):
        raise LinAlgError(f"matrix has {len(a[0])} columns, vector has length {len(v)}")
    return tuple(_dot(row, v) for row in a)


def _dot(u: Sequence, v: Sequence):
    it = iter(zip(u, v))
    a, b = next(it)
    s = a * b
    for a, b in it:
        s = s + a * b
    return s


def add_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1]) if m else 0


def solve(a: Matrix, b: Sequence, field: FieldSpec) -> Vector | None:
    """Solve ``a @ x == b``; free variables are set to zero.  None if inconsistent."""
    if len(a) != len(b):
        raise LinAlgError(f"{len(a)} equations but right-hand side of length {len(b)}")
    ncols = len(a[0]) if a else 0
    aug = as_matrix((tuple(row) + (bi,) for row, bi in zip(a, b)), field)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return tuple(x)


def kernel(m: Matrix, ncols: int, field: FieldSpec) -> list[Vector]:
    """Basis of the right null space of ``m`` (which has ``ncols`` columns)."""
    if not m:
        return [unit_vector(ncols, i, field) for i in range(ncols)]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, c in zip(red, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(m: Matrix, field: FieldSpec) -> Matrix | None:
    n, k = shape(m)
    if n != k:
        raise LinAlgError(f"non-square matrix {shape(m)}")
    eye = identity(n, field)
    red, pivots = rref(tuple(tuple(r) + e for r, e in zip(m, eye)))
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return tuple(tuple(row[n:]) for row in red)


def det(m: Matrix, field: FieldSpec) -> Scalar:
    """Determinant by Gaussian elimination."""
    n, k = shape(m)
    if n != k:
        raise LinAlgError(f"non-square matrix {shape(m)}")
    rows = [list(r) for r in m]
    d = field.one
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return field.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def det2(m: Matrix) -> Scalar:
    if shape(m) != (2, 2):
        raise LinAlgError(f"det2 needs a 2x2 matrix, got {shape(m)}")
    (a, b), (c, d) = m
    return a * d - b * c


def trace(m: Matrix) -> Scalar:
    n, k = shape(m)
    if n != k:
        raise LinAlgError(f"non-square matrix {shape(m)}")
    if n == 0:
        raise LinAlgError("trace of an empty matrix")
    return reduce(operator.add, (m[i][i] for i in range(n)))


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^ambient_dim, stored as an RREF basis (one row per vector)."""

    field: FieldSpec
    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def __len__(self):
        return self.dim

    def __contains__(self, v) -> bool:
        return contains(self, v)


def span(vectors: Iterable[Sequence], ambient_dim: int, field: FieldSpec) -> Subspace:
    vs = [as_vector(v, field) for v in vectors]
    for v in vs:
        if len(v) != ambient_dim:
            raise LinAlgError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    if not vs:
        return Subspace(field, ambient_dim, ())
    red, _ = rref(tuple(vs))
    return Subspace(field, ambient_dim, red)


def zero_subspace(n: int, field: FieldSpec) -> Subspace:
    return Subspace(field, n, ())


def full_space(n: int, field: FieldSpec) -> Subspace:
    return Subspace(field, n, identity(n, field))


def _check_ambient(s: Subspace, t: Subspace):
    if s.ambient_dim != t.ambient_dim:
        raise LinAlgError(f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}")


def contains(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise LinAlgError(f"vector of length {len(v)} in ambient dimension {s.ambient_dim}")
    return coordinates(s, v) is not None


def coordinates(s: Subspace, v: Sequence) -> Vector | None:
    """Coordinates of ``v`` in the RREF basis of ``s``, or None if ``v`` is not in ``s``."""
    # In RREF the coordinate on row r is simply v at that row's pivot.
    coords = tuple(v[c] for c in s.pivots)
    rebuilt = [s.field.zero] * s.ambient_dim
    for a, row in zip(coords, s.basis):
        for k, x in enumerate(row):
            rebuilt[k] = rebuilt[k] + a * x
    if tuple(rebuilt) != tuple(v):
        return None
    return coords


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return span(list(s.basis) + list(t.basis), s.ambient_dim, s.field)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """Meet of two subspaces via the kernel of the stacked system [S^T | -T^T]."""
    _check_ambient(s, t)
    if not s.dim or not t.dim:
        return zero_subspace(s.ambient_dim, s.field)
    stacked = tuple(
        tuple(s.basis[i][k] for i in range(s.dim)) + tuple(-t.basis[j][k] for j in range(t.dim))
        for k in range(s.ambient_dim)
    )
    vecs = []
    for sol in kernel(stacked, s.dim + t.dim, s.field):
        v = [s.field.zero] * s.ambient_dim
        for a, row in zip(sol[: s.dim], s.basis):
            v = [x + a * y for x, y in zip(v, row)]
        vecs.append(v)
    return span(vecs, s.ambient_dim, s.field)


def extend_to_full_basis(s: Subspace) -> Matrix:
    """RREF basis of ``s`` followed by greedily chosen standard vectors.

    A standard vector e_i is appended, lowest index first, whenever it is not
    in the span of the rows chosen so far.
    """
    rows = list(s.basis)
    current = s
    for i in range(s.ambient_dim):
        if current.dim == s.ambient_dim:
            break
        e = unit_vector(s.ambient_dim, i, s.field)
        if not contains(current, e):
            rows.append(e)
            current = span(rows, s.ambient_dim, s.field)
    return tuple(rows)


def complement_basis(s: Subspace) -> list[Vector]:
    """The standard vectors that :func:`extend_to_full_basis` appends to ``s``."""
    return list(extend_to_full_basis(s)[s.dim:])
