"""Brute-force ground truth over small prime fields.

The isomorphism search here does not use the classifier at all: it walks
through every invertible matrix over F_p (vectorized with numpy on plain
integers) and keeps the first one that preserves all basis brackets.
"""

from __future__ import annotations

import random
from typing import Iterator

import numpy as np

from . import exactlin as la
from .catalog import catalog_labels, representative
from .exactlin import Matrix
from .liecore import IsoWitness, LieError, StructureTensor, change_of_basis, witness_check
from .scalars import FieldSpec, Residue

DEFAULT_BUDGET = 3**9
LARGE_BUDGET = 5**9
CHUNK = 1 << 17


class BudgetExceeded(LieError):
    pass


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out


def _check_budget(n: int, p: int, budget: int) -> None:
    if p ** (n * n) > budget:
        raise BudgetExceeded(f"enumerating {p}^{n * n} matrices exceeds the budget of {budget}")


def _int_det(m: np.ndarray) -> np.ndarray:
    """Integer determinants of a stack of n x n matrices by cofactor expansion."""
    n = m.shape[-1]
    if n == 0:
        return np.ones(m.shape[:-2], dtype=np.int64)
    if n == 1:
        return m[..., 0, 0]
    total = np.zeros(m.shape[:-2], dtype=np.int64)
    for j in range(n):
        minor = np.delete(np.delete(m, 0, axis=-2), j, axis=-1)
        total = total + (-1) ** j * m[..., 0, j] * _int_det(minor)
    return total


def _gl_chunks(n: int, p: int, budget: int) -> Iterator[np.ndarray]:
    """Invertible matrices as int arrays, identity first.

    Matrices are visited as I + D (mod p) with D running through all p^(n*n)
    offsets in row-major lexicographic order.
    """
    _check_budget(n, p, budget)
    total = p ** (n * n)
    powers = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    eye = np.eye(n, dtype=np.int64).reshape(-1)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        flat = (idx[:, None] // powers) % p
        mats = ((flat + eye) % p).reshape(-1, n, n)
        yield mats[_int_det(mats) % p != 0]


def _to_matrix(m: np.ndarray, p: int) -> Matrix:
    return tuple(tuple(Residue(int(x), p) for x in row) for row in m)


def invertible_matrices(n: int, p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """Every matrix in GL_n(F_p) exactly once, starting with the identity."""
    for chunk in _gl_chunks(n, p, budget):
        for m in chunk:
            yield _to_matrix(m, p)


def _int_tensor(t: StructureTensor) -> np.ndarray:
    n = t.dim
    return np.array(
        [[[int(t.c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)], dtype=np.int64
    ).reshape(n, n, n)


def brute_force_iso(
    t1: StructureTensor, t2: StructureTensor, budget: int = DEFAULT_BUDGET
) -> IsoWitness | None:
    """First invertible P (in enumeration order) mapping t1 onto t2, or None."""
    if t1.field != t2.field or t1.field.is_rational:
        raise LieError("brute force needs both algebras over the same prime field")
    if t1.dim != t2.dim:
        raise LieError("brute force needs algebras of equal dimension")
    n, p = t1.dim, t1.field.modulus
    c1, c2 = _int_tensor(t1), _int_tensor(t2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mats in _gl_chunks(n, p, budget):
        ok = np.ones(len(mats), dtype=bool)
        for i, j in pairs:
            lhs = np.einsum("Nka,a->Nk", mats, c1[i, j]) % p
            rhs = np.einsum("Na,Nb,abk->Nk", mats[:, :, i], mats[:, :, j], c2) % p
            ok &= (lhs == rhs).all(axis=1)
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            w = IsoWitness(t1, t2, _to_matrix(mats[hits[0]], p))
            if not witness_check(w):
                raise AssertionError("integer search and exact witness check disagree")
            return w
    return None


def random_invertible(n: int, field: FieldSpec, rng: random.Random, attempts: int = 1000) -> Matrix:
    for _ in range(attempts):
        if field.is_rational:
            rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randrange(field.modulus) for _ in range(n)] for _ in range(n)]
        m = la.as_matrix(rows, field)
        if la.inverse(m, field) is not None:
            return m
    raise RuntimeError(f"no invertible matrix found in {attempts} attempts")


def random_conjugate(t: StructureTensor, seed: int) -> tuple[StructureTensor, Matrix]:
    """``t`` rewritten in a random basis; deterministic in ``seed``."""
    p = random_invertible(t.dim, t.field, random.Random(seed))
    return change_of_basis(t, p), p


def sweep(p: int, budget: int = DEFAULT_BUDGET):
    """Compare brute force with ``iso_decide`` on every ordered catalog pair over F_p.

    Yields ``(label1, label2, brute_witness, decided_witness)``.
    """
    from .classify import iso_decide

    field = FieldSpec.prime(p)
    labels = catalog_labels(field)
    for l1 in labels:
        for l2 in labels:
            if l1.dim != l2.dim:
                continue
            t1, t2 = representative(l1), representative(l2)
            yield l1, l2, brute_force_iso(t1, t2, budget), iso_decide(t1, t2)
