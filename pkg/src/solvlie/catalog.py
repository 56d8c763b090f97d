"""Constructors for the classified algebras and the product constructions.

Covers the dimension <= 3 representatives, semidirect and direct products,
the series aff(K^n) and hyp_n(K), and the search for abelian ideals of
codimension one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import exactlin as la
from .exactlin import Matrix, Subspace
from .liecore import (
    IsoWitness,
    LieError,
    StructureTensor,
    ad,
    bracket,
    commutator,
    is_ideal,
    require_valid,
    restrict,
    subalgebra_tensor,
)
from .scalars import FieldSpec, Scalar, format_scalar, square_class_rep

ABELIAN = "Abelian"
AFFINE2 = "Affine2"
HEISENBERG3 = "Heisenberg3"
AFFINE_PLUS_ABELIAN3 = "AffinePlusAbelian3"
HYPERBOLIC3 = "Hyperbolic3"
FAMILY_BETA0 = "FamilyBeta0"
FAMILY_BETA1 = "FamilyBeta1"

KINDS = (ABELIAN, AFFINE2, HEISENBERG3, AFFINE_PLUS_ABELIAN3, HYPERBOLIC3, FAMILY_BETA0, FAMILY_BETA1)
FAMILY_KINDS = (FAMILY_BETA0, FAMILY_BETA1)


class InconclusiveSearch(LieError):
    """The search space is infinite and no finite reduction is available."""


@dataclass(frozen=True)
class ClassLabel:
    kind: str
    field: FieldSpec
    dim: int
    alpha: Scalar | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown class {self.kind!r}")
        if self.kind in FAMILY_KINDS:
            if self.alpha is None or not self.alpha:
                raise ValueError(f"{self.kind} needs a nonzero parameter")
            object.__setattr__(self, "alpha", self.field(self.alpha))
        elif self.alpha is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    @classmethod
    def abelian(cls, n: int, field: FieldSpec) -> "ClassLabel":
        return cls(ABELIAN, field, n)

    @classmethod
    def of(cls, kind: str, field: FieldSpec, alpha=None) -> "ClassLabel":
        dims = {AFFINE2: 2}
        return cls(kind, field, dims.get(kind, 3), alpha)

    @property
    def beta(self) -> Scalar | None:
        if self.kind == FAMILY_BETA0:
            return self.field.zero
        if self.kind == FAMILY_BETA1:
            return self.field.one
        return None

    @property
    def canonical_param(self) -> Scalar | None:
        # beta = 0: alpha only matters up to squares; beta = 1: alpha is exact
        if self.kind == FAMILY_BETA0:
            return square_class_rep(self.alpha, self.field)
        if self.kind == FAMILY_BETA1:
            return self.alpha
        return None

    def same_class(self, other: "ClassLabel") -> bool:
        return (
            self.kind == other.kind
            and self.dim == other.dim
            and self.field == other.field
            and self.canonical_param == other.canonical_param
        )

    def __str__(self):
        if self.kind == ABELIAN:
            return f"Abelian({self.dim})"
        if self.alpha is not None:
            return f"{self.kind}({format_scalar(self.alpha)})"
        return self.kind


def mk_abelian(n: int, field: FieldSpec) -> StructureTensor:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return StructureTensor.from_brackets(field, n, {})


def affine2(field: FieldSpec) -> StructureTensor:
    return StructureTensor.from_brackets(field, 2, {(0, 1): (0, 1)})


def heisenberg3(field: FieldSpec) -> StructureTensor:
    return StructureTensor.from_brackets(field, 3, {(1, 2): (1, 0, 0)})


def affine_plus_abelian3(field: FieldSpec) -> StructureTensor:
    return StructureTensor.from_brackets(field, 3, {(1, 2): (0, 1, 0)})


def hyperbolic3(field: FieldSpec) -> StructureTensor:
    return StructureTensor.from_brackets(field, 3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, 1)})


def family(alpha, beta, field: FieldSpec) -> StructureTensor:
    """[b0,b1] = b2, [b0,b2] = alpha*b1 + beta*b2."""
    a, b = field(alpha), field(beta)
    return StructureTensor.from_brackets(
        field, 3, {(0, 1): (0, 0, 1), (0, 2): (field.zero, a, b)}
    )


def cross_product_algebra(field: FieldSpec) -> StructureTensor:
    """[e0,e1] = e2 cyclically; not solvable in any characteristic."""
    return StructureTensor.from_brackets(
        field, 3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)}
    )


def representative(label: ClassLabel) -> StructureTensor:
    f = label.field
    if label.kind == ABELIAN:
        return mk_abelian(label.dim, f)
    if label.kind in FAMILY_KINDS:
        return family(label.alpha, label.beta, f)
    return {
        AFFINE2: affine2,
        HEISENBERG3: heisenberg3,
        AFFINE_PLUS_ABELIAN3: affine_plus_abelian3,
        HYPERBOLIC3: hyperbolic3,
    }[label.kind](f)


def catalog_labels(field: FieldSpec, alphas: Sequence | None = None) -> list[ClassLabel]:
    """Every representative of dimension 1..3; families over ``alphas``.

    Over F_p the default is every nonzero residue; over Q it is ``alphas``
    or (1, -1, 2, -2, 8, 1/2).
    """
    if alphas is None:
        if field.is_rational:
            alphas = [1, -1, 2, -2, 8, "1/2"]
        else:
            alphas = list(field.nonzero_elements())
    labels = [ClassLabel.abelian(n, field) for n in (1, 2, 3)]
    labels.insert(2, ClassLabel.of(AFFINE2, field))
    labels += [ClassLabel.of(k, field) for k in (HEISENBERG3, AFFINE_PLUS_ABELIAN3, HYPERBOLIC3)]
    for kind in FAMILY_KINDS:
        labels += [ClassLabel.of(kind, field, field(a)) for a in alphas]
    return labels


def derivation_check(j: StructureTensor, d: Matrix) -> bool:
    """Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    d = la.as_matrix(d, j.field)
    if la.shape(d) != (j.dim, j.dim) and j.dim:
        raise la.LinAlgError(f"derivation must be {j.dim}x{j.dim}")
    cols = la.columns(d) if j.dim else []
    for a in range(j.dim):
        for b in range(a + 1, j.dim):
            lhs = la.matvec(d, j.c[a][b])
            rhs = la.add_vectors(
                bracket(j, cols[a], j.basis_vector(b)), bracket(j, j.basis_vector(a), cols[b])
            )
            if lhs != rhs:
                return False
    return True


def commutator_of_maps(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = la.matmul(a, b), la.matmul(b, a)
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(ab, ba))


@dataclass(frozen=True)
class DerivationAction:
    """phi: L -> Der(J), given by the images of the basis of L."""

    domain: StructureTensor
    target: StructureTensor
    phi: tuple

    def __post_init__(self):
        f = self.target.field
        object.__setattr__(self, "phi", tuple(la.as_matrix(m, f) for m in self.phi))

    def image(self, x: Sequence) -> Matrix:
        n = self.target.dim
        out = la.zeros(n, n, self.target.field)
        for xi, m in zip(x, self.phi):
            if xi:
                out = tuple(tuple(u + xi * v for u, v in zip(r, s)) for r, s in zip(out, m))
        return out

    def problems(self) -> list[str]:
        l, j = self.domain, self.target
        if l.field != j.field:
            return ["domain and target are over different fields"]
        if len(self.phi) != l.dim:
            return [f"need {l.dim} matrices, got {len(self.phi)}"]
        out = []
        for i, m in enumerate(self.phi):
            if la.shape(m) != (j.dim, j.dim) and j.dim:
                out.append(f"phi(e{i}) is not {j.dim}x{j.dim}")
            elif not derivation_check(j, m):
                out.append(f"phi(e{i}) is not a derivation")
        if out:
            return out
        for a in range(l.dim):
            for b in range(a + 1, l.dim):
                if self.image(l.c[a][b]) != commutator_of_maps(self.phi[a], self.phi[b]):
                    out.append(f"phi is not a homomorphism on (e{a}, e{b})")
        return out


def semidirect(act: DerivationAction) -> StructureTensor:
    """L x| J on coordinates (L part, J part); J is an ideal of the result."""
    problems = act.problems()
    if problems:
        raise LieError("invalid derivation action: " + "; ".join(problems))
    l, j = act.domain, act.target
    m, n = l.dim, j.dim
    zl, zj = (l.field.zero,) * m, (l.field.zero,) * n
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            brackets[(a, b)] = l.c[a][b] + zj
        for b in range(n):
            brackets[(a, m + b)] = zl + tuple(row[b] for row in act.phi[a])
    for a in range(n):
        for b in range(a + 1, n):
            brackets[(m + a, m + b)] = zl + j.c[a][b]
    return StructureTensor.from_brackets(l.field, m + n, brackets)


def direct_sum(t1: StructureTensor, t2: StructureTensor) -> StructureTensor:
    if t1.field != t2.field:
        raise LieError("direct sum of algebras over different fields")
    zero = la.zeros(t2.dim, t2.dim, t2.field)
    return semidirect(DerivationAction(t1, t2, (zero,) * t1.dim))


def gl_n(n: int, field: FieldSpec) -> StructureTensor:
    """End(K^n) with the commutator bracket; E_ab has index a*n + b."""
    dim = n * n
    brackets = {}
    for a, b, c, d in product(range(n), repeat=4):
        i, j = a * n + b, c * n + d
        if i >= j:
            continue
        v = [field.zero] * dim
        if b == c:
            v[a * n + d] += 1
        if d == a:
            v[c * n + b] -= 1
        brackets[(i, j)] = v
    return StructureTensor.from_brackets(field, dim, brackets)


def _elementary(n: int, a: int, b: int, field: FieldSpec) -> Matrix:
    return tuple(
        tuple(field.one if (r, s) == (a, b) else field.zero for s in range(n)) for r in range(n)
    )


def aff_n(n: int, field: FieldSpec) -> StructureTensor:
    """aff(K^n) = End(K^n) x| K^n, dimension n^2 + n."""
    if n < 1:
        raise ValueError("aff_n needs n >= 1")
    phi = tuple(_elementary(n, a, b, field) for a in range(n) for b in range(n))
    return semidirect(DerivationAction(gl_n(n, field), mk_abelian(n, field), phi))


def hyp_n(n: int, field: FieldSpec) -> StructureTensor:
    """hyp_n(K) = K x| K^(n-1) with the generator acting as the identity."""
    if n < 2:
        raise ValueError("hyp_n needs n >= 2")
    act = DerivationAction(mk_abelian(1, field), mk_abelian(n - 1, field), (la.identity(n - 1, field),))
    return semidirect(act)


def _is_abelian_subspace(t: StructureTensor, s: Subspace) -> bool:
    return all(
        not any(bracket(t, s.basis[a], s.basis[b]))
        for a in range(s.dim)
        for b in range(a + 1, s.dim)
    )


def _hyperplanes(n: int, field: FieldSpec):
    """All hyperplanes of F_p^n, in RREF order: pivot pattern first, then entries."""
    for q in range(n - 1, -1, -1):
        for free in product(list(field.elements()), repeat=q):
            rows = []
            for c in range(n):
                if c == q:
                    continue
                row = list(la.unit_vector(n, c, field))
                if c < q:
                    row[q] = free[c]
                rows.append(tuple(row))
            yield Subspace(field, n, tuple(rows))


def almost_abelian_check(t: StructureTensor) -> Subspace | None:
    """An abelian ideal of codimension one, or None if there is none.

    Over F_p every hyperplane is tried.  Over Q the hyperplanes containing the
    commutator are searched when the commutator has codimension <= 2;
    otherwise :class:`InconclusiveSearch` is raised.
    """
    require_valid(t)
    n, f = t.dim, t.field
    if n == 0:
        return None
    if not f.is_rational:
        for h in _hyperplanes(n, f):
            if is_ideal(t, h) and _is_abelian_subspace(t, h):
                return h
        return None
    if not t.nonzero_brackets():
        return la.span([la.unit_vector(n, i, f) for i in range(n - 1)], n, f)
    comm = commutator(t)
    d = n - comm.dim
    if d == 0 or not _is_abelian_subspace(t, comm):
        return None
    if d == 1:
        return comm
    if d > 2:
        raise InconclusiveSearch(f"commutator has codimension {d} over Q")
    # every hyperplane above the commutator is comm + <u>, u on the line through w1, w2
    w1, w2 = la.complement_basis(comm)
    lhs = tuple((x,) for c in comm.basis for x in bracket(t, w2, c))
    rhs = tuple(-x for c in comm.basis for x in bracket(t, w1, c))
    u = _line_above(w1, w2, lhs, rhs, f)
    return None if u is None else la.span(list(comm.basis) + [u], n, f)


def _line_above(w1, w2, lhs, rhs, field):
    """First u in (w1 + t*w2 for t in K, then w2) with lhs*t == rhs."""
    if not lhs:
        return w1
    sol = la.solve(lhs, rhs, field)
    if sol is not None:
        return la.add_vectors(w1, la.scale_vector(sol[0], w2))
    if not any(row[0] for row in lhs):
        return w2
    return None


def codim1_split(t: StructureTensor, ideal: Subspace) -> tuple[DerivationAction, IsoWitness]:
    """Write ``t`` as K x| ideal for a codimension-one ideal.

    The complement generator is the first standard vector outside the ideal;
    the returned witness maps ``t`` onto the semidirect product.
    """
    require_valid(t)
    if ideal.dim != t.dim - 1:
        raise LieError(f"ideal has codimension {t.dim - ideal.dim}, expected 1")
    if not is_ideal(t, ideal):
        raise LieError("codim1_split needs an ideal")
    x = la.complement_basis(ideal)[0]
    phi = restrict(ad(t, x), ideal)
    act = DerivationAction(mk_abelian(1, t.field), subalgebra_tensor(t, ideal), (phi,))
    sd = semidirect(act)
    back = IsoWitness(sd, t, la.from_columns([x] + list(ideal.basis)))
    return act, back.inverse()
