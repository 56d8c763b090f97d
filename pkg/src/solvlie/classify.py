"""Classification of solvable Lie algebras of dimension at most three.

:func:`classify` builds an adapted basis step by step and returns the class
label together with an isomorphism witness onto the catalog representative.
Every witness is checked before it is returned, so a wrong basis choice
surfaces as :class:`InternalInvariantError` instead of a wrong label.
"""

from __future__ import annotations

from typing import NamedTuple

from . import exactlin as la
from .catalog import (
    AFFINE2,
    AFFINE_PLUS_ABELIAN3,
    FAMILY_BETA0,
    FAMILY_BETA1,
    FAMILY_KINDS,
    HEISENBERG3,
    HYPERBOLIC3,
    ClassLabel,
    representative,
)
from .exactlin import Subspace, Vector
from .liecore import (
    IsoWitness,
    LieError,
    StructureTensor,
    ad,
    bracket,
    center,
    commutator,
    is_solvable,
    require_valid,
    restrict,
    witness_check,
)
from .scalars import FieldSpec, Scalar, sqrt_in_field


class InternalInvariantError(RuntimeError):
    """A step that the classification theorem guarantees has failed."""


class UnsupportedDimension(LieError):
    pass


class Classification(NamedTuple):
    """Outcome of :func:`classify`; ``label`` is None for a non-solvable algebra."""

    label: ClassLabel | None
    witness: IsoWitness | None

    @property
    def solvable(self) -> bool:
        return self.label is not None


def classify(t: StructureTensor) -> Classification:
    require_valid(t)
    if not 1 <= t.dim <= 3:
        raise UnsupportedDimension(f"classification is implemented for dimensions 1-3, got {t.dim}")
    if t.dim == 3 and not is_solvable(t):
        return Classification(None, None)
    label, basis = _adapted_basis(t)
    rep = representative(label)
    # basis columns map rep coordinates into t coordinates
    to_t = IsoWitness(rep, t, la.from_columns(basis))
    if la.inverse(to_t.matrix, t.field) is None or not witness_check(to_t):
        raise InternalInvariantError(f"adapted basis for {label} does not satisfy its relations")
    return Classification(label, to_t.inverse())


def _adapted_basis(t: StructureTensor) -> tuple[ClassLabel, list[Vector]]:
    f, n = t.field, t.dim
    eye = [t.basis_vector(i) for i in range(n)]
    comm = commutator(t)
    if comm.dim == 0:
        return ClassLabel.abelian(n, f), eye
    if n == 2:
        c = comm.basis[0]
        x, lam = _eigen_partner(t, c, comm)
        return ClassLabel.of(AFFINE2, f), [la.scale_vector(1 / lam, x), c]
    if comm.dim == 1:
        return _commutator_line(t, comm)
    if comm.dim == 2:
        return _commutator_plane(t, comm)
    raise InternalInvariantError("solvable algebra with commutator of dimension 3")


def _eigen_partner(t: StructureTensor, c: Vector, comm: Subspace) -> tuple[Vector, Scalar]:
    """Some x with [x, c] = lam * c and lam != 0; c spans the line ``comm``."""
    candidates = [t.basis_vector(i) for i in range(t.dim)]
    candidates += [la.add_vectors(x, c) for x in candidates]
    for x in candidates:
        coords = la.coordinates(comm, bracket(t, x, c))
        if coords is None:
            raise InternalInvariantError("commutator line is not an ideal")
        if coords[0]:
            return x, coords[0]
    raise InternalInvariantError("no element acts nontrivially on the commutator line")


def _commutator_line(t: StructureTensor, comm: Subspace):
    f = t.field
    c = comm.basis[0]
    central = all(not any(bracket(t, t.basis_vector(i), c)) for i in range(t.dim))
    if central:
        y1, y2 = la.complement_basis(comm)
        b0 = bracket(t, y1, y2)
        if not any(b0):
            raise InternalInvariantError("complement of a central commutator is abelian")
        return ClassLabel.of(HEISENBERG3, f), [b0, y1, y2]
    z = center(t)
    if z.dim != 1 or la.contains(comm, z.basis[0]):
        raise InternalInvariantError("center is not a line complementary to the commutator")
    x, lam = _eigen_partner(t, c, comm)
    # [c, -x/lam] = c
    return ClassLabel.of(AFFINE_PLUS_ABELIAN3, f), [z.basis[0], c, la.scale_vector(-1 / lam, x)]


def _restricted_action(t: StructureTensor, comm: Subspace):
    s1, s2 = comm.basis
    if any(bracket(t, s1, s2)):
        raise InternalInvariantError("two-dimensional commutator is not abelian")
    x = la.complement_basis(comm)[0]
    a = restrict(ad(t, x), comm)
    if a is None:
        raise InternalInvariantError("commutator is not invariant under ad")
    return x, a


def _is_scalar(a) -> bool:
    return not a[0][1] and not a[1][0] and a[0][0] == a[1][1]


def _commutator_plane(t: StructureTensor, comm: Subspace):
    f = t.field
    x, a = _restricted_action(t, comm)
    if not la.det2(a):
        raise InternalInvariantError("ad action on a two-dimensional commutator is singular")
    s1, s2 = comm.basis
    if _is_scalar(a):
        mu = a[0][0]
        return ClassLabel.of(HYPERBOLIC3, f), [la.scale_vector(1 / mu, x), s1, s2]
    # a non-scalar 2x2 map has at most two eigenlines, so one of three lines is cyclic
    for u in ((f.one, f.zero), (f.zero, f.one), (f.one, f.one)):
        au = la.matvec(a, u)
        if la.det2((u, au)):
            break
    else:
        raise InternalInvariantError("no cyclic vector for a non-scalar action")
    alpha, beta = la.solve(la.from_columns([u, au]), la.matvec(a, au), f)
    v = la.add_vectors(la.scale_vector(u[0], s1), la.scale_vector(u[1], s2))
    w = bracket(t, x, v)
    if not beta:
        return ClassLabel.of(FAMILY_BETA0, f, alpha), [x, v, w]
    g = 1 / beta
    return (
        ClassLabel.of(FAMILY_BETA1, f, alpha * g * g),
        [la.scale_vector(g, x), v, la.scale_vector(g, w)],
    )


def scalar_action_invariant(t: StructureTensor) -> Scalar | None:
    """mu when some x outside the commutator acts on it as mu * identity, else None."""
    require_valid(t)
    comm = commutator(t)
    if t.dim != 3 or comm.dim != 2:
        raise LieError("scalar_action_invariant needs dim 3 and a two-dimensional commutator")
    _, a = _restricted_action(t, comm)
    return a[0][0] if _is_scalar(a) else None


def params_equivalent(alpha, beta, alpha2, beta2, field: FieldSpec) -> Scalar | None:
    """A nonzero gamma with alpha = gamma^2 * alpha2 and beta = gamma * beta2, if any."""
    alpha, beta, alpha2, beta2 = (field(v) for v in (alpha, beta, alpha2, beta2))
    if not alpha or not alpha2:
        raise LieError("family parameters alpha must be nonzero")
    if not beta and not beta2:
        return sqrt_in_field(alpha / alpha2, field)
    if not beta or not beta2:
        return None
    gamma = beta / beta2
    return gamma if alpha == gamma * gamma * alpha2 else None


def family_rescaling(gamma, source: StructureTensor, target: StructureTensor) -> IsoWitness:
    """Witness F(gamma^2 a, gamma b) -> F(a, b): b0 -> gamma b0, b1 -> b1, b2 -> gamma b2."""
    f = source.field
    g = f(gamma)
    z = f.zero
    return IsoWitness(source, target, ((g, z, z), (z, f.one, z), (z, z, g)))


def iso_decide(t1: StructureTensor, t2: StructureTensor) -> IsoWitness | None:
    """An isomorphism t1 -> t2, or None when the two are not isomorphic."""
    if t1.field != t2.field:
        raise LieError("algebras over different fields")
    if t1.dim != t2.dim:
        return None
    r1, r2 = classify(t1), classify(t2)
    if not (r1.solvable and r2.solvable):
        raise LieError("iso_decide needs solvable algebras")
    l1, l2 = r1.label, r2.label
    if l1.kind != l2.kind:
        return None
    rep1, rep2 = r1.witness.target, r2.witness.target
    if l1.kind in FAMILY_KINDS:
        gamma = params_equivalent(l1.alpha, l1.beta, l2.alpha, l2.beta, t1.field)
        if gamma is None:
            return None
        middle = family_rescaling(gamma, rep1, rep2)
    else:
        middle = IsoWitness(rep1, rep2, la.identity(t1.dim, t1.field))
    w = r1.witness.then(middle).then(r2.witness.inverse())
    if not witness_check(w):
        raise InternalInvariantError(f"composed witness {l1} -> {l2} fails the bracket check")
    return w
