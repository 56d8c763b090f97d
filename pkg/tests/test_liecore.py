import random

import pytest
from hypothesis import given, settings, strategies as st

from solvlie import exactlin as la
from solvlie.catalog import (
    affine2,
    catalog_labels,
    cross_product_algebra,
    family,
    heisenberg3,
    hyperbolic3,
    mk_abelian,
    representative,
)
from solvlie.liecore import (
    InvalidTensorError,
    IsoWitness,
    LieError,
    NotAnIdealError,
    StructureTensor,
    ad,
    bracket,
    center,
    change_of_basis,
    commutator,
    derived_dims,
    is_ideal,
    is_solvable,
    quotient,
    restrict,
    solvable_by_extension,
    subalgebra_tensor,
    validate,
    witness_check,
)
from solvlie.oracle import random_conjugate, random_invertible

from conftest import ALL_FIELDS, F5, Q
from oracles import brute_derived_dims, jacobi_failures


def v(*xs, f=Q):
    return la.as_vector(xs, f)


def test_validate_affine_and_abelian():
    t = StructureTensor.from_array(Q, [[[0, 0], [0, 1]], [[0, -1], [0, 0]]])
    assert t == affine2(Q)
    assert validate(t)
    for n in range(5):
        assert validate(mk_abelian(n, Q))


def test_validate_sl2_like_example_is_a_lie_algebra():
    # [e0,e1]=e0, [e0,e2]=e1, [e1,e2]=e2: the cyclic sum on (0,1,2) is e1 + 0 - e1
    t = StructureTensor.from_brackets(Q, 3, {(0, 1): (1, 0, 0), (0, 2): (0, 1, 0), (1, 2): (0, 0, 1)})
    assert jacobi_failures(t) == []
    assert validate(t)
    assert not is_solvable(t)


def test_validate_reports_jacobi_triple():
    t = StructureTensor.from_brackets(Q, 3, {(0, 1): (1, 0, 0), (0, 2): (0, 1, 0), (1, 2): (1, 0, 0)})
    assert jacobi_failures(t)
    res = validate(t)
    assert not res
    assert res.violation.axiom == "Jacobi" and res.violation.indices == (0, 1, 2)


def test_validate_reports_antisymmetry_and_alternating():
    bad = StructureTensor.from_array(Q, [[[0, 0], [0, 1]], [[0, 1], [0, 0]]])
    assert validate(bad).violation.axiom == "antisymmetry"
    bad = StructureTensor.from_array(Q, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]])
    assert validate(bad).violation.axiom == "alternating"
    with pytest.raises(InvalidTensorError):
        commutator(bad)


def test_bracket_examples():
    assert bracket(affine2(Q), v(1, 0), v(0, 1)) == v(0, 1)
    assert bracket(heisenberg3(Q), v(0, 1, 0), v(0, 0, 1)) == v(1, 0, 0)
    with pytest.raises(LieError):
        bracket(affine2(Q), v(1, 0), v(1, 0, 0))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_bracket_alternating(xs):
    x = v(*xs)
    for t in (heisenberg3(Q), hyperbolic3(Q), family(2, 3, Q), cross_product_algebra(Q)):
        assert not any(bracket(t, x, x))


def test_change_of_basis_examples():
    t = hyperbolic3(Q)
    assert change_of_basis(t, la.identity(3, Q)) == t
    swapped = change_of_basis(affine2(Q), la.as_matrix([[0, 1], [1, 0]], Q))
    # f0 = e1, f1 = e0: [f1, f0] = [e0, e1] = e1 = f0
    assert swapped.c[1][0] == v(1, 0) and swapped.c[0][1] == v(-1, 0)
    rng = random.Random(3)
    for _ in range(10):
        p = random_invertible(3, F5, rng)
        assert validate(change_of_basis(hyperbolic3(F5), p))
    with pytest.raises(la.LinAlgError):
        change_of_basis(t, la.zeros(3, 3, Q))


@pytest.mark.parametrize("f", ALL_FIELDS, ids=str)
def test_change_of_basis_composition(f):
    rng = random.Random(8)
    t = family(f(1), f(1), f) if f.modulus == 2 else family(f(2), f(1), f)
    for _ in range(5):
        p, q = random_invertible(3, f, rng), random_invertible(3, f, rng)
        assert change_of_basis(change_of_basis(t, p), q) == change_of_basis(t, la.matmul(p, q))


def test_commutator_examples():
    assert commutator(mk_abelian(3, Q)).dim == 0
    assert commutator(hyperbolic3(Q)) == la.span([(0, 1, 0), (0, 0, 1)], 3, Q)
    assert commutator(heisenberg3(Q)) == la.span([(1, 0, 0)], 3, Q)


def test_derived_series_examples():
    assert derived_dims(mk_abelian(3, Q)) == [3, 0]
    assert derived_dims(hyperbolic3(Q)) == [3, 2, 0]
    t = cross_product_algebra(Q)
    assert derived_dims(t) == [3]
    assert not is_solvable(t)


def test_center_examples():
    assert center(mk_abelian(4, Q)).dim == 4
    assert center(heisenberg3(Q)) == la.span([(1, 0, 0)], 3, Q)
    assert center(affine2(Q)).dim == 0


def test_ad_and_restrict_examples():
    alpha, beta = Q(5), Q(-3)
    t = family(alpha, beta, Q)
    a = restrict(ad(t, v(1, 0, 0)), commutator(t))
    assert a == ((0, alpha), (1, beta))
    assert restrict(ad(hyperbolic3(Q), v(1, 0, 0)), commutator(hyperbolic3(Q))) == la.identity(2, Q)
    assert ad(mk_abelian(3, Q), v(1, 2, 3)) == la.zeros(3, 3, Q)
    # span{e1} is not invariant under ad(e0) in the family
    assert restrict(ad(t, v(1, 0, 0)), la.span([(0, 1, 0)], 3, Q)) is None


def test_ideal_and_quotient_examples():
    for f in ALL_FIELDS:
        for label in catalog_labels(f):
            t = representative(label)
            assert is_ideal(t, commutator(t))
    t = hyperbolic3(Q)
    quo, proj = quotient(t, commutator(t))
    assert quo == mk_abelian(1, Q)
    assert proj == la.as_matrix([[1, 0, 0]], Q)
    assert not is_ideal(affine2(Q), la.span([(1, 0)], 2, Q))
    with pytest.raises(NotAnIdealError):
        quotient(affine2(Q), la.span([(1, 0)], 2, Q))


def test_quotient_of_family_by_a_line():
    t = heisenberg3(Q)
    quo, proj = quotient(t, center(t))
    assert quo == mk_abelian(2, Q)
    assert validate(quo)
    t = affine2(Q)
    quo, _ = quotient(t, la.zero_subspace(2, Q))
    assert quo == t


def test_subalgebra_tensor():
    t = hyperbolic3(Q)
    assert subalgebra_tensor(t, commutator(t)) == mk_abelian(2, Q)
    with pytest.raises(LieError):
        subalgebra_tensor(family(1, 1, Q), la.span([(1, 0, 0), (0, 1, 0)], 3, Q))


def test_solvable_by_extension_examples():
    t = hyperbolic3(Q)
    assert solvable_by_extension(t, commutator(t)) and is_solvable(t)
    c = cross_product_algebra(Q)
    assert not solvable_by_extension(c, la.zero_subspace(3, Q))
    k3 = mk_abelian(3, Q)
    for s in ([], [(1, 0, 0)], [(1, 1, 0), (0, 0, 1)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]):
        assert solvable_by_extension(k3, la.span(s, 3, Q))
    with pytest.raises(NotAnIdealError):
        solvable_by_extension(affine2(Q), la.span([(1, 0)], 2, Q))


def test_witness_check_examples():
    t = heisenberg3(Q)
    assert witness_check(IsoWitness(t, t, la.identity(3, Q)))
    p = la.as_matrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]], Q)
    assert witness_check(IsoWitness(change_of_basis(t, p), t, p))
    rng = random.Random(2)
    for _ in range(10):
        assert not witness_check(IsoWitness(affine2(Q), mk_abelian(2, Q), random_invertible(2, Q, rng)))
    assert not witness_check(IsoWitness(t, t, la.zeros(3, 3, Q)))


@pytest.mark.parametrize("f", ALL_FIELDS, ids=str)
def test_invariants_under_conjugation(f):
    for label in catalog_labels(f):
        t = representative(label)
        dims = derived_dims(t)
        assert dims == brute_derived_dims(t)
        assert all(a >= b for a, b in zip(dims, dims[1:])) and len(dims) <= t.dim + 1
        for seed in range(3):
            u, p = random_conjugate(t, seed)
            assert validate(u)
            w = IsoWitness(u, t, p)
            assert witness_check(w)
            assert commutator(u).dim == commutator(t).dim
            assert center(u).dim == center(t).dim
            assert derived_dims(u) == dims


@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_nonzero_bracket_implies_independent(xs):
    x, y = v(*xs[:3]), v(*xs[3:])
    for t in (heisenberg3(Q), family(-1, 2, Q), cross_product_algebra(Q)):
        if any(bracket(t, x, y)):
            assert la.rank((x, y)) == 2
