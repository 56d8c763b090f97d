"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
Every comparison is exact.
"""

import contextlib
import io
import random
import re
import sys
import tempfile
from pathlib import Path

import pytest

from solvlie import exactlin as la
from solvlie.catalog import (
    ABELIAN,
    AFFINE2,
    AFFINE_PLUS_ABELIAN3,
    FAMILY_BETA0,
    FAMILY_BETA1,
    FAMILY_KINDS,
    HEISENBERG3,
    HYPERBOLIC3,
    DerivationAction,
    affine2,
    almost_abelian_check,
    catalog_labels,
    codim1_split,
    cross_product_algebra,
    family,
    heisenberg3,
    hyperbolic3,
    mk_abelian,
    representative,
    semidirect,
)
from solvlie.classify import classify, iso_decide, params_equivalent
from solvlie.frontend import cli
from solvlie.frontend.presentation import parse_presentation, presentation_of, render, to_tensor
from solvlie.liecore import (
    StructureTensor,
    ad,
    commutator,
    derived_dims,
    is_ideal,
    is_solvable,
    is_subalgebra,
    restrict,
    solvable_by_extension,
    validate,
    witness_check,
)
from solvlie.oracle import _gl_chunks, brute_force_iso, gl_order, random_conjugate, sweep
from solvlie.scalars import FieldSpec

from generators import random_actions
from oracles import brute_derived_dims, jacobi_failures

Q = FieldSpec.rationals()
F2, F3, F5, F7 = (FieldSpec.prime(p) for p in (2, 3, 5, 7))
FIELDS = [Q, F2, F3, F5, F7]
DATA = Path(__file__).parent / "data"

CRITERIA = {}


def criterion(number, title):
    def register(fn):
        CRITERIA[number] = (title, fn)
        return fn

    return register


def cli_run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main([str(a) for a in argv])
    return code, out.getvalue(), err.getvalue()


def block_sum(t1, t2):
    """Direct sum built straight from the two bracket tables."""
    f, m, n = t1.field, t1.dim, t2.dim
    br = {(i, j): v + (f.zero,) * n for (i, j), v in t1.nonzero_brackets().items()}
    br.update({(m + i, m + j): (f.zero,) * m + v for (i, j), v in t2.nonzero_brackets().items()})
    return StructureTensor.from_brackets(f, m + n, br)


def is_abelian_ideal(t, s):
    return is_ideal(t, s) and all(not any(t.bracket(u, v)) for u in s.basis for v in s.basis)


@criterion(1, "axioms of every representative")
def check_axioms():
    count = 0
    for f in FIELDS:
        labels = catalog_labels(f)
        fam = [l for l in labels if l.kind in FAMILY_KINDS]
        expected = 2 * (f.modulus - 1) if f.modulus else 12
        assert len(fam) == expected, f"{f}: {len(fam)} family labels"
        for label in labels:
            t = representative(label)
            assert validate(t), f"{label} over {f}: {validate(t).violation}"
            assert not jacobi_failures(t), f"{label} over {f}"
            count += 1
    return f"{count} representatives valid"


@criterion(2, "classification of 200 conjugates per representative")
def check_round_trip():
    count = 0
    for f in FIELDS:
        for idx, label in enumerate(catalog_labels(f)):
            rep = representative(label)
            samples = [rep] + [random_conjugate(rep, 1000 * idx + s)[0] for s in range(200)]
            for t in samples:
                res = classify(t)
                got = res.label
                assert got.same_class(label), f"{label} over {f} classified as {got}"
                if label.kind in FAMILY_KINDS:
                    assert params_equivalent(got.alpha, got.beta, label.alpha, label.beta, f) is not None
                w = res.witness
                assert w.source == t and w.target == representative(got)
                assert witness_check(w), f"bad witness for {label} over {f}"
                count += 1
    return f"{count} classifications, all witnesses verified"


@criterion(3, "iso_decide agrees with exhaustive search over F2 and F3")
def check_sweep():
    assert (gl_order(3, 2), gl_order(3, 3)) == (168, 11232)
    assert sum(len(c) for c in _gl_chunks(3, 3, 3**9)) == 11232
    pairs = 0
    for p in (2, 3):
        rows = {(str(a), str(b)): (br, d) for a, b, br, d in sweep(p)}
        for (a, b), (br, d) in rows.items():
            assert (br is None) == (d is None), f"F{p}: {a} vs {b}"
            if d is not None:
                assert witness_check(d)
        assert rows[(HEISENBERG3, AFFINE_PLUS_ABELIAN3)][0] is None
        for (a, b), (br, _) in rows.items():
            if a == HYPERBOLIC3 and b.startswith("Family"):
                assert br is None, f"F{p}: hyp3 vs {b}"
        pairs += len(rows)
    return f"{pairs} ordered pairs agree"


@criterion(4, "family parameter rule over F5")
def check_iso_iff():
    w = iso_decide(family(2, 0, F5), family(3, 0, F5))
    assert w is not None and witness_check(w)
    gamma = w.matrix[0][0]
    assert gamma == 2 and w.matrix == la.as_matrix([[2, 0, 0], [0, 1, 0], [0, 0, 2]], F5)
    assert iso_decide(family(1, 0, F5), family(2, 0, F5)) is None

    with tempfile.TemporaryDirectory() as tmp:
        a, b = Path(tmp) / "a.lie", Path(tmp) / "b.lie"
        a.write_text("field F 5\ndim 3\n[b0,b1] = b2\n[b0,b2] = 2*b1 + b2\n")
        b.write_text("field F 5\ndim 3\n[b0,b1] = b2\n[b0,b2] = 3*b1 + b2\n")
        code, out, _ = cli_run("iso", a, b, "--oracle")
    assert code == cli.NEGATIVE, out
    assert out.splitlines()[-1] == "oracle: not isomorphic"
    assert brute_force_iso(family(2, 1, F5), family(3, 1, F5), budget=5**9) is None
    l2, l3 = classify(family(2, 1, F5)).label, classify(family(3, 1, F5)).label
    assert l2.canonical_param != l3.canonical_param
    return "gamma = 2; Family(2,1) and Family(3,1) distinct by brute force and by canonical_param"


@criterion(5, "trace and determinant of ad(e0) on the commutator")
def check_trace_det():
    count = 0
    for f in FIELDS:
        rng = random.Random(f.characteristic)
        for _ in range(20):
            if f.is_rational:
                alpha = f(rng.choice([-1, 1]) * rng.randint(1, 9)) / rng.randint(1, 5)
                beta = f(rng.randint(-9, 9)) / rng.randint(1, 5)
            else:
                alpha = f(rng.randrange(1, f.modulus))
                beta = f(rng.randrange(f.modulus))
            t = family(alpha, beta, f)
            a = restrict(ad(t, t.basis_vector(0)), commutator(t))
            assert a is not None
            assert la.trace(a) == beta and la.det2(a) == -alpha, f"({alpha},{beta}) over {f}"
            count += 1
    return f"{count} samples exact"


PROFILES = {
    (ABELIAN, 1): [1, 0],
    (ABELIAN, 2): [2, 0],
    (AFFINE2, 2): [2, 1, 0],
    (ABELIAN, 3): [3, 0],
    (HEISENBERG3, 3): [3, 1, 0],
    (AFFINE_PLUS_ABELIAN3, 3): [3, 1, 0],
    (HYPERBOLIC3, 3): [3, 2, 0],
    (FAMILY_BETA0, 3): [3, 2, 0],
    (FAMILY_BETA1, 3): [3, 2, 0],
}


@criterion(6, "derived series profiles and the non-solvable cross product")
def check_series():
    count = 0
    for f in FIELDS:
        for label in catalog_labels(f):
            t = representative(label)
            assert derived_dims(t) == PROFILES[(label.kind, label.dim)] == brute_derived_dims(t), f"{label} over {f}"
            count += 1
    for f in (Q, F5):
        t = cross_product_algebra(f)
        assert not is_solvable(t)
        assert classify(t).label is None
        code, out, _ = _classify_cli(t)
        assert code == cli.NEGATIVE and out == "NotSolvable\n"
    return f"{count} profiles match; cross product NotSolvable over Q and F5"


def _classify_cli(t):
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "t.lie"
        path.write_text(render(presentation_of(t)))
        return cli_run("classify", path)


@criterion(7, "semidirect product laws")
def check_semidirect():
    count = 0
    for f in FIELDS:
        small = [mk_abelian(1, f), mk_abelian(2, f), affine2(f), heisenberg3(f), hyperbolic3(f)]
        for l in small:
            for j in small:
                if l.dim + j.dim > 5:
                    continue
                zero = la.zeros(j.dim, j.dim, f)
                assert semidirect(DerivationAction(l, j, (zero,) * l.dim)) == block_sum(l, j)
                count += 1
        ident = DerivationAction(mk_abelian(1, f), mk_abelian(2, f), (la.identity(2, f),))
        assert semidirect(ident) == hyperbolic3(f)

        kinds = set()
        for idx, label in enumerate(l for l in catalog_labels(f) if l.dim == 3):
            rep = representative(label)
            for t in [rep] + [random_conjugate(rep, 7 * idx + s)[0] for s in range(3)]:
                ideal = almost_abelian_check(t)
                assert ideal is not None, f"{label} over {f}"
                act, w = codim1_split(t, ideal)
                sd = semidirect(act)
                assert w.source == t and w.target == sd and witness_check(w)
                assert classify(sd).label.same_class(label)
                count += 1
            kinds.add(label.kind)
        assert len(kinds) == 6

        m_actions = random_actions(f, 50, seed=f.characteristic + 11)
        for act in m_actions:
            t = semidirect(act)
            m, n = act.domain.dim, act.target.dim
            assert validate(t)
            j_block = la.span([la.unit_vector(m + n, m + i, f) for i in range(n)], m + n, f)
            l_block = la.span([la.unit_vector(m + n, i, f) for i in range(m)], m + n, f)
            assert is_ideal(t, j_block) and is_subalgebra(t, l_block)
            count += 1
    return f"{count} checks"


@criterion(8, "almost abelian ideals")
def check_almost_abelian():
    count = 0
    for f in FIELDS:
        for idx, label in enumerate(catalog_labels(f)):
            rep = representative(label)
            for t in [rep] + [random_conjugate(rep, 31 * idx + s)[0] for s in range(10)]:
                s = almost_abelian_check(t)
                assert s is not None, f"{label} over {f}"
                assert s.dim == t.dim - 1 and is_abelian_ideal(t, s)
                count += 1
    assert almost_abelian_check(cross_product_algebra(F5)) is None
    return f"{count} algebras have a codimension-one abelian ideal; none for the cross product over F5"


@criterion(9, "solvable by extension of the commutator")
def check_extension():
    rng = random.Random(9)
    pool = [(f, label) for f in FIELDS for label in catalog_labels(f)]
    for k in range(100):
        f, label = rng.choice(pool)
        t, _ = random_conjugate(representative(label), 5000 + k)
        assert solvable_by_extension(t, commutator(t)), f"{label} over {f}"
        assert is_solvable(t)
    return "100 conjugates, no counterexample"


@criterion(10, "frontend golden files, round trip and malformed input")
def check_frontend():
    classes = sorted((DATA / "classes").glob("*.lie"))
    corpus = sorted((DATA / "corpus").glob("*.lie"))
    malformed = sorted((DATA / "malformed").glob("*.lie"))
    assert len(classes) == 12 and len(corpus) == 30 and len(malformed) == 17
    for path in classes:
        code, out, _ = cli_run("classify", path, "--json")
        assert code == 0 and out == (DATA / "golden" / f"{path.stem}.json").read_text(), path.stem
    for path in corpus:
        text = path.read_text()
        p = parse_presentation(text)
        assert render(p) == text and parse_presentation(render(p)) == p, path.stem
        assert validate(to_tensor(p))
    for path in malformed:
        code, out, err = cli_run("verify", path)
        expected = path.read_text().splitlines()[0].removeprefix("# expect: ")
        assert code == cli.INPUT_ERROR and not out, path.stem
        if expected == "jacobi":
            assert "Jacobi fails on (0,1,2)" in err
        else:
            assert re.match(rf"error: {re.escape(str(path))}:{expected}: ", err), err
    return f"{len(classes)} golden, {len(corpus)} round trips, {len(malformed)} malformed inputs rejected"


def run_criterion(number):
    title, fn = CRITERIA[number]
    try:
        detail = fn()
    except AssertionError as e:
        return False, f"criterion {number} ({title}): FAIL {e}"
    return True, f"criterion {number} ({title}): PASS {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
