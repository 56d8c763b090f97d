"""Command line interface.

Exit codes: 0 success or isomorphic, 1 not isomorphic or not solvable,
2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .. import catalog as cat
from ..classify import InternalInvariantError, classify, iso_decide
from ..exactlin import LinAlgError
from ..liecore import LieError
from ..oracle import LARGE_BUDGET, brute_force_iso, sweep
from ..scalars import FieldSpec, ScalarError, format_scalar
from .presentation import ParseError, parse_matrices, parse_presentation, presentation_of, render, to_tensor
from .report import emit_result, invariants, witness_json

OK, NEGATIVE, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return to_tensor(parse_presentation(text))
    except ParseError as e:
        raise InputError(f"{path}:{e.line}:{e.col}: {e.message}") from None
    except LieError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_classify(args) -> int:
    t = _load(args.file)
    result = classify(t)
    if args.json:
        sys.stdout.write(emit_result(result, t))
    elif result.solvable:
        label = result.label
        line = str(label)
        if label.canonical_param is not None:
            line += f" canonical_param={format_scalar(label.canonical_param)}"
        print(line)
        for row in result.witness.matrix:
            print(" ".join(format_scalar(x) for x in row))
    else:
        print("NotSolvable")
    return OK if result.solvable else NEGATIVE


def cmd_verify(args) -> int:
    t = _load(args.file)
    print(f"ok: valid Lie algebra over {t.field}, dim {t.dim}")
    return OK


def cmd_invariants(args) -> int:
    t = _load(args.file)
    print(json.dumps(invariants(t)))
    return OK


def cmd_iso(args) -> int:
    t1, t2 = _load(args.file_a), _load(args.file_b)
    if t1.field != t2.field:
        raise InputError("the two algebras are over different fields")
    w = iso_decide(t1, t2)
    sys.stdout.write(witness_json(w))
    if args.oracle:
        if t1.field.is_rational:
            raise InputError("--oracle needs a prime field")
        b = brute_force_iso(t1, t2, budget=LARGE_BUDGET) if t1.dim == t2.dim else None
        print(f"oracle: {'isomorphic' if b is not None else 'not isomorphic'}")
        if (b is None) != (w is None):
            print("oracle disagrees with iso_decide", file=sys.stderr)
            return INTERNAL_ERROR
    return OK if w is not None else NEGATIVE


def cmd_oracle_sweep(args) -> int:
    disagreements = 0
    print("\t".join(["p", "source", "target", "brute_force", "iso_decide", "agree"]))
    for l1, l2, b, d in sweep(args.p):
        agree = (b is None) == (d is None)
        disagreements += not agree
        print("\t".join([str(args.p), str(l1), str(l2), str(b is not None), str(d is not None), str(agree)]))
    return INTERNAL_ERROR if disagreements else OK


def cmd_semidirect(args) -> int:
    l, j = _load(args.file_l), _load(args.file_j)
    try:
        phi = parse_matrices(Path(args.phi).read_text(), l.field)
    except ParseError as e:
        raise InputError(f"{args.phi}:{e.line}:{e.col}: {e.message}") from None
    except OSError as e:
        raise InputError(f"{args.phi}: {e.strerror}") from None
    try:
        t = cat.semidirect(cat.DerivationAction(l, j, tuple(phi)))
    except LieError as e:
        raise InputError(str(e)) from None
    sys.stdout.write(render(presentation_of(t)))
    return OK


_FIXED = {
    "Abelian1": lambda f: cat.mk_abelian(1, f),
    "Abelian2": lambda f: cat.mk_abelian(2, f),
    "Abelian3": lambda f: cat.mk_abelian(3, f),
    "Affine2": cat.affine2,
    "Heisenberg3": cat.heisenberg3,
    "AffinePlusAbelian3": cat.affine_plus_abelian3,
    "Hyperbolic3": cat.hyperbolic3,
    "CrossProduct": cat.cross_product_algebra,
}


def cmd_catalog(args) -> int:
    f = FieldSpec.parse(args.field)
    name = args.label
    if name in _FIXED:
        t = _FIXED[name](f)
    elif name in ("FamilyBeta0", "FamilyBeta1", "Family"):
        if args.alpha is None:
            raise InputError(f"{name} needs --alpha")
        beta = {"FamilyBeta0": "0", "FamilyBeta1": "1"}.get(name, args.beta)
        if beta is None:
            raise InputError("Family needs --beta")
        alpha = f(args.alpha)
        if not alpha:
            raise InputError("alpha must be nonzero")
        t = cat.family(alpha, f(beta), f)
    elif name in ("aff", "hyp"):
        t = (cat.aff_n if name == "aff" else cat.hyp_n)(args.n, f)
    else:
        raise InputError(f"unknown catalog label {name!r}")
    sys.stdout.write(render(presentation_of(t)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solvlie", description="Solvable Lie algebras of dimension <= 3.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="classify a .lie presentation")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", help="check the Lie algebra axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("invariants", help="commutator, center, derived series")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("iso", help="decide isomorphism of two presentations")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search over GL_n(F_p)")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("oracle-sweep", help="compare iso_decide with brute force on all catalog pairs")
    s.add_argument("--p", type=int, choices=[2, 3], required=True)
    s.set_defaults(func=cmd_oracle_sweep)

    s = sub.add_parser("semidirect", help="build L x| J from a derivation action")
    s.add_argument("file_l")
    s.add_argument("file_j")
    s.add_argument("--phi", required=True, help="matrix file: one block per generator of L")
    s.set_defaults(func=cmd_semidirect)

    s = sub.add_parser("catalog", help="print a catalog representative")
    s.add_argument("label")
    s.add_argument("--alpha")
    s.add_argument("--beta")
    s.add_argument("--n", type=int, default=2, help="size for aff / hyp")
    s.add_argument("--field", required=True, help="Q or F<p>")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except (LieError, ScalarError, LinAlgError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except InternalInvariantError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
