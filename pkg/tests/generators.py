"""Random valid inputs shared by the catalog and acceptance tests."""

import random

from solvlie import exactlin as la
from solvlie.catalog import DerivationAction, affine2, family, heisenberg3, hyperbolic3, mk_abelian
from solvlie.liecore import StructureTensor
from solvlie.oracle import random_invertible


def derivation_basis(j: StructureTensor):
    """Basis of Der(j) from the linear Leibniz constraints on the n^2 entries of D."""
    n, f = j.dim, j.field
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            for k in range(n):
                row = [f.zero] * (n * n)
                for m in range(n):
                    row[k * n + m] += j.c[a][b][m]
                    # [D e_a, e_b]_k = sum_m D[m][a] c[m][b][k]
                    row[m * n + a] -= j.c[m][b][k]
                    row[m * n + b] -= j.c[a][m][k]
                rows.append(tuple(row))
    ker = la.kernel(tuple(rows), n * n, f) if rows else [la.unit_vector(n * n, i, f) for i in range(n * n)]
    return [tuple(tuple(v[r * n + s] for s in range(n)) for r in range(n)) for v in ker]


def random_actions(f, count, seed=0):
    """Valid derivation actions from a few templates, randomized."""
    rng = random.Random(seed)
    k = mk_abelian(1, f)
    out = []
    while len(out) < count:
        choice = len(out) % 3
        if choice == 0:
            j = [mk_abelian(2, f), mk_abelian(3, f), heisenberg3(f), hyperbolic3(f), family(f(1), f(1), f)][rng.randrange(5)]
            basis = derivation_basis(j)
            d = la.zeros(j.dim, j.dim, f)
            for b in basis:
                c = rng.randint(-2, 2)
                d = tuple(tuple(x + c * y for x, y in zip(r, s)) for r, s in zip(d, b))
            out.append(DerivationAction(k, j, (d,)))
        elif choice == 1:
            # aff(K) acting on K^2 by phi0 = diag(1, 0), phi1 = E_01, conjugated
            q = random_invertible(2, f, rng)
            qi = la.inverse(q, f)
            phis = [la.as_matrix([[1, 0], [0, 0]], f), la.as_matrix([[0, 1], [0, 0]], f)]
            out.append(DerivationAction(affine2(f), mk_abelian(2, f), tuple(la.matmul(la.matmul(q, p), qi) for p in phis)))
        else:
            # abelian K^2 acting by two commuting maps (multiples of one matrix)
            m = la.as_matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)], f)
            c = f(rng.randint(-2, 2))
            out.append(DerivationAction(mk_abelian(2, f), mk_abelian(2, f), (m, tuple(tuple(c * x for x in r) for r in m))))
    return out
