"""Shared fixtures: deterministic random structures and small searched examples."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from rhizalab.algmodel import BilinearOp, HomAlgebra, LinearMap, sum_product
from rhizalab.axioms import check_hom_anti_associative
from rhizalab.catalog import entry_ids, load_entry
from rhizalab.cocycles import ScalarForm, is_nondegenerate
from rhizalab.exactlin import Matrix
from rhizalab.operators import LinearOperator, check_rota_baxter

F = Fraction
SMALL = (F(-1), F(0), F(1))
ETA_DEFAULT = {"eta": F(1)}


def random_tensor(rng: random.Random, n: int) -> BilinearOp:
    return BilinearOp(
        n, [[[rng.choice(SMALL) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    )


def random_map(rng: random.Random, n: int, identity_bias: float = 0.2) -> LinearMap:
    if rng.random() < identity_bias:
        return LinearMap.identity(n)
    return LinearMap.from_rows([[rng.choice(SMALL) for _ in range(n)] for _ in range(n)])


def random_split_algebra(rng: random.Random, n: int) -> HomAlgebra:
    return HomAlgebra.rhizaform(random_tensor(rng, n), random_tensor(rng, n), random_map(rng, n))


def catalog_algebras(params=None) -> list[tuple[str, HomAlgebra]]:
    params = ETA_DEFAULT if params is None else params
    return [(eid, load_entry(eid, params)) for eid in entry_ids()]


def catalog_sums(params=None) -> list[tuple[str, HomAlgebra]]:
    """Mono algebras carrying the summed product of every entry."""
    return [
        (eid, HomAlgebra.mono(sum_product(a), a.alpha)) for eid, a in catalog_algebras(params)
    ]


def anti_associative_sums(params=None) -> list[tuple[str, HomAlgebra]]:
    return [
        (eid, s)
        for eid, s in catalog_sums(params)
        if check_hom_anti_associative(s.mul, s.alpha).passed
    ]


def rhizaform_passing_entries(params=None) -> list[tuple[str, HomAlgebra]]:
    from rhizalab.axioms import check_rhizaform

    return [(eid, a) for eid, a in catalog_algebras(params) if check_rhizaform(a).passed]


GRID_VALUES = (F(-1), F(-1, 2), F(0), F(1, 2), F(1))


def rb_grid(algebra: HomAlgebra, values=GRID_VALUES) -> list[LinearOperator]:
    """All 2x2 operators over the value grid passing the averaging identity."""
    assert algebra.dim == 2
    found = []
    for e in itertools.product(values, repeat=4):
        op = LinearOperator.from_rows([[e[0], e[1]], [e[2], e[3]]])
        if check_rota_baxter(op, algebra).passed:
            found.append(op)
    return found


def z2_rb_family_fixture(algebra: HomAlgebra, values=SMALL):
    """All Z/2-indexed operator families over a small grid passing the
    coupled averaging identity on a 2-dim algebra."""
    from rhizalab.family import RBFamily, Semigroup, check_rb_family

    z2 = Semigroup.cyclic(2)
    mats = [
        LinearOperator.from_rows([[e[0], e[1]], [e[2], e[3]]])
        for e in itertools.product(values, repeat=4)
    ]
    singles = [m for m in mats if check_rota_baxter(m, algebra).passed]
    found = []
    for r0 in singles:
        for r1 in mats:
            rf = RBFamily(z2, {0: r0, 1: r1})
            if check_rb_family(rf, algebra).passed:
                found.append(rf)
    return found


def plain_family_identities_hold(f) -> bool:
    """Untwisted family axioms, evaluated from scratch (no twist map anywhere)."""
    from rhizalab.algmodel import eval_product
    from rhizalab.exactlin import basis_vec, vec_add, vec_is_zero

    n = f.dim
    s = f.semigroup
    es = [basis_vec(n, i) for i in range(n)]
    for lam in range(s.size):
        for om in range(s.size):
            lo = s.mul(lam, om)
            for x in es:
                for y in es:
                    for z in es:
                        pl = eval_product(f.prec[lam], x, y)
                        sl = eval_product(f.succ[lam], x, y)
                        inner_mix = vec_add(
                            eval_product(f.prec[om], y, z), eval_product(f.succ[lam], y, z)
                        )
                        r2 = vec_add(
                            eval_product(f.prec[om], pl, z),
                            eval_product(f.prec[lo], x, inner_mix),
                        )
                        r3 = vec_add(
                            eval_product(f.prec[om], sl, z),
                            eval_product(f.succ[lam], x, eval_product(f.prec[om], y, z)),
                        )
                        first = vec_add(eval_product(f.prec[om], x, y), sl)
                        r1 = vec_add(
                            eval_product(f.succ[lo], first, z),
                            eval_product(f.succ[lam], x, eval_product(f.succ[om], y, z)),
                        )
                        if not (vec_is_zero(r1) and vec_is_zero(r2) and vec_is_zero(r3)):
                            return False
    return True


def skew_subspace(space: list[ScalarForm], dim: int) -> list[ScalarForm]:
    """Basis of the antisymmetric part of a solved form space."""
    if not space:
        return []
    rows = []
    for p in range(dim):
        for q in range(p, dim):
            rows.append([b.matrix.at(p, q) + b.matrix.at(q, p) for b in space])
    from rhizalab.exactlin import nullspace_basis

    out = []
    for y in nullspace_basis(Matrix.from_rows(rows)):
        m = Matrix.zero(dim, dim)
        for c, b in zip(y, space):
            m = m.add(b.matrix.scale(c))
        out.append(ScalarForm(dim, m))
    return out


def nondegenerate_in_span(space: list[ScalarForm], dim: int) -> ScalarForm | None:
    """Deterministic search for a nondegenerate form in a solution space."""
    if not space:
        return None
    for b in space:
        if is_nondegenerate(b):
            return b
    for b1, b2 in itertools.combinations(space, 2):
        cand = ScalarForm(dim, b1.matrix.add(b2.matrix))
        if is_nondegenerate(cand):
            return cand
    for coeffs in itertools.product((F(-1), F(1), F(2)), repeat=len(space)):
        m = Matrix.zero(dim, dim)
        for c, b in zip(coeffs, space):
            m = m.add(b.matrix.scale(c))
        cand = ScalarForm(dim, m)
        if is_nondegenerate(cand):
            return cand
    return None


@pytest.fixture(scope="session")
def a_d2_a1() -> HomAlgebra:
    return load_entry("d2.A1")


@pytest.fixture(scope="session")
def a_d2_a7() -> HomAlgebra:
    return load_entry("d2.A7")


def zero_product_mono(n: int, alpha: LinearMap | None = None) -> HomAlgebra:
    return HomAlgebra.mono(BilinearOp.zero(n), alpha or LinearMap.identity(n))


def antisym_3dim() -> HomAlgebra:
    """e1*e2 = e3, e2*e1 = -e3, identity twist; anti-associative, odd dimension."""
    return HomAlgebra.mono(
        BilinearOp.from_entries(3, [(0, 1, 2, F(1)), (1, 0, 2, F(-1))]),
        LinearMap.identity(3),
    )


def skew_4dim() -> HomAlgebra:
    """e1*e2 = e4, e2*e1 = -e4, identity twist; admits nondegenerate skew cocycles."""
    return HomAlgebra.mono(
        BilinearOp.from_entries(4, [(0, 1, 3, F(1)), (1, 0, 3, F(-1))]),
        LinearMap.identity(4),
    )


def triple_product_rhizaform() -> HomAlgebra:
    """succ: e1e1=e2, e1e2=e3, e2e1=-e3; prec zero; identity twist.

    Anti-associative single product with a nonzero triple product, so the
    signed split identities hold while the sign-free ones fail.
    """
    succ = BilinearOp.from_entries(
        3, [(0, 0, 1, F(1)), (0, 1, 2, F(1)), (1, 0, 2, F(-1))]
    )
    return HomAlgebra.rhizaform(succ, BilinearOp.zero(3), LinearMap.identity(3))


def negated_split_fixture(n: int = 2) -> HomAlgebra:
    """prec = -succ with a two-step product; splits sum to zero."""
    succ = BilinearOp.from_entries(n, [(0, 0, 1, F(1))])
    return HomAlgebra.rhizaform(succ, succ.neg(), LinearMap.identity(n))
