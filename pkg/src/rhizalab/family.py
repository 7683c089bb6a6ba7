"""Semigroup-indexed splittings, operator families, and the collapse to one space.

A finite semigroup is an explicit multiplication table over indices
0..size-1.  A family algebra carries one (succ, prec) pair per semigroup
element; the family identities couple the indices through the table.  With
the one-element table every checker and construction here agrees exactly
with its plain counterpart, and the tensor collapse turns an operator
family into a single operator on dim * size coordinates (basis ordered
algebra-index major: (i, lam) -> i * size + lam).

Family report identity ids reuse the plain ones (``req1``/``req2``/``req3``,
``mult_succ``/``mult_prec``, ``anti_assoc``, ``equivariance``,
``rb_identity``); violation basis tuples are prefixed with the semigroup
indices involved, e.g. (lam, omega, i, j, k) with lam/omega 0-based and
basis indices 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algmodel import BilinearOp, HomAlgebra, LinearMap, eval_product
from .axioms import CheckReport, Violation, check_multiplicativity
from .errors import DimensionMismatch, NotARotaBaxterOperator
from .exactlin import Matrix, basis_vec, vec_add, vec_is_zero, vec_sub
from .operators import LinearOperator


@dataclass(frozen=True)
class Semigroup:
    """Finite magma table; table[lam][omega] is the product index lam.omega."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.table) != self.size or any(len(r) != self.size for r in self.table):
            raise DimensionMismatch("table must be size x size")
        for row in self.table:
            for v in row:
                if not (0 <= v < self.size):
                    raise DimensionMismatch(f"table value {v} outside 0..{self.size - 1}")

    @classmethod
    def from_rows(cls, rows) -> Semigroup:
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        return cls(len(rows), rows)

    @classmethod
    def trivial(cls) -> Semigroup:
        return cls(1, ((0,),))

    @classmethod
    def cyclic(cls, n: int) -> Semigroup:
        return cls(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))

    def mul(self, lam: int, omega: int) -> int:
        return self.table[lam][omega]


def check_semigroup(s: Semigroup) -> CheckReport:
    """Associativity of the table over all index triples."""
    violations = []
    for a in range(s.size):
        for b in range(s.size):
            ab = s.mul(a, b)
            for c in range(s.size):
                if s.mul(ab, c) != s.mul(a, s.mul(b, c)):
                    violations.append(Violation("assoc", (a, b, c), ()))
    return CheckReport.collect("semigroup", violations)


@dataclass(frozen=True)
class FamilyAlgebra:
    """One (succ, prec) pair per semigroup element, sharing a twist map."""

    dim: int
    semigroup: Semigroup
    succ: dict[int, BilinearOp]
    prec: dict[int, BilinearOp]
    alpha: LinearMap
    params: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        keys = set(range(self.semigroup.size))
        if set(self.succ) != keys or set(self.prec) != keys:
            raise DimensionMismatch("need one succ and one prec per semigroup element")
        for op in (*self.succ.values(), *self.prec.values()):
            if op.dim != self.dim:
                raise DimensionMismatch("family product dimension differs from the algebra")
        if self.alpha.dim != self.dim:
            raise DimensionMismatch("twist map dimension differs from the algebra")

    @classmethod
    def from_plain(cls, a: HomAlgebra, semigroup: Semigroup | None = None) -> FamilyAlgebra:
        """Constant family: the same split pair at every index."""
        semigroup = semigroup or Semigroup.trivial()
        return cls(
            a.dim,
            semigroup,
            {lam: a.succ for lam in range(semigroup.size)},
            {lam: a.prec for lam in range(semigroup.size)},
            a.alpha,
            dict(a.params),
        )

    def plain(self, lam: int = 0) -> HomAlgebra:
        return HomAlgebra.rhizaform(self.succ[lam], self.prec[lam], self.alpha, self.params)


@dataclass(frozen=True)
class RBFamily:
    """One weight-zero averaging operator per semigroup element."""

    semigroup: Semigroup
    operators: dict[int, LinearOperator]

    def __post_init__(self):
        if set(self.operators) != set(range(self.semigroup.size)):
            raise DimensionMismatch("need one operator per semigroup element")
        dims = {(t.source_dim, t.target_dim) for t in self.operators.values()}
        if len(dims) > 1 or any(s != t for s, t in dims):
            raise DimensionMismatch("family operators must be square and equal-dimensional")

    @property
    def dim(self) -> int:
        return next(iter(self.operators.values())).source_dim


def check_rhizaform_family(f: FamilyAlgebra) -> CheckReport:
    """The three index-coupled split identities plus twist compatibility."""
    n = f.dim
    alpha = f.alpha
    s = f.semigroup
    violations = []
    for lam in range(s.size):
        for omega in range(s.size):
            lo = s.mul(lam, omega)
            succ_l, succ_o, succ_lo = f.succ[lam], f.succ[omega], f.succ[lo]
            prec_l, prec_o, prec_lo = f.prec[lam], f.prec[omega], f.prec[lo]
            for i in range(n):
                ai = alpha.image_of_basis(i)
                for j in range(n):
                    for k in range(n):
                        ak = alpha.image_of_basis(k)
                        where = (lam, omega, i + 1, j + 1, k + 1)
                        # (x prec_lam y) prec_omega alpha(z)
                        #   = -alpha(x) prec_{lam.omega} (y prec_omega z + y succ_lam z)
                        r2 = vec_add(
                            eval_product(prec_o, prec_l.entry(i, j), ak),
                            eval_product(
                                prec_lo,
                                ai,
                                vec_add(prec_o.entry(j, k), succ_l.entry(j, k)),
                            ),
                        )
                        if not vec_is_zero(r2):
                            violations.append(Violation("req2", where, r2))
                        # (x succ_lam y) prec_omega alpha(z) = -alpha(x) succ_lam (y prec_omega z)
                        r3 = vec_add(
                            eval_product(prec_o, succ_l.entry(i, j), ak),
                            eval_product(succ_l, ai, prec_o.entry(j, k)),
                        )
                        if not vec_is_zero(r3):
                            violations.append(Violation("req3", where, r3))
                        # (x prec_omega y + x succ_lam y) succ_{lam.omega} alpha(z)
                        #   = -alpha(x) succ_lam (y succ_omega z)
                        r1 = vec_add(
                            eval_product(
                                succ_lo,
                                vec_add(prec_o.entry(i, j), succ_l.entry(i, j)),
                                ak,
                            ),
                            eval_product(succ_l, ai, succ_o.entry(j, k)),
                        )
                        if not vec_is_zero(r1):
                            violations.append(Violation("req1", where, r1))
    for lam in range(s.size):
        for name, ops in (("succ", f.succ), ("prec", f.prec)):
            rep = check_multiplicativity(ops[lam], alpha, name=f"mult_{name}")
            for v in rep.violations:
                violations.append(Violation(v.identity_id, (lam, *v.basis_tuple), v.residual))
    return CheckReport.collect("rhizaform_family", violations)


def check_anti_associative_family(
    products: dict[tuple[int, int], BilinearOp], alpha: LinearMap, semigroup: Semigroup
) -> CheckReport:
    """(x *_{lam,omega} y) *_{lam.omega,gam} alpha(z) = -alpha(x) *_{lam,omega.gam} (y *_{omega,gam} z)."""
    pairs = {(lam, omega) for lam in range(semigroup.size) for omega in range(semigroup.size)}
    if set(products) != pairs:
        raise DimensionMismatch("need one product per semigroup index pair")
    n = alpha.dim
    violations = []
    for lam in range(semigroup.size):
        for omega in range(semigroup.size):
            for gam in range(semigroup.size):
                outer = products[(semigroup.mul(lam, omega), gam)]
                inner = products[(omega, gam)]
                mixed = products[(lam, semigroup.mul(omega, gam))]
                first = products[(lam, omega)]
                for i in range(n):
                    ai = alpha.image_of_basis(i)
                    for j in range(n):
                        for k in range(n):
                            resid = vec_add(
                                eval_product(outer, first.entry(i, j), alpha.image_of_basis(k)),
                                eval_product(mixed, ai, inner.entry(j, k)),
                            )
                            if not vec_is_zero(resid):
                                violations.append(
                                    Violation(
                                        "anti_assoc",
                                        (lam, omega, gam, i + 1, j + 1, k + 1),
                                        resid,
                                    )
                                )
    return CheckReport.collect("anti_associative_family", violations)


def associated_family(f: FamilyAlgebra) -> dict[tuple[int, int], BilinearOp]:
    """x *_{lam,omega} y = x prec_omega y + x succ_lam y."""
    out = {}
    for lam in range(f.semigroup.size):
        for omega in range(f.semigroup.size):
            out[(lam, omega)] = f.prec[omega].add(f.succ[lam])
    return out


def check_rb_family(rf: RBFamily, a: HomAlgebra) -> CheckReport:
    """R_lam(x) * R_omega(y) = R_{lam.omega}(R_lam(x) * y + x * R_omega(y)), each R twist-equivariant."""
    mul = a.mul
    if rf.dim != a.dim:
        raise DimensionMismatch("family operators do not act on the algebra")
    n = a.dim
    s = rf.semigroup
    violations = []
    for lam in range(s.size):
        inter = rf.operators[lam].matrix.times(a.alpha.matrix).sub(
            a.alpha.matrix.times(rf.operators[lam].matrix)
        )
        for i in range(n):
            resid = inter.column(i)
            if not vec_is_zero(resid):
                violations.append(Violation("equivariance", (lam, i + 1), resid))
    for lam in range(s.size):
        r_lam = rf.operators[lam]
        for omega in range(s.size):
            r_omega = rf.operators[omega]
            r_lo = rf.operators[s.mul(lam, omega)]
            for i in range(n):
                ri = r_lam.apply(basis_vec(n, i))
                for j in range(n):
                    rj = r_omega.apply(basis_vec(n, j))
                    lhs = eval_product(mul, ri, rj)
                    inner = vec_add(
                        eval_product(mul, ri, basis_vec(n, j)),
                        eval_product(mul, basis_vec(n, i), rj),
                    )
                    resid = vec_sub(lhs, r_lo.apply(inner))
                    if not vec_is_zero(resid):
                        violations.append(Violation("rb_identity", (lam, omega, i + 1, j + 1), resid))
    return CheckReport.collect("rb_family", violations)


def induced_family_rhizaform(rf: RBFamily, a: HomAlgebra, strict: bool = True) -> FamilyAlgebra:
    """x succ_lam y = R_lam(x) * y and x prec_lam y = x * R_lam(y)."""
    if strict:
        rep = check_rb_family(rf, a)
        if not rep.passed:
            raise NotARotaBaxterOperator(f"family fails {rep.failed_ids()}")
    mul = a.mul
    n = a.dim
    succ = {}
    prec = {}
    for lam in range(rf.semigroup.size):
        r = rf.operators[lam]
        succ_entries = []
        prec_entries = []
        for i in range(n):
            ri = r.apply(basis_vec(n, i))
            for j in range(n):
                sv = eval_product(mul, ri, basis_vec(n, j))
                pv = eval_product(mul, basis_vec(n, j), ri)
                for k in range(n):
                    if sv[k]:
                        succ_entries.append((i, j, k, sv[k]))
                    if pv[k]:
                        prec_entries.append((j, i, k, pv[k]))
        succ[lam] = BilinearOp.from_entries(n, succ_entries)
        prec[lam] = BilinearOp.from_entries(n, prec_entries)
    return FamilyAlgebra(n, rf.semigroup, succ, prec, a.alpha, dict(a.params))


def tensor_collapse(a: HomAlgebra, rf: RBFamily) -> tuple[HomAlgebra, LinearOperator]:
    """One algebra on dim * size coordinates plus the stacked operator.

    Basis (i, lam) maps to index i * size + lam; the product multiplies
    algebra parts and semigroup labels independently, the twist acts on the
    algebra part only, and the operator applies R_lam on the lam slice.
    """
    mul = a.mul
    if rf.dim != a.dim:
        raise DimensionMismatch("family operators do not act on the algebra")
    n = a.dim
    s = rf.semigroup.size
    big = n * s

    def flat(i: int, lam: int) -> int:
        return i * s + lam

    entries = []
    for i in range(n):
        for j in range(n):
            prod = mul.entry(i, j)
            for lam in range(s):
                for mu in range(s):
                    lm = rf.semigroup.mul(lam, mu)
                    for k in range(n):
                        if prod[k]:
                            entries.append((flat(i, lam), flat(j, mu), flat(k, lm), prod[k]))
    big_mul = BilinearOp.from_entries(big, entries)

    alpha_rows = [[Fraction(0)] * big for _ in range(big)]
    for i in range(n):
        for k in range(n):
            c = a.alpha.matrix.at(k, i)
            if c:
                for lam in range(s):
                    alpha_rows[flat(k, lam)][flat(i, lam)] = c
    big_alpha = LinearMap(big, Matrix.from_rows(alpha_rows))

    r_rows = [[Fraction(0)] * big for _ in range(big)]
    for lam in range(s):
        r = rf.operators[lam].matrix
        for i in range(n):
            for k in range(n):
                c = r.at(k, i)
                if c:
                    r_rows[flat(k, lam)][flat(i, lam)] = c
    big_r = LinearOperator.from_rows(r_rows)

    return HomAlgebra.mono(big_mul, big_alpha, dict(a.params)), big_r
