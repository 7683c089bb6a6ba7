"""Descending power series of split-product algebras and nilpotency verdicts.

Subspaces are canonical: the basis matrix is kept in reduced row echelon
form with zero rows dropped, so equality and containment are plain matrix
comparisons.  The diamond of two subspaces is the span of all products of
their basis vectors under every named product of the algebra.

Three series are computed:

* right:  S_1 = A,  S_{k+1} = S_k <> A
* left:   S_1 = A,  S_{k+1} = A <> S_k   (definitions of this series are
  sometimes written with the k+1 index repeated on the right, which cannot
  terminate; the k-th term is the coherent reading and is what is used)
* full:   S_1 = A,  S_{k+1} = sum over i+j = k+1 of S_i <> S_j

Each series is extended until it hits zero or repeats a term; the returned
list includes the first repeated term so stabilization is visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algmodel import HomAlgebra, LinearMap, eval_product
from .axioms import CheckReport, Violation, check_multiplicativity
from .errors import DimensionMismatch
from .exactlin import Matrix, Vector, rank, rref, vec_is_zero


@dataclass(frozen=True)
class Subspace:
    """Row space of a matrix in reduced echelon form with no zero rows."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> Subspace:
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length differs from ambient dimension")
        vectors = [v for v in vectors if not vec_is_zero(v)]
        if not vectors:
            return cls(ambient_dim, Matrix.zero(0, ambient_dim))
        reduced, rk = rref(Matrix.from_rows(vectors))
        return cls(ambient_dim, Matrix.from_rows([reduced.row(i) for i in range(rk)])
                   if rk else Matrix.zero(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.zero(0, ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.basis.rows == 0

    def vectors(self) -> list[Vector]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def add(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        return Subspace.from_vectors(self.ambient_dim, self.vectors() + other.vectors())

    def contains_vector(self, v: Vector) -> bool:
        if vec_is_zero(v):
            return True
        if self.is_zero():
            return False
        stacked = Matrix.from_rows(self.vectors() + [list(v)])
        return rank(stacked) == self.dim

    def contains(self, other: Subspace) -> bool:
        return all(self.contains_vector(v) for v in other.vectors())

    def image_under(self, f: LinearMap) -> Subspace:
        return Subspace.from_vectors(self.ambient_dim, [f.apply(v) for v in self.vectors()])


def diamond(m: Subspace, n: Subspace, a: HomAlgebra) -> Subspace:
    """Span of all products of basis vectors, over every named product."""
    if m.ambient_dim != a.dim or n.ambient_dim != a.dim:
        raise DimensionMismatch("subspace ambient dimension differs from the algebra")
    products = [a.products[name] for name in sorted(a.products)]
    out = []
    for u in m.vectors():
        for v in n.vectors():
            for op in products:
                w = eval_product(op, u, v)
                if not vec_is_zero(w):
                    out.append(w)
    return Subspace.from_vectors(a.dim, out)


def _extend(terms: list[Subspace], step) -> list[Subspace]:
    """Iterate ``step`` until zero or a repeat; cap at ambient + 2 as a safety net."""
    cap = terms[0].ambient_dim + 2
    while len(terms) < cap + 1:
        nxt = step(terms)
        terms.append(nxt)
        if nxt.is_zero() or nxt == terms[-2]:
            break
    return terms


def right_series(a: HomAlgebra) -> list[Subspace]:
    full = Subspace.full(a.dim)
    return _extend([full], lambda ts: diamond(ts[-1], full, a))


def left_series(a: HomAlgebra) -> list[Subspace]:
    full = Subspace.full(a.dim)
    return _extend([full], lambda ts: diamond(full, ts[-1], a))


def full_series(a: HomAlgebra) -> list[Subspace]:
    def step(ts: list[Subspace]) -> Subspace:
        k1 = len(ts) + 1  # computing the k1-th term, 1-based
        out = Subspace.zero(a.dim)
        for i in range(1, k1):
            out = out.add(diamond(ts[i - 1], ts[k1 - i - 1], a))
        return out

    return _extend([Subspace.full(a.dim)], step)


def series_term(a: HomAlgebra, kind: str, g: int) -> Subspace:
    """g-th term (1-based) of the named series, extending past stabilization."""
    if g < 1:
        raise ValueError("series terms are 1-based")
    full = Subspace.full(a.dim)
    if kind == "right":
        t = full
        for _ in range(g - 1):
            t = diamond(t, full, a)
        return t
    if kind == "left":
        t = full
        for _ in range(g - 1):
            t = diamond(full, t, a)
        return t
    if kind == "full":
        terms = [full]
        while len(terms) < g:
            k1 = len(terms) + 1
            nxt = Subspace.zero(a.dim)
            for i in range(1, k1):
                nxt = nxt.add(diamond(terms[i - 1], terms[k1 - i - 1], a))
            terms.append(nxt)
        return terms[g - 1]
    raise ValueError(f"unknown series kind {kind!r}")


class NilpotencyVerdict(NamedTuple):
    nilpotent: bool
    index: int | None


def _verdict(series: list[Subspace]) -> NilpotencyVerdict:
    for g, term in enumerate(series, start=1):
        if term.is_zero():
            return NilpotencyVerdict(True, g)
    return NilpotencyVerdict(False, None)


def is_nilpotent(a: HomAlgebra) -> NilpotencyVerdict:
    return _verdict(full_series(a))


def is_right_nilpotent(a: HomAlgebra) -> NilpotencyVerdict:
    return _verdict(right_series(a))


def is_left_nilpotent(a: HomAlgebra) -> NilpotencyVerdict:
    return _verdict(left_series(a))


def _difference_witness(x: Subspace, y: Subspace) -> Vector:
    """A basis vector of x missing from y, or vice versa."""
    for v in x.vectors():
        if not y.contains_vector(v):
            return v
    for v in y.vectors():
        if not x.contains_vector(v):
            return v
    return (0,) * x.ambient_dim


def check_series_equality(a: HomAlgebra) -> CheckReport:
    """Termwise comparison of the three series up to common stabilization."""
    length = max(len(right_series(a)), len(left_series(a)), len(full_series(a)))
    violations = []
    for g in range(1, length + 1):
        r = series_term(a, "right", g)
        l = series_term(a, "left", g)
        f = series_term(a, "full", g)
        if r != f:
            violations.append(Violation("right_ne_full", (g,), _difference_witness(r, f)))
        if l != f:
            violations.append(Violation("left_ne_full", (g,), _difference_witness(l, f)))
        if r != l:
            violations.append(Violation("right_ne_left", (g,), _difference_witness(r, l)))
    return CheckReport.collect("series_equality", violations)


def check_2_nilpotent(a: HomAlgebra) -> CheckReport:
    """All out/in bracketings of two products vanish under every operation choice."""
    names = sorted(a.products)
    n = a.dim
    alpha = a.alpha
    violations = []
    for p in names:
        op_p = a.products[p]
        for q in names:
            op_q = a.products[q]
            for i in range(n):
                ai = alpha.image_of_basis(i)
                for j in range(n):
                    for k in range(n):
                        ak = alpha.image_of_basis(k)
                        out_r = eval_product(op_q, op_p.entry(i, j), ak)
                        if not vec_is_zero(out_r):
                            violations.append(
                                Violation(f"out:{p},{q}", (i + 1, j + 1, k + 1), out_r)
                            )
                        in_r = eval_product(op_q, ai, op_p.entry(j, k))
                        if not vec_is_zero(in_r):
                            violations.append(
                                Violation(f"in:{p},{q}", (i + 1, j + 1, k + 1), in_r)
                            )
    return CheckReport.collect("2_nilpotent", violations)


def onesided_verdicts(a: HomAlgebra) -> dict[str, NilpotencyVerdict]:
    """Nilpotency of the whole algebra and of each single-product reduct."""
    out = {"full": is_nilpotent(a)}
    for name in sorted(a.products):
        reduct = HomAlgebra.mono(a.products[name], a.alpha)
        out[name] = is_nilpotent(reduct)
    return out


def check_onesided_nilpotency_theorem(a: HomAlgebra) -> CheckReport:
    """Whole algebra nilpotent iff every single-product reduct is nilpotent."""
    verdicts = onesided_verdicts(a)
    whole = verdicts["full"].nilpotent
    parts = all(v.nilpotent for name, v in verdicts.items() if name != "full")
    violations = []
    if whole != parts:
        violations.append(Violation("biconditional", (), ()))
    return CheckReport.collect("onesided_nilpotency", violations)


def check_alpha_stability(a: HomAlgebra) -> CheckReport:
    """alpha(S_k) inside S_k along the full series.

    Meaningful when the twist is multiplicative for every product; the
    caller gates on that (see is_multiplicative).
    """
    violations = []
    for g, term in enumerate(full_series(a), start=1):
        image = term.image_under(a.alpha)
        if not term.contains(image):
            violations.append(Violation("alpha_stability", (g,), _difference_witness(image, term)))
    return CheckReport.collect("alpha_stability", violations)


def is_multiplicative(a: HomAlgebra) -> bool:
    return all(
        check_multiplicativity(a.products[name], a.alpha, name=name).passed
        for name in sorted(a.products)
    )
