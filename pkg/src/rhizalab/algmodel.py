"""Structure-constant model: bilinear products, twist maps, and algebra files.

A product is an n x n x n tensor ``c[i][j][k]`` meaning
``e_i o e_j = sum_k c[i][j][k] e_k``; a twist map alpha is stored as the
matrix whose column i holds the coordinates of ``alpha(e_i)``.  Indices are
0-based in memory and 1-based in the text format, matching the usual
``e_1, e_2, ...`` notation.

Algebra files are JSON objects::

    {"dim": 2, "kind": "rhizaform",
     "alpha": [["1", "1"], ["0", "1"]],
     "succ": [[2, 2, 1, "1"]], "prec": [[2, 2, 1, "1"]],
     "params": {"eta": "1/4"}}

Product sections list only nonzero structure constants.  A coefficient is a
rational literal ("p" or "p/q"; no decimals) or a parameter name, optionally
negated ("-eta"); parameters are resolved to concrete rationals at parse
time, so downstream code never sees symbols.  A mono-product algebra uses
``"kind": "mono"`` with a single ``"mul"`` section.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, MissingProduct, ParseError, UnboundParameter
from .exactlin import (
    F0,
    Matrix,
    Vector,
    rational,
    rational_str,
    vec_zero,
)

_NAME_RE = re.compile(r"-?[A-Za-z_][A-Za-z0-9_]*$")


class BilinearOp:
    """Structure-constant tensor of one bilinear product."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs):
        coeffs = tuple(tuple(tuple(rational(c) for c in col) for col in row) for row in coeffs)
        if len(coeffs) != dim or any(
            len(row) != dim or any(len(col) != dim for col in row) for row in coeffs
        ):
            raise DimensionMismatch(f"coefficient tensor is not {dim}^3")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearOp is immutable")

    @classmethod
    def zero(cls, dim: int) -> BilinearOp:
        z = vec_zero(dim)
        return cls(dim, tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, entries) -> BilinearOp:
        """Build from 0-based (i, j, k, coefficient) tuples; duplicates add."""
        c = [[[F0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, co in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatch(f"index ({i},{j},{k}) outside [0,{dim})")
            c[i][j][k] += rational(co)
        return cls(dim, c)

    def entry(self, i: int, j: int) -> Vector:
        """Coordinates of e_i o e_j."""
        return self.coeffs[i][j]

    def nonzero_entries(self) -> list[tuple[int, int, int, Fraction]]:
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.coeffs[i][j]):
                    if c:
                        out.append((i, j, k, c))
        return out

    def add(self, other: BilinearOp) -> BilinearOp:
        if self.dim != other.dim:
            raise DimensionMismatch("cannot add products of different dimension")
        return BilinearOp(
            self.dim,
            tuple(
                tuple(
                    tuple(a + b for a, b in zip(self.coeffs[i][j], other.coeffs[i][j]))
                    for j in range(self.dim)
                )
                for i in range(self.dim)
            ),
        )

    def neg(self) -> BilinearOp:
        return self.scale(Fraction(-1))

    def scale(self, c) -> BilinearOp:
        c = rational(c)
        return BilinearOp(
            self.dim,
            tuple(
                tuple(tuple(c * a for a in col) for col in row) for row in self.coeffs
            ),
        )

    def is_zero(self) -> bool:
        return not any(c for row in self.coeffs for col in row for c in col)

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearOp) and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, self.coeffs))

    def __repr__(self):
        terms = ", ".join(
            f"e{i + 1}*e{j + 1}->{rational_str(c)}e{k + 1}" for i, j, k, c in self.nonzero_entries()
        )
        return f"BilinearOp({self.dim}: {terms or '0'})"


def eval_product(op: BilinearOp, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the basis products to arbitrary vectors."""
    if len(x) != op.dim or len(y) != op.dim:
        raise DimensionMismatch(f"vectors of length {len(x)},{len(y)} fed to dim-{op.dim} product")
    out = [F0] * op.dim
    coeffs = op.coeffs
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = coeffs[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, ck in enumerate(row[j]):
                if ck:
                    out[k] += s * ck
    return tuple(out)


class LinearMap:
    """Square matrix acting on the algebra; column i is the image of e_i."""

    __slots__ = ("dim", "matrix")

    def __init__(self, dim: int, matrix: Matrix):
        if matrix.rows != dim or matrix.cols != dim:
            raise DimensionMismatch(f"twist map must be {dim}x{dim}, got {matrix.rows}x{matrix.cols}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMap is immutable")

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls(dim, Matrix.identity(dim))

    @classmethod
    def from_rows(cls, rows) -> LinearMap:
        m = Matrix.from_rows(rows)
        return cls(m.rows, m)

    @classmethod
    def from_columns(cls, columns) -> LinearMap:
        return cls.from_rows(Matrix.from_rows(columns).transpose().to_rows())

    def apply(self, x: Vector) -> Vector:
        return self.matrix.apply(x)

    def image_of_basis(self, i: int) -> Vector:
        return self.matrix.column(i)

    def compose(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.dim, self.matrix.times(other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.dim)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap({self.matrix!r})"


RHIZAFORM_PRODUCTS = frozenset({"succ", "prec"})
MONO_PRODUCTS = frozenset({"mul"})


@dataclass(frozen=True)
class HomAlgebra:
    """An algebra given by named products, a twist map, and parameter bindings."""

    dim: int
    products: dict[str, BilinearOp]
    alpha: LinearMap
    params: dict[str, Fraction] = field(default_factory=dict)
    beta: LinearMap | None = None

    def __post_init__(self):
        names = frozenset(self.products)
        if names not in (RHIZAFORM_PRODUCTS, MONO_PRODUCTS):
            raise MissingProduct(
                f"products must be exactly {{succ, prec}} or {{mul}}, got {sorted(names)}"
            )
        for name, op in self.products.items():
            if op.dim != self.dim:
                raise DimensionMismatch(f"product {name!r} has dim {op.dim}, algebra has {self.dim}")
        if self.alpha.dim != self.dim:
            raise DimensionMismatch("twist map dimension differs from algebra dimension")
        if self.beta is not None and self.beta.dim != self.dim:
            raise DimensionMismatch("second map dimension differs from algebra dimension")

    @classmethod
    def rhizaform(cls, succ: BilinearOp, prec: BilinearOp, alpha: LinearMap, params=None) -> HomAlgebra:
        return cls(succ.dim, {"succ": succ, "prec": prec}, alpha, dict(params or {}))

    @classmethod
    def mono(cls, mul: BilinearOp, alpha: LinearMap, params=None) -> HomAlgebra:
        return cls(mul.dim, {"mul": mul}, alpha, dict(params or {}))

    @property
    def kind(self) -> str:
        return "rhizaform" if "succ" in self.products else "mono"

    @property
    def is_rhizaform(self) -> bool:
        return "succ" in self.products

    def product(self, name: str) -> BilinearOp:
        try:
            return self.products[name]
        except KeyError:
            raise MissingProduct(f"algebra of kind {self.kind!r} has no product {name!r}") from None

    @property
    def succ(self) -> BilinearOp:
        return self.product("succ")

    @property
    def prec(self) -> BilinearOp:
        return self.product("prec")

    @property
    def mul(self) -> BilinearOp:
        return self.product("mul")


def sum_product(a: HomAlgebra) -> BilinearOp:
    """Coefficient-wise sum of the two split products."""
    return a.succ.add(a.prec)


def star_product(a: HomAlgebra) -> BilinearOp:
    """The working single product: mul for mono algebras, succ+prec otherwise."""
    return a.mul if a.kind == "mono" else sum_product(a)


# --- text format -----------------------------------------------------------


def _resolve_coefficient(token, params: dict[str, Fraction]) -> Fraction:
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, float):
        raise ParseError(f"decimal coefficient {token!r} not accepted; use 'p/q'")
    if not isinstance(token, str):
        raise ParseError(f"bad coefficient {token!r}")
    s = token.strip()
    if _NAME_RE.match(s):
        negate = s.startswith("-")
        name = s[1:] if negate else s
        if name not in params:
            raise UnboundParameter(name)
        value = params[name]
        return -value if negate else value
    return rational(s)


def _parse_matrix(doc, dim: int, what: str, params: dict[str, Fraction]) -> Matrix:
    if not isinstance(doc, list) or len(doc) != dim:
        raise ParseError(f"{what} must be a {dim}x{dim} array of rows")
    rows = []
    for row in doc:
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{what} must be a {dim}x{dim} array of rows")
        rows.append([_resolve_coefficient(e, params) for e in row])
    return Matrix.from_rows(rows)


def _parse_product(doc, dim: int, name: str, params: dict[str, Fraction]) -> BilinearOp:
    if not isinstance(doc, list):
        raise ParseError(f"product {name!r} must be a list of [i, j, k, coefficient] entries")
    entries = []
    for item in doc:
        if not isinstance(item, list) or len(item) != 4:
            raise ParseError(f"product entry {item!r} in {name!r} is not [i, j, k, coefficient]")
        i, j, k, co = item
        if not all(isinstance(t, int) for t in (i, j, k)):
            raise ParseError(f"product entry {item!r} in {name!r} has non-integer indices")
        if not all(1 <= t <= dim for t in (i, j, k)):
            raise ParseError(f"product entry {item!r} in {name!r} outside basis range 1..{dim}")
        entries.append((i - 1, j - 1, k - 1, _resolve_coefficient(co, params)))
    return BilinearOp.from_entries(dim, entries)


def parse_algebra_obj(doc, bindings: dict[str, Fraction] | None = None) -> HomAlgebra:
    """Build a HomAlgebra from an already-decoded JSON object."""
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    if "dim" not in doc or not isinstance(doc["dim"], int) or doc["dim"] < 1:
        raise ParseError("missing or bad 'dim'")
    dim = doc["dim"]
    kind = doc.get("kind")
    if kind not in ("rhizaform", "mono"):
        raise ParseError(f"'kind' must be 'rhizaform' or 'mono', got {kind!r}")

    params: dict[str, Fraction] = {}
    for name, value in (doc.get("params") or {}).items():
        params[name] = rational(value)  # bindings are literals, never other names
    for name, value in (bindings or {}).items():
        params[name] = rational(value)

    alpha_doc = doc.get("alpha")
    if alpha_doc is None:
        raise ParseError("missing 'alpha'")
    alpha = LinearMap(dim, _parse_matrix(alpha_doc, dim, "alpha", params))
    beta = None
    if doc.get("beta") is not None:
        beta = LinearMap(dim, _parse_matrix(doc["beta"], dim, "beta", params))

    wanted = ("succ", "prec") if kind == "rhizaform" else ("mul",)
    stray = [n for n in ("succ", "prec", "mul") if n not in wanted and doc.get(n)]
    if stray:
        raise ParseError(f"kind {kind!r} does not take product section(s) {stray}")
    products = {
        name: _parse_product(doc.get(name, []), dim, name, params) for name in wanted
    }
    return HomAlgebra(dim, products, alpha, params, beta)


def parse_algebra(text: str, bindings: dict[str, Fraction] | None = None) -> HomAlgebra:
    """Parse the algebra text format; see the module docstring."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=exc.pos) from None
    return parse_algebra_obj(doc, bindings)


def _matrix_obj(m: Matrix) -> list[list[str]]:
    return [[rational_str(e) for e in m.row(i)] for i in range(m.rows)]


def _product_obj(op: BilinearOp) -> list[list]:
    return [[i + 1, j + 1, k + 1, rational_str(c)] for i, j, k, c in op.nonzero_entries()]


def serialize_algebra_obj(a: HomAlgebra) -> dict:
    doc: dict = {"dim": a.dim, "kind": a.kind, "alpha": _matrix_obj(a.alpha.matrix)}
    if a.beta is not None:
        doc["beta"] = _matrix_obj(a.beta.matrix)
    for name in ("succ", "prec", "mul"):
        if name in a.products:
            doc[name] = _product_obj(a.products[name])
    if a.params:
        doc["params"] = {name: rational_str(a.params[name]) for name in sorted(a.params)}
    return doc


def serialize_algebra(a: HomAlgebra) -> str:
    """Inverse of parse_algebra, up to entry ordering; round-trips exactly."""
    return json.dumps(serialize_algebra_obj(a), indent=2) + "\n"
