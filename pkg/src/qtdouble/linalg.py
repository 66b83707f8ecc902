"""
Exact dense linear algebra over the rationals.

Everything here works with ``fractions.Fraction``; floats are rejected on
entry.  Vectors, maps and subspaces carry a string tag naming their ambient
space ("g", "g*", "D", ...) and operations refuse to mix tags.

Subspaces are always stored in reduced row-echelon form with increasing
pivots, so two subspaces are equal iff their bases are equal entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import TagMismatchError, UnsolvableError, DomainError

ZERO = Fraction(0)
ONE = Fraction(1)


def q(x) -> Fraction:
    """Coerce to an exact rational. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"floating point value {x!r} not allowed; use Fraction or 'p/q'")
    if isinstance(x, bool):
        return Fraction(int(x))
    return Fraction(x)


def qtuple(xs: Iterable) -> tuple:
    return tuple(q(x) for x in xs)


def _check_tag(a: str, b: str) -> None:
    if a != b:
        raise TagMismatchError(f"space {a!r} does not match {b!r}")


# ---------------------------------------------------------------------------
# raw row/matrix helpers (tuples of Fractions, no tags)
# ---------------------------------------------------------------------------

def unit(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zeros(n: int) -> tuple:
    return (ZERO,) * n


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def dot(a, b) -> Fraction:
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def is_zero(a) -> bool:
    return not any(a)


def lincomb(coeffs, vectors, n: int) -> tuple:
    """Sum of coeffs[i] * vectors[i] as an n-tuple."""
    acc = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    acc[k] += c * x
    return tuple(acc)


def matvec(rows, v) -> tuple:
    return tuple(dot(row, v) for row in rows)


def transpose(rows, ncols: int | None = None) -> tuple:
    if not rows:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*rows))


def matmul(a, b, inner: int, ncols: int) -> tuple:
    bt = transpose(b, ncols) if b else tuple(zeros(inner) for _ in range(ncols))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Reduce rows to RREF; return (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = None
        for i in range(prow, len(m)):
            if m[i][col]:
                sel = i
                break
        if sel is None:
            continue
        m[prow], m[sel] = m[sel], m[prow]
        piv = m[prow][col]
        if piv != 1:
            m[prow] = [x / piv for x in m[prow]]
        pr = m[prow]
        for i in range(len(m)):
            if i != prow and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], pr)]
        pivots.append(col)
        prow += 1
        if prow == len(m):
            break
    return [tuple(r) for r in m[:prow]], pivots


def rank_of(rows, ncols: int) -> int:
    return len(rref_rows(rows, ncols)[1])


def nullspace_rows(rows, ncols: int) -> list:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    red, pivots = rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[fcol]
        basis.append(tuple(v))
    return basis


def solve_rows(rows, ncols: int, rhs) -> tuple:
    """One solution of rows . v = rhs with every free variable set to 0."""
    aug = [tuple(r) + (q(b),) for r, b in zip(rows, rhs)]
    red, pivots = rref_rows(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise UnsolvableError("right-hand side is not in the image")
    v = [ZERO] * ncols
    for row, pcol in zip(red, pivots):
        v[pcol] = row[ncols]
    return tuple(v)


# ---------------------------------------------------------------------------
# tagged types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Vec:
    space: str
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", qtuple(self.coords))

    @classmethod
    def zero(cls, space: str, n: int) -> "Vec":
        return cls(space, zeros(n))

    @classmethod
    def basis(cls, space: str, n: int, i: int) -> "Vec":
        return cls(space, unit(n, i))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: "Vec") -> "Vec":
        _check_tag(self.space, other.space)
        return Vec(self.space, vadd(self.coords, other.coords))

    def __sub__(self, other: "Vec") -> "Vec":
        _check_tag(self.space, other.space)
        return Vec(self.space, vsub(self.coords, other.coords))

    def __neg__(self) -> "Vec":
        return Vec(self.space, tuple(-x for x in self.coords))

    def __mul__(self, c) -> "Vec":
        return Vec(self.space, vscale(q(c), self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return is_zero(self.coords)

    def __repr__(self):
        return f"Vec({self.space!r}, [{', '.join(str(x) for x in self.coords)}])"


@dataclass(frozen=True)
class Tensor2:
    """Element of U (x) V as a dim U by dim V matrix."""
    spaces: tuple
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(qtuple(r) for r in self.entries))

    @property
    def shape(self):
        n1 = len(self.entries)
        return (n1, len(self.entries[0]) if n1 else 0)

    def transpose(self) -> "Tensor2":
        """The flip r -> r_21."""
        return Tensor2((self.spaces[1], self.spaces[0]), transpose(self.entries, self.shape[1]))

    def __add__(self, other):
        return Tensor2(self.spaces, tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return Tensor2(self.spaces, tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Tensor2(self.spaces, tuple(tuple(-x for x in r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.entries)

    def is_symmetric(self) -> bool:
        return self.entries == transpose(self.entries, self.shape[1])

    def is_antisymmetric(self) -> bool:
        return self.entries == tuple(tuple(-x for x in r) for r in transpose(self.entries, self.shape[1]))

    def rank(self) -> int:
        return rank_of(self.entries, self.shape[1])

    def nonzero_entries(self):
        return [((i, j), x) for i, r in enumerate(self.entries) for j, x in enumerate(r) if x]


@dataclass(frozen=True)
class Tensor3:
    spaces: tuple
    entries: tuple

    def is_zero(self) -> bool:
        return not any(x for plane in self.entries for row in plane for x in row)

    def nonzero_entries(self):
        return [((i, j, k), x)
                for i, plane in enumerate(self.entries)
                for j, row in enumerate(plane)
                for k, x in enumerate(row) if x]


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of a tagged coordinate space, held in canonical RREF."""
    space: str
    ambient_dim: int
    rows: tuple
    pivots: tuple = field(default=())

    def __post_init__(self):
        if any(len(r) != self.ambient_dim for r in self.rows):
            raise ValueError(f"row length does not match ambient dimension {self.ambient_dim}")
        red, piv = rref_rows([qtuple(r) for r in self.rows], self.ambient_dim)
        object.__setattr__(self, "rows", tuple(red))
        object.__setattr__(self, "pivots", tuple(piv))

    @classmethod
    def whole(cls, space: str, n: int) -> "SubspaceBasis":
        return cls(space, n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, space: str, n: int) -> "SubspaceBasis":
        return cls(space, n, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def vectors(self) -> list:
        return [Vec(self.space, r) for r in self.rows]

    def coords_of(self, v) -> tuple:
        """Coordinates of v in this basis; DomainError if v is not in the span."""
        raw = v.coords if isinstance(v, Vec) else qtuple(v)
        if isinstance(v, Vec):
            _check_tag(self.space, v.space)
        c = tuple(raw[p] for p in self.pivots)
        if lincomb(c, self.rows, self.ambient_dim) != raw:
            raise DomainError(f"vector is not in the subspace of {self.space!r}")
        return c

    def from_coords(self, c) -> tuple:
        return lincomb(qtuple(c), self.rows, self.ambient_dim)

    def contains(self, v) -> bool:
        try:
            self.coords_of(v)
        except DomainError:
            return False
        return True

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        _check_tag(self.space, other.space)
        return all(self.contains(r) for r in other.rows)

    def __repr__(self):
        body = "; ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.rows)
        return f"SubspaceBasis({self.space!r}, dim {self.dim}/{self.ambient_dim}: {body})"


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a linear map, shape codomain_dim x domain_dim."""
    domain: str
    codomain: str
    domain_dim: int
    codomain_dim: int
    matrix: tuple

    def __post_init__(self):
        m = tuple(qtuple(r) for r in self.matrix)
        if len(m) != self.codomain_dim or any(len(r) != self.domain_dim for r in m):
            raise ValueError(
                f"matrix shape does not match {self.codomain_dim}x{self.domain_dim}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_columns(cls, domain, codomain, domain_dim, codomain_dim, columns):
        cols = [qtuple(c) for c in columns]
        rows = tuple(tuple(c[i] for c in cols) for i in range(codomain_dim))
        return cls(domain, codomain, domain_dim, codomain_dim, rows)

    @classmethod
    def from_function(cls, domain, codomain, domain_dim, codomain_dim,
                      fn: Callable[[tuple], Sequence]):
        """Tabulate fn (coords -> coords) on the standard basis."""
        cols = [fn(unit(domain_dim, i)) for i in range(domain_dim)]
        return cls.from_columns(domain, codomain, domain_dim, codomain_dim, cols)

    @classmethod
    def identity(cls, space, n):
        return cls(space, space, n, n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, domain, codomain, domain_dim, codomain_dim):
        return cls(domain, codomain, domain_dim, codomain_dim,
                   tuple(zeros(domain_dim) for _ in range(codomain_dim)))

    def apply(self, coords) -> tuple:
        return matvec(self.matrix, coords)

    def __call__(self, v: Vec) -> Vec:
        _check_tag(self.domain, v.space)
        return Vec(self.codomain, self.apply(v.coords))

    def column(self, i) -> tuple:
        return tuple(r[i] for r in self.matrix)

    def columns(self) -> list:
        return [self.column(i) for i in range(self.domain_dim)]

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        _check_tag(self.domain, other.codomain)
        return LinearMap(other.domain, self.codomain, other.domain_dim, self.codomain_dim,
                         matmul(self.matrix, other.matrix, self.domain_dim, other.domain_dim))

    def _same_shape(self, other):
        _check_tag(self.domain, other.domain)
        _check_tag(self.codomain, other.codomain)

    def __add__(self, other):
        self._same_shape(other)
        return LinearMap(self.domain, self.codomain, self.domain_dim, self.codomain_dim,
                         tuple(vadd(a, b) for a, b in zip(self.matrix, other.matrix)))

    def __sub__(self, other):
        self._same_shape(other)
        return LinearMap(self.domain, self.codomain, self.domain_dim, self.codomain_dim,
                         tuple(vsub(a, b) for a, b in zip(self.matrix, other.matrix)))

    def __neg__(self):
        return LinearMap(self.domain, self.codomain, self.domain_dim, self.codomain_dim,
                         tuple(tuple(-x for x in r) for r in self.matrix))

    def scaled(self, c):
        c = q(c)
        return LinearMap(self.domain, self.codomain, self.domain_dim, self.codomain_dim,
                         tuple(vscale(c, r) for r in self.matrix))

    def transpose(self, domain=None, codomain=None) -> "LinearMap":
        return LinearMap(domain or self.codomain, codomain or self.domain,
                         self.codomain_dim, self.domain_dim,
                         transpose(self.matrix, self.domain_dim))

    def retag(self, domain=None, codomain=None) -> "LinearMap":
        return LinearMap(domain or self.domain, codomain or self.codomain,
                         self.domain_dim, self.codomain_dim, self.matrix)

    def rank(self) -> int:
        return rank_of(self.matrix, self.domain_dim)

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.matrix)


@dataclass(frozen=True)
class QuotientChart:
    """Coordinates on ambient / subspace via a fixed coordinate complement.

    The complement is spanned by the standard basis vectors at the non-pivot
    columns of the subspace's echelon basis.  ``projector`` sends an ambient
    vector to its coordinates along that complement and kills the subspace.
    """
    space: str
    subspace: SubspaceBasis
    complement: SubspaceBasis
    projector: LinearMap

    @property
    def dim(self) -> int:
        return self.complement.dim

    @property
    def name(self) -> str:
        return self.projector.codomain

    def project(self, v) -> tuple:
        raw = v.coords if isinstance(v, Vec) else qtuple(v)
        return self.projector.apply(raw)

    def lift(self, c) -> tuple:
        """Representative in the ambient space of quotient coordinates c."""
        return self.complement.from_coords(c)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Vec], space: str | None = None, dim: int | None = None) -> SubspaceBasis:
    """Canonical RREF basis of the span of ``rows``.

    ``space`` and ``dim`` are only needed when ``rows`` is empty.
    """
    rows = list(rows)
    if rows:
        tag = rows[0].space
        for r in rows:
            _check_tag(tag, r.space)
        n = len(rows[0].coords)
        if space is not None:
            _check_tag(space, tag)
        if any(len(r.coords) != n for r in rows):
            raise ValueError("rows of unequal length")
        return SubspaceBasis(tag, n, tuple(r.coords for r in rows))
    return SubspaceBasis(space if space is not None else "?", dim or 0, ())


def span(space: str, dim: int, coord_rows: Iterable) -> SubspaceBasis:
    return SubspaceBasis(space, dim, tuple(qtuple(r) for r in coord_rows))


def kernel(m: LinearMap) -> SubspaceBasis:
    return SubspaceBasis(m.domain, m.domain_dim, tuple(nullspace_rows(m.matrix, m.domain_dim)))


def image(m: LinearMap) -> SubspaceBasis:
    return SubspaceBasis(m.codomain, m.codomain_dim, tuple(m.columns()))


def image_of(m: LinearMap, sub: SubspaceBasis) -> SubspaceBasis:
    _check_tag(m.domain, sub.space)
    return SubspaceBasis(m.codomain, m.codomain_dim, tuple(m.apply(r) for r in sub.rows))


def preimage(m: LinearMap, sub: SubspaceBasis) -> SubspaceBasis:
    """{v : m(v) in sub}."""
    _check_tag(m.codomain, sub.space)
    chart = quotient_chart(sub)
    return kernel(chart.projector @ m)


def add_subspaces(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    _check_tag(a.space, b.space)
    return SubspaceBasis(a.space, a.ambient_dim, a.rows + b.rows)


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Solve sum(l_i a_i) = sum(m_j b_j) and map the l-part back."""
    _check_tag(a.space, b.space)
    n = a.ambient_dim
    ka, kb = a.dim, b.dim
    if ka == 0 or kb == 0:
        return SubspaceBasis(a.space, n, ())
    # columns are a_1..a_k, -b_1..-b_l
    system = tuple(
        tuple(a.rows[i][row] for i in range(ka)) + tuple(-b.rows[j][row] for j in range(kb))
        for row in range(n)
    )
    sols = nullspace_rows(system, ka + kb)
    return SubspaceBasis(a.space, n, tuple(lincomb(s[:ka], a.rows, n) for s in sols))


def annihilator(sub: SubspaceBasis, dual_space: str) -> SubspaceBasis:
    """{xi : <xi, v> = 0 for all v in sub}, in dual coordinates."""
    return SubspaceBasis(dual_space, sub.ambient_dim,
                         tuple(nullspace_rows(sub.rows, sub.ambient_dim)))


def quotient_chart(w: SubspaceBasis, name: str | None = None) -> QuotientChart:
    n = w.ambient_dim
    piv = set(w.pivots)
    free = [c for c in range(n) if c not in piv]
    complement = SubspaceBasis(w.space, n, tuple(unit(n, c) for c in free))
    # P v = (v - sum_i v[p_i] w_i) restricted to the free columns
    rows = []
    for fc in free:
        row = [ZERO] * n
        row[fc] = ONE
        for wi, p in zip(w.rows, w.pivots):
            row[p] -= wi[fc]
        rows.append(tuple(row))
    qname = name or f"{w.space}/~"
    projector = LinearMap(w.space, qname, n, len(free), tuple(rows))
    return QuotientChart(w.space, w, complement, projector)


def solve(m: LinearMap, y) -> tuple:
    """First-pivot preimage of y under m (free variables set to zero)."""
    raw = y.coords if isinstance(y, Vec) else qtuple(y)
    if isinstance(y, Vec):
        _check_tag(m.codomain, y.space)
    return solve_rows(m.matrix, m.domain_dim, raw)


def solve_right_inverse(m: LinearMap, onto: SubspaceBasis, domain: str | None = None) -> LinearMap:
    """A map s from onto-coordinates to m.domain with m(s(y)) = y on onto.

    Each basis vector of ``onto`` is solved for by Gaussian elimination with
    free variables set to zero, so the result is deterministic.
    """
    _check_tag(m.codomain, onto.space)
    cols = []
    for y in onto.rows:
        try:
            cols.append(solve_rows(m.matrix, m.domain_dim, y))
        except UnsolvableError:
            raise UnsolvableError(f"{onto!r} is not contained in the image of the map") from None
    return LinearMap.from_columns(domain or f"{onto.space}|sub", m.domain,
                                  onto.dim, m.domain_dim, cols)


def restrict(m: LinearMap, sub: SubspaceBasis, domain: str | None = None) -> LinearMap:
    """m composed with the inclusion of sub (sub-coordinates as domain)."""
    _check_tag(m.domain, sub.space)
    return LinearMap.from_columns(domain or f"{sub.space}|sub", m.codomain, sub.dim,
                                  m.codomain_dim, [m.apply(r) for r in sub.rows])


def inclusion(sub: SubspaceBasis, domain: str | None = None) -> LinearMap:
    return LinearMap.from_columns(domain or f"{sub.space}|sub", sub.space, sub.dim,
                                  sub.ambient_dim, list(sub.rows))


def is_invertible(m: LinearMap) -> bool:
    return m.domain_dim == m.codomain_dim and m.rank() == m.domain_dim


def inverse(m: LinearMap) -> LinearMap:
    if not is_invertible(m):
        raise UnsolvableError("map is not invertible")
    cols = [solve_rows(m.matrix, m.domain_dim, unit(m.codomain_dim, i))
            for i in range(m.codomain_dim)]
    return LinearMap.from_columns(m.codomain, m.domain, m.codomain_dim, m.domain_dim, cols)
