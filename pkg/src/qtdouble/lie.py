"""Lie algebras given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NotALieAlgebraError, TagMismatchError
from .linalg import (
    ZERO, LinearMap, Vec, SubspaceBasis, dot, lincomb, nullspace_rows, q, qtuple,
    rank_of, unit, zeros, inverse,
)


@dataclass(frozen=True)
class LieAlgebra:
    """[e_i, e_j] = sum_k c[i][j][k] e_k, stored in full (not just i < j)."""
    name: str
    basis_names: tuple
    c: tuple
    space: str = "g"

    def __post_init__(self):
        n = len(self.basis_names)
        if len(self.c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in self.c):
            raise ValueError("structure constant array does not match the basis")
        c = tuple(tuple(qtuple(self.c[i][j]) for j in range(n)) for i in range(n))
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        object.__setattr__(self, "c", c)

    @classmethod
    def from_brackets(cls, name: str, basis_names: Sequence[str],
                      brackets: Mapping, space: str = "g") -> "LieAlgebra":
        """Build from {(i, j): {k: coeff}} for i < j; [e_j, e_i] is filled in by antisymmetry."""
        n = len(basis_names)
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in brackets.items():
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, coeff in items:
                c[i][j][k] += q(coeff)
                c[j][i][k] -= q(coeff)
        return cls(name, tuple(basis_names), c, space)

    @classmethod
    def abelian(cls, n: int, name: str | None = None, space: str = "g",
                basis_names: Sequence[str] | None = None) -> "LieAlgebra":
        names = basis_names or tuple(f"x{i}" for i in range(n))
        return cls(name or f"abelian{n}", tuple(names),
                   tuple(tuple(zeros(n) for _ in range(n)) for _ in range(n)), space)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def basis(self, i: int) -> Vec:
        return Vec(self.space, unit(self.dim, i))

    def basis_vectors(self) -> list:
        return [self.basis(i) for i in range(self.dim)]

    def bracket_coords(self, x, y) -> tuple:
        n = self.dim
        acc = [ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            ci = self.c[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, ck in enumerate(ci[j]):
                    if ck:
                        acc[k] += f * ck
        return tuple(acc)

    def ad_matrix(self, x) -> tuple:
        """Rows of ad_x: entry [k][j] is the e_k-coefficient of [x, e_j]."""
        n = self.dim
        cols = [self.bracket_coords(x, unit(n, j)) for j in range(n)]
        return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))

    def retag(self, space: str, name: str | None = None) -> "LieAlgebra":
        return LieAlgebra(name or self.name, self.basis_names, self.c, space)


@dataclass(frozen=True)
class ValidationReport:
    antisymmetry: tuple = ()
    jacobi: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.antisymmetry and not self.jacobi

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "Lie algebra axioms hold"
        parts = []
        if self.antisymmetry:
            i, j, k = self.antisymmetry[0]
            parts.append(f"antisymmetry fails at c[{i}][{j}][{k}] "
                         f"({len(self.antisymmetry)} violations)")
        if self.jacobi:
            i, j, k = self.jacobi[0]
            parts.append(f"Jacobi fails on basis triple ({i}, {j}, {k}) "
                         f"({len(self.jacobi)} violations)")
        return "; ".join(parts)


def validate(L: LieAlgebra) -> ValidationReport:
    """Every antisymmetry violation (i, j, k) and every Jacobi-violating triple i <= j <= k."""
    n = L.dim
    c = L.c
    anti = tuple((i, j, k) for i in range(n) for j in range(i, n) for k in range(n)
                 if c[i][j][k] != -c[j][i][k])

    def double(i, j, k):
        # [[e_i, e_j], e_k]
        acc = [ZERO] * n
        for l, cl in enumerate(c[i][j]):
            if cl:
                for m, x in enumerate(c[l][k]):
                    if x:
                        acc[m] += cl * x
        return acc

    jac = []
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        a, b, d = double(i, j, k), double(j, k, i), double(k, i, j)
        if any(x + y + z for x, y, z in zip(a, b, d)):
            jac.append((i, j, k))
    return ValidationReport(anti, tuple(jac))


def require_lie(L: LieAlgebra) -> None:
    rep = validate(L)
    if not rep.ok:
        raise NotALieAlgebraError(f"{L.name}: {rep.describe()}")


def _check(L: LieAlgebra, v: Vec) -> None:
    if v.space != L.space:
        raise TagMismatchError(f"vector in {v.space!r}, algebra {L.name} lives in {L.space!r}")


def bracket(L: LieAlgebra, x: Vec, y: Vec) -> Vec:
    _check(L, x)
    _check(L, y)
    return Vec(L.space, L.bracket_coords(x.coords, y.coords))


def ad(L: LieAlgebra, x: Vec) -> LinearMap:
    _check(L, x)
    return LinearMap(L.space, L.space, L.dim, L.dim, L.ad_matrix(x.coords))


def ad_star(L: LieAlgebra, x: Vec, dual_space: str | None = None) -> LinearMap:
    """Coadjoint action on the dual: <ad*_x xi, y> = -<xi, [x, y]>, i.e. minus the transpose of ad_x."""
    _check(L, x)
    tag = dual_space or L.space + "*"
    a = L.ad_matrix(x.coords)
    n = L.dim
    return LinearMap(tag, tag, n, n, tuple(tuple(-a[k][j] for k in range(n)) for j in range(n)))


def pairing(xi: Vec, x: Vec) -> Fraction:
    """<xi, x> in dual coordinates."""
    return dot(xi.coords, x.coords)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str | None = None,
               space: str | None = None) -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            for k in range(n1):
                c[i][j][k] = L1.c[i][j][k]
    for i in range(n2):
        for j in range(n2):
            for k in range(n2):
                c[n1 + i][n1 + j][n1 + k] = L2.c[i][j][k]
    return LieAlgebra(name or f"{L1.name}+{L2.name}",
                      L1.basis_names + L2.basis_names, c, space or L1.space)


def change_basis(L: LieAlgebra, columns: Sequence[Sequence], name: str | None = None,
                 basis_names: Sequence[str] | None = None, space: str | None = None) -> LieAlgebra:
    """Structure constants in the new basis b_a = sum_i columns[a][i] e_i."""
    n = L.dim
    P = LinearMap.from_columns("new", "old", n, n, columns)
    Pinv = inverse(P)
    c = [[Pinv.apply(L.bracket_coords(P.column(a), P.column(b))) for b in range(n)]
         for a in range(n)]
    return LieAlgebra(name or L.name, tuple(basis_names or L.basis_names), c, space or L.space)


def homomorphism_defects(src: LieAlgebra, dst: LieAlgebra, phi: LinearMap) -> list:
    """Basis pairs (a, b) of src with phi([a, b]) != [phi a, phi b]."""
    bad = []
    for a in range(src.dim):
        for b in range(a + 1, src.dim):
            lhs = phi.apply(src.c[a][b])
            rhs = dst.bracket_coords(phi.column(a), phi.column(b))
            if lhs != rhs:
                bad.append((a, b))
    return bad


def is_subalgebra(L: LieAlgebra, sub: SubspaceBasis) -> bool:
    return closure_defect(L, sub) is None


def closure_defect(L: LieAlgebra, sub: SubspaceBasis):
    """First basis pair (a, b) of sub whose bracket leaves sub, or None."""
    rows = sub.rows
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not sub.contains(L.bracket_coords(rows[a], rows[b])):
                return (a, b)
    return None


def invariant_forms(L: LieAlgebra) -> list:
    """Basis of bilinear forms K (as n x n matrices) with K([x,y],z) + K(y,[x,z]) = 0."""
    n = L.dim
    eqs = []
    # unknown K[a][b] at index a*n + b
    for x in range(n):
        for y in range(n):
            for z in range(n):
                row = [ZERO] * (n * n)
                for k, ck in enumerate(L.c[x][y]):
                    if ck:
                        row[k * n + z] += ck
                for k, ck in enumerate(L.c[x][z]):
                    if ck:
                        row[y * n + k] += ck
                if any(row):
                    eqs.append(tuple(row))
    sols = nullspace_rows(eqs, n * n) if eqs else [unit(n * n, i) for i in range(n * n)]
    return [tuple(tuple(s[a * n + b] for b in range(n)) for a in range(n)) for s in sols]


def is_invariant_form(L: LieAlgebra, K) -> bool:
    n = L.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                v = dot(L.c[x][y], [K[k][z] for k in range(n)]) + dot(L.c[x][z], K[y])
                if v:
                    return False
    return True


def has_nondegenerate_invariant_form(L: LieAlgebra, budget: int = 20000):
    """True/False when decided, None if the search budget runs out.

    det(sum t_i K_i) has degree <= n in each t_i, so it is the zero polynomial
    iff it vanishes on the grid {0..n}^k.
    """
    forms = invariant_forms(L)
    n = L.dim
    if n == 0:
        return True
    if not forms:
        return False
    k = len(forms)
    tried = 0
    for point in itertools.product(range(n + 1), repeat=k):
        if not any(point):
            continue
        M = [lincomb(point, [f[a] for f in forms], n) for a in range(n)]
        if rank_of(M, n) == n:
            return True
        tried += 1
        if tried >= budget:
            return None
    return False
