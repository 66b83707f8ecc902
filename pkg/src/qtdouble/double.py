"""
The double built directly on g + g*.

Basis order is (e_1..e_n, e^1..e^n).  The mixed bracket is
[x, xi] = ad*_x(xi) - ad*_xi(x); the resulting structure constants are run
through the Jacobi check before anything downstream trusts them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bialgebra import QuasitriangularBialgebra, cobracket_matrix
from .errors import InconsistencyError, TagMismatchError
from .lie import LieAlgebra, validate
from .linalg import (
    ZERO, LinearMap, SubspaceBasis, Tensor2, Vec, dot, rank_of, unit, vadd, zeros,
)
from .report import Report

DSPACE = "D"


@dataclass(frozen=True)
class DirectDouble:
    bialgebra: QuasitriangularBialgebra
    d: LieAlgebra
    form: Tensor2

    @property
    def n(self) -> int:
        return self.bialgebra.n

    def embed_g(self, x) -> tuple:
        return tuple(x) + zeros(self.n)

    def embed_dual(self, xi) -> tuple:
        return zeros(self.n) + tuple(xi)

    def split(self, d) -> tuple:
        """(g-part, g*-part) of a D-coordinate vector."""
        return tuple(d[:self.n]), tuple(d[self.n:])

    def bracket(self, a, b) -> tuple:
        return self.d.bracket_coords(a, b)

    def one_minus_r(self, xi, sign: str = "+") -> tuple:
        """(id - r_plus) xi or (id - r_minus) xi as a D vector."""
        B = self.bialgebra
        m = B.r_plus if sign == "+" else B.r_minus
        return tuple(-x for x in m.apply(xi)) + tuple(xi)

    @property
    def g_block(self) -> SubspaceBasis:
        n = self.n
        return SubspaceBasis(DSPACE, 2 * n, tuple(unit(2 * n, i) for i in range(n)))

    @property
    def dual_block(self) -> SubspaceBasis:
        n = self.n
        return SubspaceBasis(DSPACE, 2 * n, tuple(unit(2 * n, n + i) for i in range(n)))


def _mixed(B: QuasitriangularBialgebra, i: int, a: int) -> tuple:
    """[e_i, e^a] in D coordinates."""
    n = B.n
    g = B.g
    delta = cobracket_matrix(g, B.r, unit(n, i))
    # g-part: -ad*_{e^a}(e_i) = (e^a (x) id) delta(e_i) = row a of delta
    gpart = delta[a]
    # g*-part: ad*_{e_i}(e^a), <., e_k> = -<e^a, [e_i, e_k]> = -c[i][k][a]
    dpart = tuple(-g.c[i][k][a] for k in range(n))
    return tuple(gpart) + dpart


def build_direct_double(B: QuasitriangularBialgebra) -> DirectDouble:
    n = B.n
    g = B.g
    N = 2 * n
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = g.c[i][j][k]
    for a in range(n):
        for b in range(n):
            for k in range(n):
                c[n + a][n + b][n + k] = B.dual.c[a][b][k]
    for i in range(n):
        for a in range(n):
            v = _mixed(B, i, a)
            c[i][n + a] = list(v)
            c[n + a][i] = [-x for x in v]
    names = g.basis_names + B.dual.basis_names
    D = LieAlgebra(f"D({g.name})", names, c, DSPACE)
    rep = validate(D)
    if not rep.ok:
        raise InconsistencyError(f"direct double fails the Lie axioms: {rep.describe()}")
    form = tuple(tuple(Fraction(1) if (j == i + n or i == j + n) else ZERO for j in range(N))
                 for i in range(N))
    return DirectDouble(B, D, Tensor2((DSPACE, DSPACE), form))


def canonical_form(D: DirectDouble, d1, d2) -> Fraction:
    """<<x1 + xi1, x2 + xi2>> = <xi1, x2> + <xi2, x1>."""
    if isinstance(d1, Vec):
        if d1.space != DSPACE or d2.space != DSPACE:
            raise TagMismatchError("canonical_form expects vectors of 'D'")
        d1, d2 = d1.coords, d2.coords
    x1, xi1 = D.split(d1)
    x2, xi2 = D.split(d2)
    return dot(xi1, x2) + dot(xi2, x1)


def form_value(form: Tensor2, a, b) -> Fraction:
    return sum((a[i] * form.entries[i][j] * b[j]
                for i in range(len(a)) if a[i] for j in range(len(b)) if b[j]), ZERO)


def invariance_defects(L: LieAlgebra, form: Tensor2) -> list:
    """Basis triples (a, b, c) with <[a,b],c> + <b,[a,c]> != 0."""
    N = L.dim
    F = form.entries
    bad = []
    for a in range(N):
        for b in range(N):
            ab = L.c[a][b]
            for c in range(N):
                v = dot(ab, [F[k][c] for k in range(N)]) + dot(F[b], L.c[a][c])
                if v:
                    bad.append((a, b, c))
    return bad


def lagrangian_report(rep: Report, label: str, L: LieAlgebra, form: Tensor2,
                      sub: SubspaceBasis) -> None:
    from .lie import closure_defect
    N = L.dim
    rep.add(f"{label} is a subalgebra", closure_defect(L, sub) is None)
    iso = all(form_value(form, u, v) == 0 for u in sub.rows for v in sub.rows)
    rep.add(f"{label} is isotropic", iso)
    rep.add(f"{label} has half the dimension", 2 * sub.dim == N, dim=sub.dim, ambient=N)


def verify_manin_triple(D: DirectDouble) -> Report:
    rep = Report("Manin triple (direct double)")
    N = 2 * D.n
    rk = rank_of(D.form.entries, N)
    rep.add("form is nondegenerate", rk == N, rank=rk)
    rep.add("form is symmetric", D.form.is_symmetric())
    bad = invariance_defects(D.d, D.form)
    rep.add("form is invariant", not bad, failures=bad[:10])
    lagrangian_report(rep, "g", D.d, D.form, D.g_block)
    lagrangian_report(rep, "g*", D.d, D.form, D.dual_block)
    n = D.n
    B = D.bialgebra
    ok_g = all(D.d.c[i][j] == D.embed_g(B.g.c[i][j]) for i in range(n) for j in range(n))
    ok_d = all(D.d.c[n + a][n + b] == D.embed_dual(B.dual.c[a][b])
               for a in range(n) for b in range(n))
    rep.add("bracket on the g block is the input bracket", ok_g)
    rep.add("bracket on the g* block is the dual bracket", ok_d)
    return rep


def lemma_checks(D: DirectDouble) -> Report:
    """Commuting kernels, the vanishing expression, and the module-map identity."""
    B = D.bialgebra
    n = B.n
    rep = Report("double lemmas")
    basis = [unit(n, i) for i in range(n)]

    bad = []
    for a in range(n):
        for b in range(n):
            if any(D.bracket(D.one_minus_r(basis[a], "+"), D.one_minus_r(basis[b], "-"))):
                bad.append((a, b))
    rep.add("[(id - r+) xi1, (id - r-) xi2] = 0", not bad, failures=bad)

    bad = []
    for a in range(n):
        for b in range(n):
            x1, x2 = basis[a], basis[b]
            t1 = B.dual.c[a][b]
            t2 = _ad_star_coords(B, B.r_plus.apply(x1), x2)
            t3 = _ad_star_coords(B, B.r_minus.apply(x2), x1)
            if any(u - v + w for u, v, w in zip(t1, t2, t3)):
                bad.append((a, b))
    rep.add("[xi1, xi2] - ad*_{r+ xi1} xi2 + ad*_{r- xi2} xi1 = 0", not bad, failures=bad)

    for sign in "+-":
        bad = []
        for i in range(n):
            for a in range(n):
                lhs = D.bracket(D.embed_g(basis[i]), D.one_minus_r(basis[a], sign))
                rhs = D.one_minus_r(_ad_star_coords(B, basis[i], basis[a]), sign)
                if lhs != rhs:
                    bad.append((i, a))
        rep.add(f"[x, (id - r{sign}) xi] = (id - r{sign}) ad*_x xi", not bad, failures=bad)
    return rep


def _ad_star_coords(B: QuasitriangularBialgebra, x, xi) -> tuple:
    """ad*_x(xi) for x in g, xi in g*: <., e_k> = -<xi, [x, e_k]>."""
    n = B.n
    g = B.g
    return tuple(-dot(xi, g.bracket_coords(x, unit(n, k))) for k in range(n))
