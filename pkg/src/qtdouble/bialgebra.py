"""
Quasitriangular Lie bialgebras (g, r).

Conventions, with r = sum r[i][j] e_i (x) e_j:

* r_plus(xi) = (xi (x) id) r, matrix r^T;  r_minus(xi) = -(id (x) xi) r, matrix -r.
* cobracket delta(x) = (ad_x (x) id + id (x) ad_x) r = A r + r A^T with A = ad_x.
* dual bracket [xi, eta](x) = <xi (x) eta, delta(x)>.
* the dual acts on g by ad*_xi(x) = -(xi (x) id) delta(x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import CYBEError, NotBialgebraError
from .lie import LieAlgebra, ad, ad_star, homomorphism_defects, require_lie, validate
from .linalg import (
    ZERO, LinearMap, SubspaceBasis, Tensor2, Tensor3, Vec, annihilator, image, kernel,
    matmul, transpose, unit, vadd,
)
from .report import Report


class Kind(str, Enum):
    TRIANGULAR = "triangular"
    FACTORIZABLE = "factorizable"
    GENERAL = "general"


def as_tensor(r, space: str = "g") -> Tensor2:
    if isinstance(r, Tensor2):
        return r
    return Tensor2((space, space), tuple(tuple(row) for row in r))


def cybe_tensor(g: LieAlgebra, r) -> Tensor3:
    """[r12, r13] + [r12, r23] + [r13, r23] as an n x n x n array."""
    r = as_tensor(r, g.space).entries
    n = g.dim
    c = g.c
    T = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    nz = [(a, b, x) for a in range(n) for b in range(n) if (x := r[a][b])]
    for a, b, x in nz:
        for cc, d, y in nz:
            f = x * y
            for l, v in enumerate(c[a][cc]):        # [e_a, e_c] (x) e_b (x) e_d
                if v:
                    T[l][b][d] += f * v
            for l, v in enumerate(c[b][cc]):        # e_a (x) [e_b, e_c] (x) e_d
                if v:
                    T[a][l][d] += f * v
            for l, v in enumerate(c[b][d]):         # e_a (x) e_c (x) [e_b, e_d]
                if v:
                    T[a][cc][l] += f * v
    sp = g.space
    return Tensor3((sp, sp, sp), tuple(tuple(tuple(row) for row in plane) for plane in T))


def act_on_tensor(g: LieAlgebra, x, t) -> tuple:
    """(ad_x (x) id + id (x) ad_x) t for t a matrix on g (x) g."""
    n = g.dim
    A = g.ad_matrix(x)
    left = matmul(A, t, n, n)
    right = matmul(t, transpose(A, n), n, n)
    return tuple(vadd(a, b) for a, b in zip(left, right))


def cobracket_matrix(g: LieAlgebra, r, x) -> tuple:
    return act_on_tensor(g, x, as_tensor(r, g.space).entries)


@dataclass(frozen=True)
class QuasitriangularBialgebra:
    """(g, r) with r checked against CYBE at construction.

    Construction also requires Omega = r + r_21 to be ad-invariant, which is
    what makes the cobracket skew; CYBE alone does not imply it.
    """
    g: LieAlgebra
    r: Tensor2
    r_plus: LinearMap = field(init=False, repr=False)
    r_minus: LinearMap = field(init=False, repr=False)
    omega: Tensor2 = field(init=False, repr=False)
    f: SubspaceBasis = field(init=False, repr=False)
    f_perp: SubspaceBasis = field(init=False, repr=False)
    dual: LieAlgebra = field(init=False, repr=False)

    def __post_init__(self):
        g = self.g
        r = as_tensor(self.r, g.space)
        n = g.dim
        if r.shape != (n, n) and not (n == 0 and r.shape == (0, 0)):
            raise ValueError(f"r has shape {r.shape}, expected {(n, n)}")
        object.__setattr__(self, "r", r)
        require_lie(g)
        T = cybe_tensor(g, r)
        if not T.is_zero():
            (idx, val), = T.nonzero_entries()[:1]
            raise CYBEError(f"CYBE fails: entry {idx} of [r12,r13]+[r12,r23]+[r13,r23] is {val}",
                            entry=(idx, val))
        omega = r + r.transpose()
        for i in range(n):
            if any(any(row) for row in act_on_tensor(g, unit(n, i), omega.entries)):
                raise NotBialgebraError(
                    f"r + r_21 is not ad-invariant (fails for basis element {g.basis_names[i]});"
                    " the cobracket is not skew")
        gs = g.space
        ds = gs + "*"
        rp = LinearMap(ds, gs, n, n, transpose(r.entries, n))
        rm = LinearMap(ds, gs, n, n, tuple(tuple(-x for x in row) for row in r.entries))
        diff = rp - rm
        object.__setattr__(self, "r_plus", rp)
        object.__setattr__(self, "r_minus", rm)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "f", image(diff))
        object.__setattr__(self, "f_perp", kernel(diff))
        deltas = [cobracket_matrix(g, r, unit(n, k)) for k in range(n)]
        dc = [[[deltas[k][a][b] for k in range(n)] for b in range(n)] for a in range(n)]
        object.__setattr__(self, "dual", LieAlgebra(
            f"{g.name}*", tuple(f"{b}*" for b in g.basis_names), dc, ds))

    @property
    def n(self) -> int:
        return self.g.dim

    @property
    def gspace(self) -> str:
        return self.g.space

    @property
    def dspace(self) -> str:
        return self.g.space + "*"

    @property
    def r_diff(self) -> LinearMap:
        """r_plus - r_minus = Omega contracted in its first slot."""
        return self.r_plus - self.r_minus


def cobracket(B: QuasitriangularBialgebra, x: Vec) -> Tensor2:
    if x.space != B.gspace:
        from .errors import TagMismatchError
        raise TagMismatchError(f"cobracket expects a vector of {B.gspace!r}")
    return Tensor2((B.gspace, B.gspace), cobracket_matrix(B.g, B.r, x.coords))


def r_plus(B: QuasitriangularBialgebra) -> LinearMap:
    return B.r_plus


def r_minus(B: QuasitriangularBialgebra) -> LinearMap:
    return B.r_minus


def dual_coadjoint(B: QuasitriangularBialgebra, xi: Vec, formula: int = 1) -> LinearMap:
    """x -> ad*_xi(x), the coadjoint action of the dual on g.

    formula 1 contracts the first slot of delta(x) with -xi,
    formula 2 contracts the second slot with +xi.
    """
    n = B.n
    cols = []
    for j in range(n):
        d = cobracket_matrix(B.g, B.r, unit(n, j))
        if formula == 1:
            cols.append(tuple(-sum((xi.coords[i] * d[i][k] for i in range(n)), ZERO)
                              for k in range(n)))
        else:
            cols.append(tuple(sum((d[k][i] * xi.coords[i] for i in range(n)), ZERO)
                              for k in range(n)))
    return LinearMap.from_columns(B.gspace, B.gspace, n, n, cols)


def dual_coadjoint_coords(B: QuasitriangularBialgebra, xi, x) -> tuple:
    """ad*_xi(x) = -(xi (x) id) delta(x) on raw coordinates."""
    n = B.n
    d = cobracket_matrix(B.g, B.r, x)
    return tuple(-sum((xi[i] * d[i][k] for i in range(n) if xi[i]), ZERO) for k in range(n))


def classify(B: QuasitriangularBialgebra) -> Kind:
    if B.omega.is_zero():
        return Kind.TRIANGULAR
    if B.omega.rank() == B.n:
        return Kind.FACTORIZABLE
    return Kind.GENERAL


def f_from_components(B: QuasitriangularBialgebra) -> SubspaceBasis:
    """Span of all rows and columns of Omega."""
    rows = B.omega.entries + transpose(B.omega.entries, B.n)
    return SubspaceBasis(B.gspace, B.n, tuple(rows))


def bialgebra_checks(B: QuasitriangularBialgebra) -> Report:
    """Every structural identity of the quasitriangular bialgebra, exhaustively on bases."""
    g, n = B.g, B.n
    rep = Report("bialgebra")
    basis = g.basis_vectors()

    bad = [g.basis_names[i] for i in range(n)
           if any(any(row) for row in act_on_tensor(g, unit(n, i), B.omega.entries))]
    rep.add("Omega is ad-invariant", not bad, failures=bad)

    bad = [(i, j) for i in range(n) for j in range(B.f.dim)
           if not B.f.contains(g.bracket_coords(unit(n, i), B.f.rows[j]))]
    rep.add("f is an ideal", not bad, failures=bad)

    f2 = f_from_components(B)
    rep.add("f: span of Omega components equals Im(r+ - r-)", f2 == B.f, f=B.f, components=f2)

    fp2 = annihilator(B.f, B.dspace)
    rep.add("f_perp: annihilator of f equals Ker(r+ - r-)", fp2 == B.f_perp,
            f_perp=B.f_perp, annihilator=fp2)

    bad = [(a, b) for a in range(B.f_perp.dim) for b in range(B.f.dim)
           if sum((x * y for x, y in zip(B.f_perp.rows[a], B.f.rows[b])), ZERO)]
    rep.add("f_perp annihilates f", not bad, failures=bad)

    for name, m in (("r+", B.r_plus), ("r-", B.r_minus)):
        bad = homomorphism_defects(B.dual, g, m)
        rep.add(f"{name} is a Lie algebra homomorphism g* -> g", not bad, failures=bad)

    bad = [g.basis_names[i] for i in range(n) if not cobracket(B, basis[i]).is_antisymmetric()]
    rep.add("cobracket is skew", not bad, failures=bad)

    v = validate(B.dual)
    rep.add("co-Jacobi (dual bracket satisfies Jacobi)", v.ok,
            antisymmetry=list(v.antisymmetry), jacobi=list(v.jacobi))

    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = cobracket_matrix(g, B.r, g.c[i][j])
            di = cobracket_matrix(g, B.r, unit(n, i))
            dj = cobracket_matrix(g, B.r, unit(n, j))
            a = act_on_tensor(g, unit(n, i), dj)
            b = act_on_tensor(g, unit(n, j), di)
            rhs = tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
            if lhs != rhs:
                bad.append((i, j))
    rep.add("cobracket is a 1-cocycle", not bad, failures=bad)

    bad = []
    for k in range(n):
        xi = Vec(B.dspace, unit(n, k))
        if dual_coadjoint(B, xi, 1) != dual_coadjoint(B, xi, 2):
            bad.append(k)
    rep.add("coadjoint action of g* on g: both contractions agree", not bad, failures=bad)

    bad = []
    for i in range(n):
        x = basis[i]
        A, As = ad(g, x), ad_star(g, x)
        for j in range(n):
            for k in range(n):
                # <ad*_x e^k, e_j> + <e^k, ad_x e_j>
                if As.matrix[j][k] + A.matrix[k][j]:
                    bad.append((i, j, k))
    rep.add("ad* is minus the transpose of ad", not bad, failures=bad)

    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = g.ad_matrix(g.c[i][j])
            Ai, Aj = g.ad_matrix(unit(n, i)), g.ad_matrix(unit(n, j))
            comm = tuple(tuple(x - y for x, y in zip(ra, rb))
                         for ra, rb in zip(matmul(Ai, Aj, n, n), matmul(Aj, Ai, n, n)))
            if lhs != comm:
                bad.append((i, j))
    rep.add("ad is a representation", not bad, failures=bad)
    return rep
