"""
The double as a 2-cocycle extension (g x| f) x|_alpha f_perp.

Coordinates
-----------
``a``   the algebra a = {(x1, x2) in g + g : x2 - x1 in f} on the basis
        (e_i, e_i) for i < n followed by (0, f_j) for the canonical basis
        f_j of f.  A coordinate vector (x, c) is the pair (x, x + sum c_j f_j);
        read as an element of g x| f it is (x, sum c_j f_j), so the two charts
        share coordinates.
``fp``  f_perp, in coordinates along its canonical basis.  Values that live
        in f_perp are handed out in g* coordinates by the public functions.
``E``   the extension itself: ``a`` coordinates followed by ``fp`` coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bialgebra import QuasitriangularBialgebra
from .double import DSPACE, DirectDouble, build_direct_double, canonical_form
from .errors import DomainError, ExtensionError, InconsistencyError, TagMismatchError
from .lie import LieAlgebra, ad_star, homomorphism_defects, validate
from .linalg import (
    ZERO, LinearMap, SubspaceBasis, Vec, dot, image, image_of, inverse, intersect,
    is_invertible, kernel, lincomb, matmul, solve_right_inverse, unit, vadd, vsub, zeros,
)
from .report import Report

ASPACE = "a"
FSPACE = "f"
FPSPACE = "fp"
ESPACE = "E"


# ---------------------------------------------------------------------------
# general extensions h x|_alpha V
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionAlgebra:
    """h x|_alpha V with bracket ([h1,h2], h1.v2 - h2.v1 + alpha(h1,h2)).

    ``action[i]`` is the matrix of the i-th basis vector of h on V,
    ``alpha[i][j]`` the V-coordinates of alpha(h_i, h_j).
    """
    h: LieAlgebra
    v_dim: int
    action: tuple
    alpha: tuple
    total: LieAlgebra

    @property
    def h_dim(self) -> int:
        return self.h.dim

    @property
    def dim(self) -> int:
        return self.total.dim

    @property
    def space(self) -> str:
        return self.total.space

    def h_part(self, z) -> tuple:
        return tuple(z[:self.h_dim])

    def v_part(self, z) -> tuple:
        return tuple(z[self.h_dim:])

    def join(self, x, v) -> tuple:
        return tuple(x) + tuple(v)

    def act(self, x, v) -> tuple:
        """x . v for x in h-coordinates."""
        out = zeros(self.v_dim)
        for i, xi in enumerate(x):
            if xi:
                out = vadd(out, tuple(xi * t for t in _mv(self.action[i], v)))
        return out

    def alpha_coords(self, x1, x2) -> tuple:
        out = [ZERO] * self.v_dim
        for i, a in enumerate(x1):
            if not a:
                continue
            for j, b in enumerate(x2):
                if b:
                    for k, t in enumerate(self.alpha[i][j]):
                        if t:
                            out[k] += a * b * t
        return tuple(out)

    @property
    def v_subspace(self) -> SubspaceBasis:
        p = self.h_dim
        return SubspaceBasis(self.space, self.dim,
                             tuple(unit(self.dim, p + i) for i in range(self.v_dim)))

    @property
    def h_projection(self) -> LinearMap:
        p = self.h_dim
        return LinearMap.from_function(self.space, self.h.space, self.dim, p, lambda z: z[:p])


def _mv(M, v):
    return tuple(dot(row, v) for row in M)


def _matmul_sq(A, B, k):
    return matmul(A, B, k, k)


def build_extension(h: LieAlgebra, action: Sequence, alpha: Sequence, v_dim: int,
                    name: str | None = None, space: str = ESPACE,
                    v_names: Sequence[str] | None = None) -> ExtensionAlgebra:
    """Check that ``action`` is a representation and ``alpha`` a 2-cocycle, then build h x|_alpha V."""
    p, k = h.dim, v_dim
    act = tuple(tuple(tuple(Fraction(x) for x in row) for row in M) for M in action)
    al = tuple(tuple(tuple(Fraction(x) for x in alpha[i][j]) for j in range(p)) for i in range(p))
    if len(act) != p or any(len(M) != k or any(len(r) != k for r in M) for M in act):
        raise ExtensionError("action must give one v_dim x v_dim matrix per basis vector of h")

    def rho(x):
        M = [[ZERO] * k for _ in range(k)]
        for i, xi in enumerate(x):
            if xi:
                for a in range(k):
                    for b in range(k):
                        M[a][b] += xi * act[i][a][b]
        return tuple(tuple(r) for r in M)

    for i in range(p):
        for j in range(i + 1, p):
            lhs = rho(h.c[i][j])
            ab = _matmul_sq(act[i], act[j], k)
            ba = _matmul_sq(act[j], act[i], k)
            rhs = tuple(vsub(x, y) for x, y in zip(ab, ba))
            if lhs != rhs:
                raise ExtensionError(
                    f"action is not a representation: fails on basis pair ({i}, {j})")

    for i in range(p):
        for j in range(i, p):
            if al[i][j] != tuple(-x for x in al[j][i]):
                raise ExtensionError(f"alpha is not antisymmetric at basis pair ({i}, {j})")

    def alpha_of(x, y):
        out = [ZERO] * k
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for t, val in enumerate(al[i][j]):
                            if val:
                                out[t] += a * b * val
        return tuple(out)

    for i in range(p):
        for j in range(i + 1, p):
            for l in range(j + 1, p):
                acc = zeros(k)
                for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
                    acc = vadd(acc, alpha_of(h.c[a][b], unit(p, c)))
                    acc = vsub(acc, _mv(act[a], al[b][c]))
                if any(acc):
                    raise ExtensionError(
                        f"alpha is not a 2-cocycle: fails on basis triple ({i}, {j}, {l})")

    N = p + k
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(p):
        for j in range(p):
            c[i][j] = list(h.c[i][j]) + list(al[i][j])
        for t in range(k):
            col = tuple(act[i][a][t] for a in range(k))
            c[i][p + t] = [ZERO] * p + list(col)
            c[p + t][i] = [ZERO] * p + [-x for x in col]
    names = tuple(h.basis_names) + tuple(v_names or (f"v{t}" for t in range(k)))
    total = LieAlgebra(name or f"{h.name} x|_alpha V{k}", names, c, space)
    rep = validate(total)
    if not rep.ok:
        raise InconsistencyError(f"extension fails the Lie axioms: {rep.describe()}")
    return ExtensionAlgebra(h, k, act, al, total)


# ---------------------------------------------------------------------------
# maps out of the double
# ---------------------------------------------------------------------------

def _d_coords(B: QuasitriangularBialgebra, d) -> tuple:
    if isinstance(d, Vec):
        if d.space != DSPACE:
            raise TagMismatchError(f"expected a vector of {DSPACE!r}, got {d.space!r}")
        d = d.coords
    if len(d) != 2 * B.n:
        raise ValueError("wrong length for a vector of the double")
    return tuple(d)


def p_plus(B: QuasitriangularBialgebra, d) -> Vec:
    """x + xi -> x + r_plus(xi)."""
    d = _d_coords(B, d)
    return Vec(B.gspace, vadd(d[:B.n], B.r_plus.apply(d[B.n:])))


def p_minus(B: QuasitriangularBialgebra, d) -> Vec:
    d = _d_coords(B, d)
    return Vec(B.gspace, vadd(d[:B.n], B.r_minus.apply(d[B.n:])))


def p_combined(B: QuasitriangularBialgebra, d) -> tuple:
    """x + xi -> (x + r_plus(xi), -(r_plus - r_minus) xi), second part in f-coordinates."""
    d = _d_coords(B, d)
    x, xi = d[:B.n], d[B.n:]
    y = tuple(-t for t in B.r_diff.apply(xi))
    try:
        yc = B.f.coords_of(y)
    except DomainError as exc:
        raise InconsistencyError("(r+ - r-) xi left f") from exc
    return Vec(B.gspace, vadd(x, B.r_plus.apply(xi))), Vec(FSPACE, yc)


def p_matrix(B: QuasitriangularBialgebra) -> LinearMap:
    """p : D -> a in a-coordinates."""
    n, m = B.n, B.f.dim

    def fn(d):
        x, y = p_combined(B, d)
        return x.coords + y.coords
    return LinearMap.from_function(DSPACE, ASPACE, 2 * n, n + m, fn)


def p_pair_matrix(B: QuasitriangularBialgebra, sign: str | None = None) -> LinearMap:
    """p_plus, p_minus (D -> g) or p = (p_plus, p_minus) (D -> g + g)."""
    n = B.n
    if sign == "+":
        return LinearMap.from_function(DSPACE, B.gspace, 2 * n, n, lambda d: p_plus(B, d).coords)
    if sign == "-":
        return LinearMap.from_function(DSPACE, B.gspace, 2 * n, n, lambda d: p_minus(B, d).coords)
    return LinearMap.from_function(DSPACE, "g+g", 2 * n, 2 * n,
                                   lambda d: p_plus(B, d).coords + p_minus(B, d).coords)


def i_map(B: QuasitriangularBialgebra) -> LinearMap:
    """i = (id - r_plus) restricted to f_perp, from fp-coordinates into D."""
    n = B.n

    def fn(c):
        eta = B.f_perp.from_coords(c)
        return tuple(-t for t in B.r_plus.apply(eta)) + eta
    return LinearMap.from_function(FPSPACE, DSPACE, B.f_perp.dim, 2 * n, fn)


def i_inverse(B: QuasitriangularBialgebra, d) -> tuple:
    """The eta in f_perp (g* coordinates) with i(eta) = d."""
    d = _d_coords(B, d)
    eta = d[B.n:]
    if not B.f_perp.contains(eta) or d[:B.n] != tuple(-t for t in B.r_plus.apply(eta)):
        raise InconsistencyError("element of the double is not in the image of i")
    return eta


def one_minus_r_image(B: QuasitriangularBialgebra, sign: str) -> SubspaceBasis:
    """(id - r_sign) g* as a subspace of D."""
    m = B.r_plus if sign == "+" else B.r_minus
    n = B.n
    return SubspaceBasis(DSPACE, 2 * n, tuple(
        tuple(-t for t in m.apply(unit(n, a))) + unit(n, a) for a in range(n)))


def a_subspace_of_pairs(B: QuasitriangularBialgebra) -> SubspaceBasis:
    """The declared basis of a inside g + g."""
    n = B.n
    rows = [unit(n, i) + unit(n, i) for i in range(n)]
    rows += [zeros(n) + fj for fj in B.f.rows]
    return SubspaceBasis("g+g", 2 * n, tuple(rows))


def exactness_report(B: QuasitriangularBialgebra, D: DirectDouble | None = None) -> Report:
    D = D or build_direct_double(B)
    n, m = B.n, B.f.dim
    rep = Report("exact sequence 0 -> f_perp -> D -> g x| f -> 0")
    i, p = i_map(B), p_matrix(B)
    rep.add("i is injective", i.rank() == B.f_perp.dim, rank=i.rank(), dim=B.f_perp.dim)
    rep.add("p is surjective onto a", p.rank() == n + m, rank=p.rank(), dim=n + m)
    im_i, ker_p = image(i), kernel(p)
    rep.add("Im i = Ker p", im_i == ker_p, image_i=im_i, kernel_p=ker_p)
    kp, km = kernel(p_pair_matrix(B, "+")), kernel(p_pair_matrix(B, "-"))
    rep.add("Ker p = Ker p+ ∩ Ker p-", intersect(kp, km) == ker_p)
    for sign, k in (("+", kp), ("-", km)):
        want = one_minus_r_image(B, sign)
        rep.add(f"Ker p{sign} = (id - r{sign}) g*", k == want, kernel=k, expected=want)
    expected = image_of(i_map(B), SubspaceBasis.whole(FPSPACE, B.f_perp.dim))
    rep.add("Ker p = (id - r+) f_perp", ker_p == expected)
    im_pair = image(p_pair_matrix(B))
    rep.add("Im (p+, p-) = a", im_pair == a_subspace_of_pairs(B), image=im_pair)
    rep.add("dim D = dim a + dim f_perp", 2 * n == n + m + B.f_perp.dim)
    abel = all(not any(D.bracket(u, v)) for u in im_i.rows for v in im_i.rows)
    rep.add("i(f_perp) is an abelian subalgebra of D", abel)
    for sign in "+-":
        bad = homomorphism_defects(D.d, B.g, p_pair_matrix(B, sign))
        rep.add(f"p{sign} is a Lie algebra homomorphism", not bad, failures=bad)
    return rep


def choose_section(B: QuasitriangularBialgebra) -> LinearMap:
    """Right inverse s : f -> g* of r_plus - r_minus, from f-coordinates."""
    return solve_right_inverse(B.r_diff, B.f, domain=FSPACE)


# ---------------------------------------------------------------------------
# the double as an extension
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionData:
    B: QuasitriangularBialgebra
    s: LinearMap
    a: LieAlgebra
    ext: ExtensionAlgebra

    @property
    def n(self) -> int:
        return self.B.n

    @property
    def m(self) -> int:
        return self.B.f.dim

    @property
    def action(self) -> tuple:
        return self.ext.action

    @property
    def alpha(self) -> tuple:
        return self.ext.alpha

    # chart conversions -----------------------------------------------------
    def a_to_pair(self, u) -> tuple:
        """a-coordinates -> (x1, x2) in g + g."""
        x = tuple(u[:self.n])
        return x, vadd(x, self.B.f.from_coords(u[self.n:]))

    def pair_to_a(self, x1, x2) -> tuple:
        try:
            return tuple(x1) + self.B.f.coords_of(vsub(x2, x1))
        except DomainError:
            raise DomainError("(x1, x2) is not in a: x2 - x1 must lie in f") from None

    def a_to_semidirect(self, u) -> tuple:
        """a-coordinates -> (x, y) in g x| f with y as a vector of g."""
        return tuple(u[:self.n]), self.B.f.from_coords(u[self.n:])

    def semidirect_to_a(self, x, y) -> tuple:
        return tuple(x) + self.f_coords(y)

    def f_coords(self, y) -> tuple:
        try:
            return self.B.f.coords_of(y)
        except DomainError:
            raise DomainError("argument is not in f") from None

    def fp_coords(self, eta) -> tuple:
        try:
            return self.B.f_perp.coords_of(eta)
        except DomainError:
            raise InconsistencyError("value is not in f_perp") from None

    def s_of(self, y) -> tuple:
        """s(y) in g* for y in f given as a vector of g."""
        return self.s.apply(self.f_coords(y))


def _ad_star(g: LieAlgebra, x, xi) -> tuple:
    n = g.dim
    return tuple(-dot(xi, g.bracket_coords(x, unit(n, k))) for k in range(n))


def alpha_gstar(E: ExtensionData, x1, y1, x2, y2) -> tuple:
    """The cocycle on (x1, y1), (x2, y2) in g x| f, in g* coordinates."""
    g = E.B.g
    s1, s2 = E.s_of(y1), E.s_of(y2)
    arg = vadd(vsub(g.bracket_coords(x1, y2), g.bracket_coords(x2, y1)), g.bracket_coords(y1, y2))
    out = vsub(_ad_star(g, x2, s1), _ad_star(g, x1, s2))
    out = vsub(out, _ad_star(g, y1, s2))
    out = vadd(out, E.s_of(arg))
    if not E.B.f_perp.contains(out):
        raise InconsistencyError("alpha took a value outside f_perp")
    return out


def _vec_or_coords(v, space):
    if isinstance(v, Vec):
        if v.space != space:
            raise TagMismatchError(f"expected a vector of {space!r}, got {v.space!r}")
        return v.coords
    return tuple(v)


def alpha(E: ExtensionData, first, second) -> Vec:
    """alpha((x1, y1), (x2, y2)) for x_i in g and y_i in f (vectors of g); value in g*."""
    (x1, y1), (x2, y2) = first, second
    gs = E.B.gspace
    x1, y1, x2, y2 = (_vec_or_coords(v, gs) for v in (x1, y1, x2, y2))
    for y in (y1, y2):
        if not E.B.f.contains(y):
            raise DomainError("alpha is only defined for y in f")
    return Vec(E.B.dspace, alpha_gstar(E, x1, y1, x2, y2))


def _build_a(B: QuasitriangularBialgebra) -> LieAlgebra:
    n, m = B.n, B.f.dim
    g = B.g
    N = n + m

    def to_pair(u):
        x = tuple(u[:n])
        return x, vadd(x, B.f.from_coords(u[n:]))

    c = []
    for i in range(N):
        row = []
        x1, x2 = to_pair(unit(N, i))
        for j in range(N):
            z1, z2 = to_pair(unit(N, j))
            b1, b2 = g.bracket_coords(x1, z1), g.bracket_coords(x2, z2)
            row.append(tuple(b1) + B.f.coords_of(vsub(b2, b1)))
        c.append(row)
    names = tuple(f"({b},{b})" for b in g.basis_names) + tuple(f"(0,f{j})" for j in range(m))
    return LieAlgebra(f"a({g.name})", names, c, ASPACE)


def build_double_as_extension(B: QuasitriangularBialgebra) -> ExtensionData:
    n, m = B.n, B.f.dim
    k = B.f_perp.dim
    g = B.g
    s = choose_section(B)
    a = _build_a(B)
    N = n + m
    stub = ExtensionData(B, s, a, None)

    action = []
    for i in range(N):
        x, _ = stub.a_to_semidirect(unit(N, i))
        cols = [stub.fp_coords(_ad_star(g, x, B.f_perp.from_coords(unit(k, t)))) for t in range(k)]
        action.append(tuple(tuple(cols[t][r] for t in range(k)) for r in range(k)))

    al = []
    for i in range(N):
        x1, y1 = stub.a_to_semidirect(unit(N, i))
        row = []
        for j in range(N):
            x2, y2 = stub.a_to_semidirect(unit(N, j))
            row.append(stub.fp_coords(alpha_gstar(stub, x1, y1, x2, y2)))
        al.append(tuple(row))
    ext = build_extension(a, action, al, k, name=f"(g x| f) x|_alpha f_perp ({g.name})",
                          v_names=tuple(f"eta{t}" for t in range(k)))
    return ExtensionData(B, s, a, ext)


def splitting_S(E: ExtensionData, x, y) -> Vec:
    """S(x, y) = x + r_plus s(y) - s(y) in D."""
    x = _vec_or_coords(x, E.B.gspace)
    y = _vec_or_coords(y, E.B.gspace)
    sy = E.s_of(y)
    return Vec(DSPACE, vadd(x, E.B.r_plus.apply(sy)) + tuple(-t for t in sy))


def _S_of_a(E: ExtensionData, u) -> tuple:
    x, y = E.a_to_semidirect(u)
    return splitting_S(E, x, y).coords


# ---------------------------------------------------------------------------
# the isomorphism D <-> a x|_alpha f_perp
# ---------------------------------------------------------------------------

def direct_to_extension_coords(E: ExtensionData, d) -> tuple:
    """x + xi -> (x + r+ xi, x + r- xi) x|_alpha (xi - s (r+ - r-) xi), in E coordinates."""
    B = E.B
    n = B.n
    x, xi = tuple(d[:n]), tuple(d[n:])
    diff = B.r_diff.apply(xi)
    u = vadd(x, B.r_plus.apply(xi)) + E.f_coords(tuple(-t for t in diff))
    eta = vsub(xi, E.s_of(diff))
    return u + E.fp_coords(eta)


def extension_to_direct_coords(E: ExtensionData, z) -> tuple:
    """(x1, x2) x|_alpha eta -> x(d) + xi(d) with xi(d) = eta + s(x1 - x2), x(d) = x1 - r+ xi(d)."""
    B = E.B
    N = E.n + E.m
    x1, x2 = E.a_to_pair(z[:N])
    eta = B.f_perp.from_coords(z[N:])
    xi = vadd(eta, E.s_of(vsub(x1, x2)))
    x = vsub(x1, B.r_plus.apply(xi))
    return x + xi


def iso_matrix(E: ExtensionData) -> LinearMap:
    N = 2 * E.n
    return LinearMap.from_function(DSPACE, ESPACE, N, N, lambda d: direct_to_extension_coords(E, d))


def iso_inverse_matrix(E: ExtensionData) -> LinearMap:
    N = 2 * E.n
    return LinearMap.from_function(ESPACE, DSPACE, N, N, lambda z: extension_to_direct_coords(E, z))


def iso_direct_to_extension(E: ExtensionData, d: Vec) -> Vec:
    return Vec(ESPACE, direct_to_extension_coords(E, _d_coords(E.B, d)))


def iso_extension_to_direct(E: ExtensionData, z: Vec) -> Vec:
    if z.space != ESPACE:
        raise TagMismatchError(f"expected a vector of {ESPACE!r}")
    return Vec(DSPACE, extension_to_direct_coords(E, z.coords))


def transferred_form(E: ExtensionData, z1, z2) -> Fraction:
    """<<d1, d2>> = <xi(d1), x(d2)> + <xi(d2), x(d1)> on the extension."""
    z1 = _vec_or_coords(z1, ESPACE)
    z2 = _vec_or_coords(z2, ESPACE)
    n = E.n
    d1, d2 = extension_to_direct_coords(E, z1), extension_to_direct_coords(E, z2)
    return dot(d1[n:], d2[:n]) + dot(d2[n:], d1[:n])


def embed_g(E: ExtensionData, x) -> tuple:
    """x -> (x, x) x|_alpha 0."""
    return tuple(x) + zeros(E.m) + zeros(E.B.f_perp.dim)


def embed_gstar(E: ExtensionData, xi) -> tuple:
    """xi -> (r+ xi, r- xi) x|_alpha (xi - s (r+ - r-) xi), computed from the pair form."""
    B = E.B
    u = E.pair_to_a(B.r_plus.apply(xi), B.r_minus.apply(xi))
    eta = vsub(tuple(xi), E.s_of(B.r_diff.apply(xi)))
    return u + E.fp_coords(eta)


def extension_checks(E: ExtensionData, D: DirectDouble | None = None) -> Report:
    B = E.B
    D = D or build_direct_double(B)
    n, m, k = E.n, E.m, B.f_perp.dim
    N = n + m
    rep = Report("extension")
    ext = E.ext

    comp = B.r_diff @ E.s
    rep.add("(r+ - r-) s = id on f",
            all(comp.apply(unit(m, j)) == B.f.rows[j] for j in range(m)))

    bad = []
    for i in range(n):
        for j in range(m):
            x, y = unit(n, i), B.f.rows[j]
            v = vsub(_ad_star(B.g, x, E.s_of(y)), E.s_of(B.g.bracket_coords(x, y)))
            if not B.f_perp.contains(v):
                bad.append((i, j))
    rep.add("ad*_x s(y) - s([x, y]) lies in f_perp", not bad, failures=bad)

    bad = [(i, j) for i in range(N) for j in range(N)
           if ext.alpha[i][j] != tuple(-t for t in ext.alpha[j][i])]
    rep.add("alpha is antisymmetric", not bad, failures=bad)

    bad = []
    for i in range(N):
        for j in range(i + 1, N):
            for l in range(j + 1, N):
                acc = zeros(k)
                for a1, b1, c1 in ((i, j, l), (j, l, i), (l, i, j)):
                    acc = vadd(acc, ext.alpha_coords(E.a.c[a1][b1], unit(N, c1)))
                    acc = vsub(acc, ext.act(unit(N, a1), ext.alpha[b1][c1]))
                if any(acc):
                    bad.append((i, j, l))
    rep.add("alpha is a 2-cocycle", not bad, failures=bad)

    bad = []
    for i in range(N):
        Si = _S_of_a(E, unit(N, i))
        for j in range(N):
            Sj = _S_of_a(E, unit(N, j))
            defect = vsub(D.bracket(Si, Sj), _S_of_a(E, E.a.c[i][j]))
            got = i_inverse(B, defect)
            if E.fp_coords(got) != ext.alpha[i][j]:
                bad.append((i, j))
    rep.add("alpha by formula equals the commutator defect of S", not bad, failures=bad)

    bad = []
    for i in range(N):
        u = unit(N, i)
        Su = _S_of_a(E, u)
        x, _ = E.a_to_semidirect(u)
        for t in range(k):
            eta = B.f_perp.rows[t]
            lhs = i_inverse(B, D.bracket(Su, i_map(B).apply(unit(k, t))))
            if lhs != _ad_star(B.g, x, eta):
                bad.append((i, t))
    rep.add("induced action is (x, y) . eta = ad*_x eta", not bad, failures=bad)

    bad = []
    for i in range(N):
        Su = _S_of_a(E, unit(N, i))
        x, yc = p_combined(B, Su)
        if x.coords + yc.coords != unit(N, i):
            bad.append(i)
    rep.add("p S = id", not bad, failures=bad)

    phi, psi = iso_matrix(E), iso_inverse_matrix(E)
    rep.add("iso is invertible", is_invertible(phi))
    rep.add("inverse map from the Manin-triple formulas inverts iso",
            (psi @ phi) == LinearMap.identity(DSPACE, 2 * n)
            and (phi @ psi) == LinearMap.identity(ESPACE, 2 * n))
    bad = homomorphism_defects(D.d, ext.total, phi)
    rep.add("iso carries the direct bracket to the extension bracket", not bad, failures=bad)

    bad = [i for i in range(n) if phi.column(i) != embed_g(E, unit(n, i))]
    rep.add("g embeds as x -> (x, x) x| 0", not bad, failures=bad)
    bad = [a for a in range(n) if phi.column(n + a) != embed_gstar(E, unit(n, a))]
    rep.add("g* embeds as xi -> (r+ xi, r- xi) x| (xi - s(r+ - r-) xi)", not bad, failures=bad)

    bad = []
    for a in range(2 * n):
        for b in range(a, 2 * n):
            lhs = transferred_form(E, phi.column(a), phi.column(b))
            if lhs != canonical_form(D, unit(2 * n, a), unit(2 * n, b)):
                bad.append((a, b))
    rep.add("transferred form equals the canonical form", not bad, failures=bad)
    return rep
