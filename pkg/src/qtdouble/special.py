"""
Factorizable and triangular special cases, checked against the general machinery.

Factorizable: f_perp = 0, so the double is a = g + g.  Triangular: f = 0, so
the double is g x| g* with the coadjoint action, and g* sits inside it as
{(r+ xi, xi)}.
"""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import Kind, QuasitriangularBialgebra, classify
from .double import build_direct_double, form_value, invariance_defects, lagrangian_report
from .embedding import build_b, cayley, g_image, gstar_image, gstar_triple
from .errors import PreconditionError
from .extension import (
    ExtensionAlgebra, ExtensionData, _ad_star, build_double_as_extension, build_extension,
    p_matrix,
)
from .lie import (
    LieAlgebra, ad_star, change_basis, direct_sum, has_nondegenerate_invariant_form,
    homomorphism_defects, is_invariant_form, validate,
)
from .linalg import (
    ZERO, LinearMap, SubspaceBasis, Tensor2, add_subspaces, dot, image_of, intersect,
    inverse, is_invertible, kernel, quotient_chart, rank_of, solve_rows, span, unit, vsub,
    zeros,
)
from .report import Report


def _require(B: QuasitriangularBialgebra, kind: Kind) -> None:
    got = classify(B)
    if got != kind:
        raise PreconditionError(f"expected a {kind.value} bialgebra, got {got.value}")


# ---------------------------------------------------------------------------
# factorizable
# ---------------------------------------------------------------------------

def pair_chart(E: ExtensionData) -> LinearMap:
    """a-coordinates -> g + g."""
    n = E.n
    return LinearMap.from_function("a", "g+g", n + E.m, 2 * n,
                                   lambda u: (lambda p: p[0] + p[1])(E.a_to_pair(u)))


def verify_factorizable(B: QuasitriangularBialgebra) -> Report:
    _require(B, Kind.FACTORIZABLE)
    n = B.n
    rep = Report("factorizable double is g + g")
    D = build_direct_double(B)
    E = build_double_as_extension(B)
    rep.add("f_perp = 0", B.f_perp.dim == 0)
    rep.add("a = g + g", E.m == n)
    gg = direct_sum(B.g, B.g, name=f"{B.g.name}+{B.g.name}", space="g+g")
    P = pair_chart(E)
    bad = homomorphism_defects(E.a, gg, P)
    rep.add("a -> g + g is a Lie algebra isomorphism", not bad and is_invertible(P), failures=bad)
    p = p_matrix(B)
    bad = homomorphism_defects(D.d, E.a, p)
    rep.add("p : D -> a is a Lie algebra isomorphism", not bad and is_invertible(p), failures=bad)
    moved = change_basis(gg, P.columns())
    rep.add("extension structure constants equal those of g + g after the change of basis",
            moved.c == E.ext.total.c)
    diag = span("g+g", 2 * n, [unit(n, i) + unit(n, i) for i in range(n)])
    Pp = P @ p
    rep.add("image of g is the diagonal", image_of(Pp, D.g_block) == diag)
    b = build_b(E)
    rep.add("image of g* is b", image_of(p, D.dual_block) == b)
    pairs = span("g+g", 2 * n, [B.r_plus.apply(unit(n, a)) + B.r_minus.apply(unit(n, a))
                                for a in range(n)])
    rep.add("image of g* is {(r+ xi, r- xi)}", image_of(Pp, D.dual_block) == pairs)
    return rep


# ---------------------------------------------------------------------------
# triangular
# ---------------------------------------------------------------------------

def coadjoint_semidirect(g: LieAlgebra, space: str = "E") -> ExtensionAlgebra:
    """g x| g* with the coadjoint action and no cocycle."""
    n = g.dim
    action = [ad_star(g, g.basis(i)).matrix for i in range(n)]
    alpha = [[zeros(n)] * n for _ in range(n)]
    return build_extension(g, action, alpha, n, name=f"{g.name} x| {g.name}*", space=space,
                           v_names=tuple(f"{b}*" for b in g.basis_names))


def rplus_bar_inverse(B: QuasitriangularBialgebra, y) -> tuple:
    """A preimage of y in g_plus under r_plus, in g* coordinates (defined mod Ker r_plus)."""
    return solve_rows(B.r_plus.matrix, B.n, y)


def verify_triangular(B: QuasitriangularBialgebra) -> Report:
    _require(B, Kind.TRIANGULAR)
    g, n = B.g, B.n
    rep = Report("triangular double is g x| g*")
    E = build_double_as_extension(B)
    rep.add("f = 0", B.f.dim == 0)
    rep.add("s is the empty map", E.s.domain_dim == 0)
    rep.add("alpha = 0", not any(any(v) for row in E.alpha for v in row))
    rep.add("f_perp is all of g* with the standard basis",
            B.f_perp == SubspaceBasis.whole(B.dspace, n))
    sd = coadjoint_semidirect(g)
    rep.add("extension equals g x| g* with the coadjoint action", sd.total.c == E.ext.total.c)

    img = gstar_image(E)
    expected = span("E", 2 * n, [B.r_plus.apply(unit(n, a)) + unit(n, a) for a in range(n)])
    rep.add("image of g* is {(r+ xi, xi)}", img == expected)

    # (id, sigma^-1 beta)(g_plus) + Ker r_plus, with beta = rbar_plus^-1 computed directly
    C = cayley(B)
    W = kernel(B.r_plus)
    chart = quotient_chart(W, "g*/Ker r+")
    rows = [tuple(u) + chart.lift(chart.project(rplus_bar_inverse(B, u))) for u in C.g_plus.rows]
    rows += [zeros(n) + tuple(w) for w in W.rows]
    graph = span("E", 2 * n, rows)
    rep.add("image of g* is (id, sigma^-1 beta)(g+) + Ker r+", graph == img)

    T = gstar_triple(E)
    rep.add("b is the diagonal copy of g+", T.b.rows == C.g_plus.rows)
    rep.add("W = Ker r+", T.W.rows == W.rows)
    same = all(T.beta_of(u) == chart.project(rplus_bar_inverse(B, u)) for u in C.g_plus.rows)
    rep.add("beta = rbar_plus^-1 (matches the general cochain)", same)

    bad = []
    gp = C.g_plus.rows
    lift = chart.lift
    for i in range(len(gp)):
        for j in range(i + 1, len(gp)):
            x, y = gp[i], gp[j]
            lhs = chart.project(rplus_bar_inverse(B, g.bracket_coords(x, y)))
            bx = lift(chart.project(rplus_bar_inverse(B, x)))
            by = lift(chart.project(rplus_bar_inverse(B, y)))
            rhs = chart.project(vsub(_ad_star(g, x, by), _ad_star(g, y, bx)))
            if lhs != rhs:
                bad.append((i, j))
    rep.add("beta is a 1-cocycle for the coadjoint action of g+", not bad, failures=bad)
    return rep


def manin_triple_jjstar(B: QuasitriangularBialgebra) -> Report:
    """j(x) = (x, 0), j*(xi) = (r+ xi, xi) give a Manin triple in g x| g*."""
    _require(B, Kind.TRIANGULAR)
    g, n = B.g, B.n
    N = 2 * n
    rep = Report("Manin triple (g x| g*, j(g), j*(g*))")
    sd = coadjoint_semidirect(g)
    j = LinearMap.from_function(B.gspace, "E", n, N, lambda x: tuple(x) + zeros(n))
    js = LinearMap.from_function(B.dspace, "E", n, N,
                                 lambda xi: B.r_plus.apply(xi) + tuple(xi))
    bad = homomorphism_defects(g, sd.total, j)
    rep.add("j is a Lie algebra homomorphism", not bad, failures=bad)
    bad = homomorphism_defects(B.dual, sd.total, js)
    rep.add("j* is a Lie algebra homomorphism", not bad, failures=bad)
    form = Tensor2(("E", "E"), tuple(
        tuple(Fraction(1) if (b == a + n or a == b + n) else ZERO for b in range(N))
        for a in range(N)))
    rep.add("form is nondegenerate", rank_of(form.entries, N) == N)
    bad = invariance_defects(sd.total, form)
    rep.add("form is invariant", not bad, failures=bad[:10])
    jg = image_of(j, SubspaceBasis.whole(B.gspace, n))
    jd = image_of(js, SubspaceBasis.whole(B.dspace, n))
    lagrangian_report(rep, "j(g)", sd.total, form, jg)
    lagrangian_report(rep, "j*(g*)", sd.total, form, jd)
    rep.add("j(g) ∩ j*(g*) = 0", intersect(jg, jd).dim == 0)
    rep.add("j(g) + j*(g*) is everything", add_subspaces(jg, jd).dim == N)
    return rep


def quasi_frobenius_gamma(B: QuasitriangularBialgebra) -> Tensor2:
    """gamma(u_i, u_j) = <beta(u_i), u_j> on the canonical basis of g+."""
    _require(B, Kind.TRIANGULAR)
    gp = cayley(B).g_plus.rows
    xis = [rplus_bar_inverse(B, u) for u in gp]
    k = len(gp)
    return Tensor2(("g+", "g+"), tuple(tuple(dot(xis[i], gp[j]) for j in range(k))
                                       for i in range(k)))


def quasi_frobenius_report(B: QuasitriangularBialgebra) -> Report:
    gamma = quasi_frobenius_gamma(B)
    gp = cayley(B).g_plus
    k = gp.dim
    G = gamma.entries
    rep = Report("quasi-Frobenius form on g+")
    rep.add("gamma is antisymmetric", gamma.is_antisymmetric())

    def gam(a, b):
        return dot(a, [dot(G[i], b) for i in range(k)])

    bad = []
    br = [[gp.coords_of(B.g.bracket_coords(gp.rows[i], gp.rows[j])) for j in range(k)]
          for i in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                s = (gam(br[a][b], unit(k, c)) + gam(br[b][c], unit(k, a))
                     + gam(br[c][a], unit(k, b)))
                if s:
                    bad.append((a, b, c))
    rep.add("gamma is a 2-cocycle", not bad, failures=bad)
    rep.add("gamma is nondegenerate", gamma.rank() == k, rank=gamma.rank(), dim=k)
    return rep


# ---------------------------------------------------------------------------
# dual numbers
# ---------------------------------------------------------------------------

def dual_numbers(g: LieAlgebra) -> LieAlgebra:
    """g[t]/(t^2) on the basis (e_i, t e_i): [(a,b),(c,d)] = ([a,c], [a,d] + [b,c])."""
    n = g.dim
    N = 2 * n
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = g.c[i][j][k]
                c[i][j][k] = v
                c[i][n + j][n + k] = v
                c[n + i][j][n + k] = v
    names = tuple(g.basis_names) + tuple(f"t{b}" for b in g.basis_names)
    return LieAlgebra(f"{g.name}[t]/(t^2)", names, c, "g[t]")


def _check_form(g: LieAlgebra, form) -> tuple:
    n = g.dim
    if form is None:
        found = has_nondegenerate_invariant_form(g)
        if found is False:
            raise PreconditionError(f"{g.name} admits no nondegenerate invariant bilinear form")
        raise PreconditionError("an invariant nondegenerate form on g must be supplied")
    K = form.entries if isinstance(form, Tensor2) else tuple(tuple(Fraction(x) for x in r)
                                                              for r in form)
    if len(K) != n or any(len(r) != n for r in K):
        raise PreconditionError("form has the wrong shape")
    if not is_invariant_form(g, K):
        hint = "" if has_nondegenerate_invariant_form(g) is not False else \
            f"; {g.name} admits no nondegenerate invariant form"
        raise PreconditionError("form is not invariant" + hint)
    if rank_of(K, n) != n:
        hint = "" if has_nondegenerate_invariant_form(g) is not False else \
            f"; {g.name} admits no nondegenerate invariant form"
        raise PreconditionError("form is degenerate" + hint)
    return K


def dual_number_double(B: QuasitriangularBialgebra, form=None) -> Report:
    """The triangular double as g[t]/(t^2), via phi : g -> g*, <phi(b), z> = K(b, z)."""
    _require(B, Kind.TRIANGULAR)
    g, n = B.g, B.n
    K = _check_form(g, form)
    N = 2 * n
    rep = Report("triangular double as dual numbers")
    L = dual_numbers(g)
    v = validate(L)
    rep.add("g[t]/(t^2) is a Lie algebra", v.ok)
    phi = LinearMap.from_function(B.gspace, B.dspace, n, n,
                                  lambda b: tuple(dot(b, [K[i][j] for i in range(n)])
                                                  for j in range(n)))
    phi_inv = inverse(phi)
    Phi = LinearMap.from_function("E", "g[t]", N, N,
                                  lambda z: tuple(z[:n]) + phi_inv.apply(z[n:]))
    sd = coadjoint_semidirect(g)
    bad = homomorphism_defects(sd.total, L, Phi)
    rep.add("(x, xi) -> x + t phi^-1(xi) is a Lie algebra isomorphism",
            not bad and is_invertible(Phi), failures=bad)

    E = build_double_as_extension(B)
    img = image_of(Phi, gstar_image(E))
    C = cayley(B)
    W = kernel(B.r_plus)
    chart = quotient_chart(W, "g*/Ker r+")
    rows = [tuple(u) + phi_inv.apply(chart.lift(chart.project(rplus_bar_inverse(B, u))))
            for u in C.g_plus.rows]
    rows += [zeros(n) + phi_inv.apply(w) for w in W.rows]
    expected = span("g[t]", N, rows)
    rep.add("image of g* is (id + t sigma^-1 beta)(g+) + t phi^-1(Ker r+)", img == expected)
    perp = kernel(LinearMap.from_function("g", "g+*", n, C.g_plus.dim,
                                          lambda b: tuple(form_value(Tensor2(("g", "g"), K), b, u)
                                                          for u in C.g_plus.rows)))
    ident = span("g", n, [phi_inv.apply(w) for w in W.rows])
    rep.add("phi^-1(Ker r+) is the K-orthogonal of g+", ident == perp)
    gi = image_of(Phi, g_image(E))
    rep.add("image of g is g (the t^0 part)",
            gi == span("g[t]", N, [unit(N, i) for i in range(n)]))
    return rep
