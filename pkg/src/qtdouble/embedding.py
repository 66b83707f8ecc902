"""
The image of g* inside the extension model, and subalgebras b^beta_W of
extensions h x|_alpha V in general.

Quotients g+/n+, g-/n- and f_perp/W are handled through
``linalg.quotient_chart``: a quotient vector is a coordinate vector along the
fixed coordinate complement of the subspace being divided out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import QuasitriangularBialgebra
from .errors import DomainError, ExtensionError, InconsistencyError, UnsolvableError
from .extension import (
    ASPACE, FPSPACE, ExtensionAlgebra, ExtensionData, a_subspace_of_pairs, embed_g,
    embed_gstar, p_matrix,
)
from .lie import closure_defect
from .linalg import (
    LinearMap, QuotientChart, SubspaceBasis, image, image_of, intersect,
    is_invertible, kernel, lincomb, quotient_chart, restrict, solve_right_inverse, solve_rows,
    span, unit, vadd, vsub, zeros,
)
from .report import Report


@dataclass(frozen=True)
class CayleyData:
    """g_pm = Im r_pm, n_pm = r_pm(Ker r_mp) and theta : g+/n+ -> g-/n-.

    ``chart_plus`` lives on coordinates along the canonical basis of g_plus
    (likewise for minus), so pi_plus(x) = chart_plus.project(g_plus.coords_of(x)).
    """
    g_plus: SubspaceBasis
    g_minus: SubspaceBasis
    n_plus: SubspaceBasis
    n_minus: SubspaceBasis
    chart_plus: QuotientChart
    chart_minus: QuotientChart
    theta: LinearMap

    def pi_plus(self, x) -> tuple:
        return self.chart_plus.project(self.g_plus.coords_of(x))

    def pi_minus(self, x) -> tuple:
        return self.chart_minus.project(self.g_minus.coords_of(x))

    def lift_plus(self, c) -> tuple:
        return self.g_plus.from_coords(self.chart_plus.lift(c))

    def lift_minus(self, c) -> tuple:
        return self.g_minus.from_coords(self.chart_minus.lift(c))


def _sub_chart(outer: SubspaceBasis, inner: SubspaceBasis, tag: str, name: str) -> QuotientChart:
    inner_c = span(tag, outer.dim, [outer.coords_of(v) for v in inner.rows])
    return quotient_chart(inner_c, name)


def cayley(B: QuasitriangularBialgebra) -> CayleyData:
    rp, rm = B.r_plus, B.r_minus
    gp, gm = image(rp), image(rm)
    np_ = image_of(rp, kernel(rm))
    nm = image_of(rm, kernel(rp))
    cp = _sub_chart(gp, np_, "g+", "g+/n+")
    cm = _sub_chart(gm, nm, "g-", "g-/n-")
    n = B.n
    ds = B.dspace
    pp = LinearMap.from_function(ds, cp.name, n, cp.dim,
                                 lambda xi: cp.project(gp.coords_of(rp.apply(xi))))
    pm = LinearMap.from_function(ds, cm.name, n, cm.dim,
                                 lambda xi: cm.project(gm.coords_of(rm.apply(xi))))
    if not kernel(pm).contains_subspace(kernel(pp)):
        raise InconsistencyError("Cayley transform is not well defined")
    R = solve_right_inverse(pp, SubspaceBasis.whole(cp.name, cp.dim), domain=cp.name)
    theta = pm @ R
    if not is_invertible(theta):
        raise InconsistencyError("Cayley transform is not invertible")
    return CayleyData(gp, gm, np_, nm, cp, cm, theta)


def cayley_checks(B: QuasitriangularBialgebra, C: CayleyData | None = None) -> Report:
    C = C or cayley(B)
    g = B.g
    rep = Report("Cayley transform")
    for lab, big, small in (("+", C.g_plus, C.n_plus), ("-", C.g_minus, C.n_minus)):
        rep.add(f"n{lab} is contained in g{lab}", big.contains_subspace(small))
        rep.add(f"g{lab} is a subalgebra", closure_defect(g, big) is None)
        ok = all(small.contains(g.bracket_coords(u, v)) for u in big.rows for v in small.rows)
        rep.add(f"n{lab} is an ideal of g{lab}", ok)
    # well-definedness on representatives: theta(pi+ r+ xi) = pi- r- xi for every xi
    n = B.n
    bad = [a for a in range(n)
           if C.theta.apply(C.pi_plus(B.r_plus.apply(unit(n, a))))
           != C.pi_minus(B.r_minus.apply(unit(n, a)))]
    rep.add("theta(r+ xi + n+) = r- xi + n-", not bad, failures=bad)
    rep.add("theta is invertible", is_invertible(C.theta))
    bad = []
    gp = C.g_plus.rows
    for i in range(len(gp)):
        for j in range(i + 1, len(gp)):
            lhs = C.theta.apply(C.pi_plus(g.bracket_coords(gp[i], gp[j])))
            a = C.lift_minus(C.theta.apply(C.pi_plus(gp[i])))
            b = C.lift_minus(C.theta.apply(C.pi_plus(gp[j])))
            if lhs != C.pi_minus(g.bracket_coords(a, b)):
                bad.append((i, j))
    rep.add("theta is a Lie algebra homomorphism", not bad, failures=bad)
    return rep


def _pairs_to_a(E: ExtensionData, sub: SubspaceBasis) -> SubspaceBasis:
    n = E.n
    return span(ASPACE, n + E.m, [E.pair_to_a(r[:n], r[n:]) for r in sub.rows])


def build_b(E: ExtensionData, C: CayleyData | None = None) -> SubspaceBasis:
    """b = {(x+, x-) in g+ + g- : theta pi+ x+ = pi- x-} ∩ a, in a-coordinates.

    Cross-checked against p(g*); a mismatch raises InconsistencyError.
    """
    B = E.B
    C = C or cayley(B)
    n = B.n
    kp, km = C.g_plus.dim, C.g_minus.dim
    cond = LinearMap.from_function(
        "g+(+)g-", C.chart_minus.name, kp + km, C.chart_minus.dim,
        lambda v: vsub(C.theta.apply(C.chart_plus.project(v[:kp])),
                       C.chart_minus.project(v[kp:])))
    sols = kernel(cond)
    pairs = span("g+g", 2 * n, [C.g_plus.from_coords(v[:kp]) + C.g_minus.from_coords(v[kp:])
                                for v in sols.rows])
    b = _pairs_to_a(E, intersect(pairs, a_subspace_of_pairs(B)))
    pg = image_of(p_matrix(B), span("D", 2 * n, [unit(2 * n, n + a) for a in range(n)]))
    if pg != b:
        raise InconsistencyError("b from the Cayley transform differs from p(g*)")
    return b


def compute_W(E: ExtensionData) -> SubspaceBasis:
    """Ker r+ ∩ Ker r- in g*, cross-checked against (image of g*) ∩ V."""
    B = E.B
    W = intersect(kernel(B.r_plus), kernel(B.r_minus))
    img = gstar_image(E)
    inter = intersect(img, E.ext.v_subspace)
    N = E.n + E.m
    via_ext = span(B.dspace, B.n, [B.f_perp.from_coords(r[N:]) for r in inter.rows])
    if via_ext != W:
        raise InconsistencyError("W = Ker r+ ∩ Ker r- disagrees with (image of g*) ∩ V")
    return W


def gstar_image(E: ExtensionData) -> SubspaceBasis:
    n = E.n
    return span(E.ext.space, 2 * n, [embed_gstar(E, unit(n, a)) for a in range(n)])


def g_image(E: ExtensionData) -> SubspaceBasis:
    n = E.n
    return span(E.ext.space, 2 * n, [embed_g(E, unit(n, i)) for i in range(n)])


# ---------------------------------------------------------------------------
# subalgebras b^beta_W of h x|_alpha V
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraTriple:
    """b in h, a b-stable W in V, and beta : b -> V/W in chart coordinates.

    ``beta`` takes coordinates along b's canonical basis.
    """
    b: SubspaceBasis
    W: SubspaceBasis
    chart: QuotientChart
    beta: LinearMap

    def beta_of(self, x) -> tuple:
        return self.beta.apply(self.b.coords_of(x))


def triple_checks(ext: ExtensionAlgebra, T: SubalgebraTriple) -> Report:
    """W is b-invariant and the coboundary of beta is -sigma(alpha) on b."""
    rep = Report("b^beta_W hypotheses")
    h = ext.h
    sigma = T.chart.project
    rep.add("b is a subalgebra of h", closure_defect(h, T.b) is None)
    ok = all(T.W.contains(ext.act(x, w)) for x in T.b.rows for w in T.W.rows)
    rep.add("W is b-invariant", ok)
    bad = []
    rows = T.b.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            a, b = rows[i], rows[j]
            act_a = sigma(ext.act(a, T.chart.lift(T.beta_of(b))))
            act_b = sigma(ext.act(b, T.chart.lift(T.beta_of(a))))
            d = vsub(vsub(act_a, act_b), T.beta_of(h.bracket_coords(a, b)))
            want = tuple(-t for t in sigma(ext.alpha_coords(a, b)))
            if d != want:
                bad.append((i, j))
    rep.add("d beta = -sigma alpha on b", not bad, failures=bad)
    return rep


def build_b_beta_W(ext: ExtensionAlgebra, T: SubalgebraTriple) -> SubspaceBasis:
    """{(x, v) : x in b, v + W = beta(x)} as a subspace of the extension."""
    rows = [tuple(x) + T.chart.lift(T.beta_of(x)) for x in T.b.rows]
    rows += [zeros(ext.h_dim) + tuple(w) for w in T.W.rows]
    k = span(ext.space, ext.dim, rows)
    bad = closure_defect(ext.total, k)
    if bad is not None:
        raise ExtensionError(f"b^beta_W is not closed under the bracket: basis pair {bad}")
    return k


def decompose_subalgebra(ext: ExtensionAlgebra, k: SubspaceBasis) -> SubalgebraTriple:
    """k = b^beta_W with b = p(k), W = k ∩ V, beta(x) = q(the element of k over x) + W."""
    bad = closure_defect(ext.total, k)
    if bad is not None:
        raise ExtensionError(f"not a subalgebra: bracket of basis pair {bad} leaves the subspace")
    p = ext.h_dim
    b = image_of(ext.h_projection, k)
    inter = intersect(k, ext.v_subspace)
    W = span("V", ext.v_dim, [r[p:] for r in inter.rows])
    chart = quotient_chart(W, "V/W")
    heads = [r[:p] for r in k.rows]
    cols = []
    for x in b.rows:
        lam = solve_rows(tuple(zip(*heads)), len(heads), x)
        v = lincomb(lam, [r[p:] for r in k.rows], ext.v_dim)
        cols.append(chart.project(v))
    beta = LinearMap.from_columns("b", chart.name, b.dim, chart.dim, cols)
    return SubalgebraTriple(b, W, chart, beta)


# ---------------------------------------------------------------------------
# the g* triple
# ---------------------------------------------------------------------------

def _pbar_matrix(B: QuasitriangularBialgebra) -> tuple:
    """Rows of xi -> (r+ xi, r- xi), 2n x n."""
    return B.r_plus.matrix + B.r_minus.matrix


def beta_cochain(E: ExtensionData, u, W: SubspaceBasis | None = None,
                 b: SubspaceBasis | None = None) -> tuple:
    """beta(x1, x2) = pbar^{-1}(x1, x2) - sigma s(x1 - x2), in f_perp/W chart coordinates.

    ``u`` is an element of b in a-coordinates.
    """
    B = E.B
    b = b or build_b(E)
    if not b.contains(u):
        raise DomainError("beta is only defined on b")
    chart = fp_over_W_chart(E, W)
    x1, x2 = E.a_to_pair(u)
    try:
        xi = solve_rows(_pbar_matrix(B), B.n, x1 + x2)
    except UnsolvableError:
        raise InconsistencyError("(x1, x2) in b has no preimage under pbar") from None
    v = vsub(xi, E.s_of(vsub(x1, x2)))
    return chart.project(E.fp_coords(v))


def fp_over_W_chart(E: ExtensionData, W: SubspaceBasis | None = None) -> QuotientChart:
    W = W if W is not None else compute_W(E)
    Wfp = span("V", E.B.f_perp.dim, [E.fp_coords(w) for w in W.rows])
    return quotient_chart(Wfp, "V/W")


def gstar_triple(E: ExtensionData) -> SubalgebraTriple:
    W = compute_W(E)
    b = build_b(E)
    chart = fp_over_W_chart(E, W)
    cols = [beta_cochain(E, x, W, b) for x in b.rows]
    beta = LinearMap.from_columns("b", chart.name, b.dim, chart.dim, cols)
    return SubalgebraTriple(b, chart.subspace, chart, beta)


def verify_gstar_image(E: ExtensionData) -> Report:
    B = E.B
    n = B.n
    rep = Report("image of g*")
    img = gstar_image(E)
    rep.add("g* embeds injectively", img.dim == n, dim=img.dim)
    T = gstar_triple(E)
    rep.extend(triple_checks(E.ext, T))
    built = build_b_beta_W(E.ext, T)
    rep.add("image of g* equals b^beta_W", built == img, image=img, b_beta_W=built)
    rep.add("dim b^beta_W = dim b + dim W", built.dim == T.b.dim + T.W.dim)
    pbar = LinearMap(B.dspace, "g+g", n, 2 * n, _pbar_matrix(B))
    W = compute_W(E)
    rep.add("pbar : g*/W -> b is well defined (kernel is W)", kernel(pbar) == W)
    rep.add("pbar is onto b", pbar.rank() == T.b.dim)
    back = decompose_subalgebra(E.ext, img)
    rep.add("decomposing the image recovers (b, W, beta)", back == T)
    rep.add("decompose . build is the identity", decompose_subalgebra(E.ext, built) == T)
    gi = g_image(E)
    rep.add("g embeds as the diagonal (x, x) x| 0", gi.dim == n
            and closure_defect(E.ext.total, gi) is None)
    return rep
