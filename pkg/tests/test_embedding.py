import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qtdouble import fixtures as F
from qtdouble.errors import DomainError, ExtensionError
from qtdouble.embedding import (
    SubalgebraTriple, beta_cochain, build_b, build_b_beta_W, cayley, cayley_checks,
    compute_W, decompose_subalgebra, gstar_image, gstar_triple, triple_checks,
    verify_gstar_image,
)
from qtdouble.extension import build_double_as_extension
from qtdouble.linalg import LinearMap, SubspaceBasis, quotient_chart, span, unit, zeros
from qtdouble.special import coadjoint_semidirect

from conftest import ALL, small_q


@pytest.fixture(scope="module")
def ext():
    return {k: build_double_as_extension(F.load(k)) for k in ALL}


def sympy_span(vectors, n):
    """Canonical basis via sympy's rref, as tuples of Fractions."""
    from fractions import Fraction as Q
    if not vectors:
        return ()
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in vectors])
    red, _ = M.rref()
    rows = [tuple(Q(int(x.p), int(x.q)) for x in red.row(i)) for i in range(red.rows)]
    return tuple(r for r in rows if any(r))


def sym_matrix(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.matrix])


def test_cayley_sl2_against_sympy():
    B = F.load("sl2_standard")
    C = cayley(B)
    n = 3
    rp, rm = sym_matrix(B.r_plus), sym_matrix(B.r_minus)
    gp = sympy_span([tuple(rp.col(j)) for j in range(n)], n)
    ker_m = [tuple(v) for v in rm.nullspace()]
    np_ = sympy_span([tuple(rp * sympy.Matrix(v)) for v in ker_m], n)
    conv = lambda rows: tuple(tuple(sympy.Rational(x.numerator, x.denominator) for x in r) for r in rows)
    assert conv(C.g_plus.rows) == conv(gp)
    assert conv(C.n_plus.rows) == conv(np_)


def test_cayley_triangular_is_identity():
    C = cayley(F.load("ax_b"))
    assert C.g_plus == C.g_minus
    k = C.theta.domain_dim
    assert C.theta.matrix == tuple(unit(k, i) for i in range(k))


def test_cayley_zero_r():
    C = cayley(F.load("sl2_zero"))
    assert C.g_plus.dim == C.g_minus.dim == C.n_plus.dim == C.n_minus.dim == 0
    assert C.theta.domain_dim == C.theta.codomain_dim == 0


@pytest.mark.parametrize("name", ALL)
def test_cayley_invariants(name):
    rep = cayley_checks(F.load(name))
    assert rep.passed, rep.first_failure()


def test_b_examples(ext):
    assert build_b(ext["sl2_standard"]).dim == 3
    b = build_b(ext["ax_b"])
    E = ext["ax_b"]
    C = cayley(E.B)
    # diagonal {(y, y)}: in a-coordinates there is no f-part
    assert b.rows == C.g_plus.rows
    assert build_b(ext["sl2_zero"]).dim == 0


def test_W_examples(ext):
    assert compute_W(ext["sl2_standard"]).dim == 0
    assert compute_W(ext["sl2_zero"]) == SubspaceBasis.whole("g*", 3)
    E = ext["ax_b"]
    rp = sym_matrix(E.B.r_plus)
    assert compute_W(E).dim == len(rp.nullspace())
    E = ext["sl2_jordanian"]
    assert compute_W(E).dim == len(sym_matrix(E.B.r_plus).nullspace()) == 1


def test_beta_examples(ext):
    E = ext["oscillator"]
    assert not any(beta_cochain(E, zeros(E.n + E.m)))
    E = ext["sl2_standard"]
    b = build_b(E)
    assert all(beta_cochain(E, u) == () for u in b.rows)


def test_beta_outside_b(ext):
    E = ext["sl2_zero"]
    with pytest.raises(DomainError):
        beta_cochain(E, unit(3, 0))


@pytest.mark.parametrize("name", ALL)
def test_coboundary_of_beta(name, ext):
    E = ext[name]
    rep = triple_checks(E.ext, gstar_triple(E))
    assert rep.passed, rep.first_failure()


def test_beta_nonzero_on_general_fixture(ext):
    T = gstar_triple(ext["oscillator"])
    assert not T.beta.is_zero()


@pytest.mark.parametrize("name", ALL)
def test_gstar_image(name, ext):
    rep = verify_gstar_image(ext[name])
    assert rep.passed, rep.first_failure()


def test_gstar_image_zero_r(ext):
    E = ext["sl2_zero"]
    T = gstar_triple(E)
    assert T.b.dim == 0 and T.W.dim == 3
    assert gstar_image(E) == E.ext.v_subspace


def _triple(ext_alg, b, W, cols):
    chart = quotient_chart(W, "V/W")
    beta = LinearMap.from_columns("b", chart.name, b.dim, chart.dim, cols)
    return SubalgebraTriple(b, W, chart, beta)


def test_build_with_zero_beta_and_full_W():
    X = coadjoint_semidirect(F.ax_b())
    b = SubspaceBasis.whole("g", 2)
    W = SubspaceBasis.whole("V", 2)
    T = _triple(X, b, W, [(), ()])
    assert build_b_beta_W(X, T) == SubspaceBasis.whole("E", 4)


def test_build_zero_triple():
    X = coadjoint_semidirect(F.ax_b())
    T = _triple(X, SubspaceBasis.zero("g", 2), SubspaceBasis.zero("V", 2), [])
    assert build_b_beta_W(X, T).dim == 0


def test_build_rejects_non_invariant_W():
    # e2 moves e2* to e1*, so span{e2*} is not stable under ax+b
    X = coadjoint_semidirect(F.ax_b())
    T = _triple(X, SubspaceBasis.whole("g", 2), span("V", 2, [(0, 1)]), [(0,), (0,)])
    with pytest.raises(ExtensionError, match="basis pair"):
        build_b_beta_W(X, T)


def test_decompose_V():
    X = coadjoint_semidirect(F.sl2())
    T = decompose_subalgebra(X, X.v_subspace)
    assert T.b.dim == 0 and T.W == SubspaceBasis.whole("V", 3) and T.beta.domain_dim == 0


def test_decompose_h():
    X = coadjoint_semidirect(F.sl2())
    h = span("E", 6, [unit(6, i) for i in range(3)])
    T = decompose_subalgebra(X, h)
    assert T.b.dim == 3 and T.W.dim == 0 and T.beta.is_zero()


def test_decompose_rejects_non_subalgebra():
    X = coadjoint_semidirect(F.sl2())
    with pytest.raises(ExtensionError):
        decompose_subalgebra(X, span("E", 6, [unit(6, 0), unit(6, 1)]))


@pytest.mark.parametrize("name", ALL)
def test_round_trip_on_gstar(name, ext):
    E = ext[name]
    T = gstar_triple(E)
    img = gstar_image(E)
    assert decompose_subalgebra(E.ext, img) == T
    assert build_b_beta_W(E.ext, T) == img


def generated_subalgebra(L, rows):
    sub = span(L.space, L.dim, rows)
    while True:
        new = span(L.space, L.dim, list(sub.rows) + [L.bracket_coords(a, b)
                                                     for a in sub.rows for b in sub.rows])
        if new == sub:
            return sub
        sub = new


_EXT_CACHE = {}


def _cached_ext(name):
    if name not in _EXT_CACHE:
        _EXT_CACHE[name] = build_double_as_extension(F.load(name))
    return _EXT_CACHE[name]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["oscillator", "heisenberg", "sl2_plus_ax_b", "ax_b"]), st.data())
def test_round_trip_on_random_subalgebras(name, data):
    E = _cached_ext(name)
    N = E.ext.dim
    vec = st.lists(small_q, min_size=N, max_size=N).map(tuple)
    raw = data.draw(st.lists(vec, min_size=1, max_size=2))
    k = generated_subalgebra(E.ext.total, raw)
    T = decompose_subalgebra(E.ext, k)
    assert triple_checks(E.ext, T).passed
    assert build_b_beta_W(E.ext, T) == k
    assert decompose_subalgebra(E.ext, build_b_beta_W(E.ext, T)) == T
    assert k.dim == T.b.dim + T.W.dim
