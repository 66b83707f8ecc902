from fractions import Fraction as Q
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtdouble import fixtures as F
from qtdouble.double import build_direct_double, canonical_form
from qtdouble.errors import DomainError, ExtensionError
from qtdouble.extension import (
    alpha, build_double_as_extension, build_extension, choose_section, embed_g, embed_gstar,
    exactness_report, extension_checks, i_inverse, iso_direct_to_extension, iso_extension_to_direct,
    iso_inverse_matrix, iso_matrix, p_combined, p_minus, p_plus, splitting_S, transferred_form,
)
from qtdouble.lie import LieAlgebra, direct_sum, homomorphism_defects, validate
from qtdouble.linalg import Vec, unit, vadd, vsub, zeros
from qtdouble.special import coadjoint_semidirect

from conftest import ALL, small_q


@pytest.fixture(scope="module")
def ext():
    return {k: build_double_as_extension(F.load(k)) for k in ALL}


def test_p_examples():
    B = F.load("sl2_standard")
    e1 = Vec("D", unit(6, 0))
    assert p_plus(B, e1) == Vec("g", unit(3, 0))
    e_star = Vec("D", unit(6, 3))
    assert p_plus(B, e_star) == Vec("g", (0, 1, 0))
    assert p_minus(B, e_star).is_zero()
    assert p_plus(B, Vec("D", zeros(6))).is_zero()
    x, y = p_combined(B, e_star)
    assert x.coords == (0, 1, 0) and y.coords == (0, -1, 0)


def test_p_combined_triangular_has_no_f_part():
    B = F.load("ax_b")
    for a in range(2):
        x, y = p_combined(B, unit(4, 2 + a))
        assert x.coords == B.r_plus.apply(unit(2, a))
        assert not any(y.coords)


@pytest.mark.parametrize("name", ALL)
def test_exactness(name):
    rep = exactness_report(F.load(name))
    assert rep.passed, rep.first_failure()


def test_exactness_dimensions():
    assert F.load("sl2_standard").f_perp.dim == 0
    B = F.load("ax_b")
    rep = exactness_report(B)
    assert rep["Ker p+ = (id - r+) g*"].details["kernel"].dim == 2
    B = F.load("sl2_plus_ax_b")
    assert 2 * B.n == B.n + B.f.dim + B.f_perp.dim


@pytest.mark.parametrize("name", ALL)
def test_section_is_right_inverse(name):
    B = F.load(name)
    s = choose_section(B)
    for j, fj in enumerate(B.f.rows):
        assert B.r_diff.apply(s.column(j)) == fj


def test_section_special_shapes():
    assert choose_section(F.load("ax_b")).domain_dim == 0
    s = choose_section(F.load("sl2_plus_ax_b"))
    # values live in the dual of the sl2 block
    assert all(col[3:] == (0, 0) for col in s.columns())


@pytest.mark.parametrize("name", ALL)
def test_splitting_is_a_section_of_p(name, ext):
    E = ext[name]
    B = E.B
    n = B.n
    for i in range(n):
        assert splitting_S(E, unit(n, i), zeros(n)).coords == unit(n, i) + zeros(n)
    m = B.f.dim
    for i, j in product(range(n), range(m)):
        d = splitting_S(E, unit(n, i), B.f.rows[j])
        x, y = p_combined(B, d)
        assert x.coords == unit(n, i) and y.coords == unit(m, j)


def test_splitting_rejects_outside_f(ext):
    with pytest.raises(DomainError):
        splitting_S(ext["sl2_plus_ax_b"], zeros(5), unit(5, 4))


def defect_oracle(E, D, u, v):
    """i^-1([S u, S v] - S [u, v]) in the direct double."""
    Su = splitting_S(E, *E.a_to_semidirect(u)).coords
    Sv = splitting_S(E, *E.a_to_semidirect(v)).coords
    w = E.a.bracket_coords(u, v)
    Sw = splitting_S(E, *E.a_to_semidirect(w)).coords
    return i_inverse(E.B, vsub(D.bracket(Su, Sv), Sw))


@pytest.mark.parametrize("name", ALL)
def test_alpha_formula_equals_commutator_defect(name, ext):
    E = ext[name]
    D = build_direct_double(E.B)
    N = E.n + E.m
    for a, b in product(range(N), repeat=2):
        u, v = unit(N, a), unit(N, b)
        got = alpha(E, E.a_to_semidirect(u), E.a_to_semidirect(v))
        assert got.coords == defect_oracle(E, D, u, v)


@pytest.mark.parametrize("name", ALL)
def test_alpha_is_an_antisymmetric_cocycle(name, ext):
    E = ext[name]
    X = E.ext
    N = E.n + E.m
    for a, b in product(range(N), repeat=2):
        assert X.alpha[a][b] == tuple(-t for t in X.alpha[b][a])
    for a, b, c in combinations(range(N), 3):
        acc = zeros(X.v_dim)
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            acc = vadd(acc, X.alpha_coords(E.a.c[i][j], unit(N, k)))
            acc = vsub(acc, X.act(unit(N, i), X.alpha[j][k]))
        assert not any(acc)


def test_alpha_vanishes_in_special_cases(ext):
    for name in ("ax_b", "abelian2", "sl2_jordanian"):
        assert not any(any(v) for row in ext[name].alpha for v in row)
    for name in ("sl2_standard", "sl2_plus_sl2"):
        assert ext[name].ext.v_dim == 0


def test_alpha_is_nonzero_on_general_fixtures(ext):
    for name in ("heisenberg", "oscillator"):
        assert any(any(v) for row in ext[name].alpha for v in row)


def test_alpha_lands_in_f_perp(ext):
    E = ext["oscillator"]
    N = E.n + E.m
    for a, b in product(range(N), repeat=2):
        val = alpha(E, E.a_to_semidirect(unit(N, a)), E.a_to_semidirect(unit(N, b)))
        assert E.B.f_perp.contains(val.coords)
        assert all(sum(x * y for x, y in zip(val.coords, f)) == 0 for f in E.B.f.rows)


def test_extension_with_zero_data_is_direct_sum():
    h = F.ax_b()
    X = build_extension(h, [((0,),), ((0,),)], [[(0,), (0,)], [(0,), (0,)]], 1)
    want = direct_sum(h, LieAlgebra.abelian(1), space="E")
    assert X.total.c == want.c


def test_coadjoint_semidirect_is_lie():
    assert validate(coadjoint_semidirect(F.sl2()).total).ok


def test_non_representation_rejected():
    # e2 acting by 1 and e1 by 0 is not a representation of ax+b
    with pytest.raises(ExtensionError, match="representation"):
        build_extension(F.ax_b(), [((0,),), ((1,),)], [[(0,), (0,)], [(0,), (0,)]], 1)


def test_non_cocycle_rejected():
    h = direct_sum(F.ax_b(), LieAlgebra.abelian(1))
    al = [[(0,)] * 3 for _ in range(3)]
    al[1][2], al[2][1] = (1,), (-1,)
    with pytest.raises(ExtensionError, match="cocycle"):
        build_extension(h, [((0,),)] * 3, al, 1)


@pytest.mark.parametrize("name", ALL)
def test_iso_is_a_lie_isomorphism(name, ext):
    E = ext[name]
    D = build_direct_double(E.B)
    M = iso_matrix(E)
    assert not homomorphism_defects(D.d, E.ext.total, M)
    assert (iso_inverse_matrix(E) @ M).matrix == tuple(unit(2 * E.n, i) for i in range(2 * E.n))


def test_iso_examples(ext):
    E = ext["sl2_plus_ax_b"]
    n = E.n
    for i in range(n):
        # x -> (x, 0) x| 0: the i-th a-basis vector, nothing in f or f_perp
        assert iso_direct_to_extension(E, Vec("D", unit(2 * n, i))).coords == unit(2 * n, i)
        assert embed_g(E, unit(n, i)) == unit(2 * n, i)
    E = ext["ax_b"]
    for a in range(2):
        xi = unit(2, a)
        z = iso_direct_to_extension(E, Vec("D", zeros(2) + xi)).coords
        assert z == E.B.r_plus.apply(xi) + xi


@settings(max_examples=40, deadline=None)
@given(st.lists(small_q, min_size=10, max_size=10), st.lists(small_q, min_size=10, max_size=10))
def test_iso_respects_brackets_of_random_elements(a, b):
    E = build_double_as_extension(F.load("sl2_plus_ax_b"))
    D = build_direct_double(E.B)
    a, b = tuple(a), tuple(b)
    fa = iso_direct_to_extension(E, Vec("D", a)).coords
    fb = iso_direct_to_extension(E, Vec("D", b)).coords
    assert iso_direct_to_extension(E, Vec("D", D.bracket(a, b))).coords == \
        E.ext.total.bracket_coords(fa, fb)
    assert iso_extension_to_direct(E, Vec("E", fa)).coords == a


@pytest.mark.parametrize("name", ALL)
def test_transferred_form(name, ext):
    E = ext[name]
    D = build_direct_double(E.B)
    N = 2 * E.n
    M = iso_matrix(E)
    for a, b in product(range(N), repeat=2):
        t = transferred_form(E, M.column(a), M.column(b))
        assert t == canonical_form(D, unit(N, a), unit(N, b))
        assert t == transferred_form(E, M.column(b), M.column(a))


def test_transferred_form_examples(ext):
    E = ext["ax_b"]
    assert transferred_form(E, embed_g(E, unit(2, 0)), embed_g(E, unit(2, 1))) == 0
    assert transferred_form(E, embed_g(E, unit(2, 0)), embed_gstar(E, unit(2, 0))) == 1


@pytest.mark.parametrize("name", ALL)
def test_extension_report(name, ext):
    rep = extension_checks(ext[name])
    assert rep.passed, rep.first_failure()


def test_factorizable_and_triangular_shapes(ext):
    E = ext["sl2_standard"]
    assert E.m == 3 and E.ext.v_dim == 0
    E = ext["ax_b"]
    sd = coadjoint_semidirect(F.ax_b())
    assert E.ext.total.c == sd.total.c
