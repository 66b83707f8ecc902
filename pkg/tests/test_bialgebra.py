from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtdouble import fixtures as F
from qtdouble.bialgebra import (
    Kind, QuasitriangularBialgebra, bialgebra_checks, classify, cobracket, cybe_tensor,
    dual_coadjoint, r_minus, r_plus,
)
from qtdouble.errors import CYBEError, NotBialgebraError
from qtdouble.linalg import Tensor2, Vec, unit

from conftest import ALL, small_q


def naive_cybe(g, r):
    """[r12,r13] + [r12,r23] + [r13,r23] as a dict, summed term by term."""
    n = g.dim
    out = {}

    def add(i, j, k, v):
        if v:
            out[(i, j, k)] = out.get((i, j, k), 0) + v

    for a, b, c, d in product(range(n), repeat=4):
        w = r[a][b] * r[c][d]
        if not w:
            continue
        for l in range(n):
            add(l, b, d, w * g.c[a][c][l])
            add(a, l, d, w * g.c[b][c][l])
            add(a, c, l, w * g.c[b][d][l])
    return {k: v for k, v in out.items() if v}


def naive_cobracket(g, r, x):
    """(ad_x (x) 1 + 1 (x) ad_x) r, entry by entry."""
    n = g.dim
    m = [[Q(0)] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        if not r[a][b]:
            continue
        xa = g.bracket_coords(x, unit(n, a))
        xb = g.bracket_coords(x, unit(n, b))
        for k in range(n):
            m[k][b] += r[a][b] * xa[k]
            m[a][k] += r[a][b] * xb[k]
    return tuple(tuple(row) for row in m)


@pytest.mark.parametrize("name", ALL)
def test_cybe_tensor_matches_naive(name):
    B = F.load(name)
    assert cybe_tensor(B.g, B.r).is_zero()
    assert naive_cybe(B.g, B.r.entries) == {}


@pytest.mark.parametrize("i,j", list(product(range(3), repeat=2)))
def test_sl2_perturbations_break_cybe(i, j):
    r = [list(row) for row in F.sl2_standard_r().entries]
    r[i][j] += 1
    T = cybe_tensor(F.sl2(), r)
    want = naive_cybe(F.sl2(), r)
    assert want
    assert dict(T.nonzero_entries()) == want
    with pytest.raises(CYBEError) as err:
        QuasitriangularBialgebra(F.sl2(), Tensor2(("g", "g"), tuple(map(tuple, r))))
    assert err.value.entry is not None


@settings(max_examples=40, deadline=None)
@given(st.lists(small_q, min_size=9, max_size=9))
def test_cybe_agrees_with_naive_on_random_r(vals):
    r = tuple(tuple(vals[3 * i:3 * i + 3]) for i in range(3))
    assert dict(cybe_tensor(F.sl2(), r).nonzero_entries()) == naive_cybe(F.sl2(), r)


def test_symmetric_part_must_be_invariant():
    # r = e2 (x) e2 solves CYBE on ax+b, but r + r21 is not ad-invariant
    r = Tensor2(("g", "g"), ((0, 0), (0, 1)))
    assert cybe_tensor(F.ax_b(), r).is_zero()
    with pytest.raises(NotBialgebraError):
        QuasitriangularBialgebra(F.ax_b(), r)


def test_r_plus_minus_on_ax_b():
    B = F.load("ax_b")
    e1 = Vec("g*", (1, 0))
    assert r_plus(B)(e1) == Vec("g", (0, 1))
    assert r_minus(B)(e1) == Vec("g", (0, 1))


def test_r_plus_minus_on_sl2():
    B = F.load("sl2_standard")
    e_star = Vec("g*", (1, 0, 0))
    assert B.r_plus(e_star) == Vec("g", (0, 1, 0))
    assert B.r_minus(e_star).is_zero()


def test_sl2_omega():
    B = F.load("sl2_standard")
    assert B.omega.entries == ((0, 1, 0), (1, 0, 0), (0, 0, Q(1, 2)))
    assert B.omega.rank() == 3


def test_sl2_cobracket_of_e():
    # delta(e) = 1/2 e ^ h
    B = F.load("sl2_standard")
    d = cobracket(B, B.g.basis(0))
    assert d.entries == ((0, 0, Q(1, 2)), (0, 0, 0), (Q(-1, 2), 0, 0))


@pytest.mark.parametrize("name", ALL)
def test_cobracket_matches_naive(name):
    B = F.load(name)
    for i in range(B.n):
        assert cobracket(B, B.g.basis(i)).entries == naive_cobracket(B.g, B.r.entries, unit(B.n, i))


@pytest.mark.parametrize("name", ALL)
def test_dual_bracket_is_transposed_cobracket(name):
    B = F.load(name)
    n = B.n
    for k in range(n):
        d = naive_cobracket(B.g, B.r.entries, unit(n, k))
        for a, b in product(range(n), repeat=2):
            assert B.dual.c[a][b][k] == d[a][b]


@pytest.mark.parametrize("name,kind", [
    ("abelian2", Kind.TRIANGULAR), ("ax_b", Kind.TRIANGULAR),
    ("sl2_standard", Kind.FACTORIZABLE), ("sl2_plus_sl2", Kind.FACTORIZABLE),
    ("sl2_plus_ax_b", Kind.GENERAL), ("sl2_jordanian", Kind.TRIANGULAR),
    ("heisenberg", Kind.GENERAL), ("oscillator", Kind.GENERAL),
])
def test_classify(name, kind):
    assert classify(F.load(name)) == kind


def test_f_and_f_perp():
    B = F.load("sl2_standard")
    assert B.f.dim == 3 and B.f_perp.dim == 0
    B = F.load("ax_b")
    assert B.f.dim == 0 and B.f_perp.dim == 2
    B = F.load("sl2_plus_ax_b")
    # f is the sl2 block, f_perp the dual of the ax+b block
    assert B.f.rows == tuple(unit(5, i) for i in range(3))
    assert B.f_perp.rows == (unit(5, 3), unit(5, 4))


@pytest.mark.parametrize("name", ALL)
def test_structural_identities(name):
    rep = bialgebra_checks(F.load(name))
    assert rep.passed, rep.first_failure()


@pytest.mark.parametrize("name", ALL)
def test_coadjoint_contractions_agree(name):
    B = F.load(name)
    for k in range(B.n):
        xi = Vec(B.dspace, unit(B.n, k))
        assert dual_coadjoint(B, xi, 1) == dual_coadjoint(B, xi, 2)
