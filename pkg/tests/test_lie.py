from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtdouble import fixtures as F
from qtdouble.errors import NotALieAlgebraError, TagMismatchError
from qtdouble.lie import (
    LieAlgebra, ad, ad_star, bracket, change_basis, direct_sum,
    has_nondegenerate_invariant_form, homomorphism_defects, invariant_forms,
    is_invariant_form, require_lie, validate,
)
from qtdouble.linalg import LinearMap, Vec, dot, unit

from conftest import small_q


def test_abelian_is_lie():
    assert validate(LieAlgebra.abelian(3)).ok


def test_broken_antisymmetry_reported():
    n = 3
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    c[1][2][2] = Q(1)
    c[2][1][2] = Q(1)
    rep = validate(LieAlgebra("bad", ("a", "b", "c"), c))
    assert (1, 2, 2) in rep.antisymmetry
    with pytest.raises(NotALieAlgebraError):
        require_lie(LieAlgebra("bad", ("a", "b", "c"), c))


def test_jacobi_failure_reported():
    # [e0,e1] = e0, [e1,e2] = e1: the triple (0,1,2) gives -e0
    L = LieAlgebra.from_brackets("bad", ("a", "b", "c"), {(0, 1): {0: 1}, (1, 2): {1: 1}})
    rep = validate(L)
    assert not rep.antisymmetry
    assert (0, 1, 2) in rep.jacobi


@pytest.mark.parametrize("L", [F.sl2(), F.ax_b(), F.heisenberg(), F.oscillator()])
def test_fixture_algebras_are_lie(L):
    assert validate(L).ok


def test_sl2_brackets():
    g = F.sl2()
    e, f, h = g.basis_vectors()
    assert bracket(g, e, f) == h
    assert bracket(g, h, e) == e * 2
    assert bracket(g, h, f) == f * -2
    assert bracket(g, e, e).is_zero()


def test_ad_and_coadjoint_of_h():
    g = F.sl2()
    h = g.basis(2)
    assert ad(g, h).matrix == ((2, 0, 0), (0, -2, 0), (0, 0, 0))
    assert ad_star(g, h).matrix == ((-2, 0, 0), (0, 2, 0), (0, 0, 0))
    assert ad_star(g, h).domain == "g*"


def test_abelian_ad_is_zero():
    g = LieAlgebra.abelian(2)
    assert ad(g, Vec("g", (1, 1))).is_zero()


def test_tag_checked():
    g = F.sl2()
    with pytest.raises(TagMismatchError):
        bracket(g, Vec("g*", (1, 0, 0)), g.basis(0))


@pytest.mark.parametrize("L", [F.sl2(), F.ax_b(), F.oscillator()])
def test_coadjoint_is_minus_transpose(L):
    n = L.dim
    for i in range(n):
        A, As = ad(L, L.basis(i)), ad_star(L, L.basis(i))
        for a in range(n):
            for y in range(n):
                assert dot(As.apply(unit(n, a)), unit(n, y)) == -dot(unit(n, a), A.apply(unit(n, y)))


vec3 = st.lists(small_q, min_size=3, max_size=3).map(tuple)


@settings(max_examples=60, deadline=None)
@given(vec3, vec3, vec3)
def test_bracket_axioms_on_random_elements(x, y, z):
    g = F.sl2()
    b = g.bracket_coords
    assert b(x, y) == tuple(-t for t in b(y, x))
    jac = [u + v + w for u, v, w in zip(b(b(x, y), z), b(b(y, z), x), b(b(z, x), y))]
    assert not any(jac)


def test_direct_sum_and_change_basis():
    g = direct_sum(F.sl2(), F.ax_b())
    assert g.dim == 5 and validate(g).ok
    cols = [(1, 1, 0), (0, 1, 0), (0, 0, 1)]
    h = change_basis(F.sl2(), cols)
    P = LinearMap.from_columns("new", "g", 3, 3, cols)
    assert not homomorphism_defects(h, F.sl2(), P)


def test_invariant_forms():
    assert len(invariant_forms(F.sl2())) == 1
    trace = ((0, 1, 0), (1, 0, 0), (0, 0, 2))
    assert is_invariant_form(F.sl2(), trace)
    assert not is_invariant_form(F.sl2(), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_nondegenerate_invariant_form_existence():
    assert has_nondegenerate_invariant_form(F.sl2()) is True
    # the oscillator algebra carries an invariant metric, ax+b carries none
    assert has_nondegenerate_invariant_form(F.oscillator()) is True
    assert has_nondegenerate_invariant_form(F.ax_b()) is False
    assert has_nondegenerate_invariant_form(LieAlgebra.abelian(2)) is True
