from fractions import Fraction as Q
from itertools import product

import pytest

from qtdouble import double as dbl
from qtdouble import fixtures as F
from qtdouble.double import (
    build_direct_double, canonical_form, lemma_checks, verify_manin_triple,
)
from qtdouble.errors import InconsistencyError, TagMismatchError
from qtdouble.linalg import Vec, dot, unit
from qtdouble.lie import validate

from conftest import ALL


def invariance_oracle(B):
    """Structure constants of g + g* forced by the invariant pairing alone.

    For x in g and xi in g*: the g*-part of [x, xi] pairs with y as
    -<xi, [x, y]>, and its g-part pairs with eta as <[xi, eta], x>.
    """
    n = B.n
    N = 2 * n
    c = [[[Q(0)] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        c[i][j][:n] = B.g.c[i][j]
        c[n + i][n + j][n:] = B.dual.c[i][j]
    for i, a in product(range(n), repeat=2):
        v = [Q(0)] * N
        for y in range(n):
            v[n + y] = -B.g.c[i][y][a]
        for eta in range(n):
            v[eta] = B.dual.c[a][eta][i]
        c[i][n + a] = v
        c[n + a][i] = [-t for t in v]
    return c


@pytest.mark.parametrize("name", ALL)
def test_double_matches_invariance_oracle(name):
    B = F.load(name)
    D = build_direct_double(B)
    want = invariance_oracle(B)
    N = 2 * B.n
    for a, b in product(range(N), repeat=2):
        assert list(D.d.c[a][b]) == want[a][b], (a, b)


def test_abelian_double_is_abelian():
    D = build_direct_double(F.load("abelian2"))
    assert not any(any(any(v) for v in row) for row in D.d.c)


@pytest.mark.parametrize("name,dim", [("ax_b", 4), ("sl2_standard", 6), ("sl2_plus_sl2", 12)])
def test_double_dimensions(name, dim):
    D = build_direct_double(F.load(name))
    assert D.d.dim == dim and validate(D.d).ok


def test_canonical_form_values():
    D = build_direct_double(F.load("ax_b"))
    e = lambda i: Vec("D", unit(4, i))
    assert canonical_form(D, e(0), e(1)) == 0
    assert canonical_form(D, e(2), e(3)) == 0
    assert canonical_form(D, e(0), e(2)) == 1
    with pytest.raises(TagMismatchError):
        canonical_form(D, Vec("E", unit(4, 0)), e(1))


def test_canonical_form_symmetric():
    D = build_direct_double(F.load("sl2_standard"))
    for a, b in product(range(6), repeat=2):
        assert canonical_form(D, unit(6, a), unit(6, b)) == canonical_form(D, unit(6, b), unit(6, a))


@pytest.mark.parametrize("name", ALL)
def test_manin_triple(name):
    rep = verify_manin_triple(build_direct_double(F.load(name)))
    assert rep.passed, rep.first_failure()


@pytest.mark.parametrize("name", ALL)
def test_lemmas(name):
    rep = lemma_checks(build_direct_double(F.load(name)))
    assert rep.passed, rep.first_failure()


def test_sign_error_is_caught(monkeypatch):
    # flipping the g-part of the mixed bracket breaks Jacobi on sl2
    orig = dbl._mixed

    def flipped(B, i, a):
        v = orig(B, i, a)
        n = B.n
        return tuple(-t for t in v[:n]) + v[n:]

    monkeypatch.setattr(dbl, "_mixed", flipped)
    with pytest.raises(InconsistencyError):
        build_direct_double(F.load("sl2_standard"))
