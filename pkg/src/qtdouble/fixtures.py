"""The shipped example bialgebras."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .bialgebra import QuasitriangularBialgebra
from .lie import LieAlgebra, direct_sum
from .linalg import ZERO, Tensor2


def sl2() -> LieAlgebra:
    # basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return LieAlgebra.from_brackets("sl2", ("e", "f", "h"),
                                    {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})


def ax_b() -> LieAlgebra:
    return LieAlgebra.from_brackets("ax+b", ("e1", "e2"), {(0, 1): {1: 1}})


def _r(n, entries) -> Tensor2:
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        m[i][j] = Fraction(v)
    return Tensor2(("g", "g"), tuple(tuple(r) for r in m))


def block_r(r1: Tensor2, r2: Tensor2) -> Tensor2:
    n1, n2 = r1.shape[0], r2.shape[0]
    n = n1 + n2
    m = [[ZERO] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            m[i][j] = r1.entries[i][j]
    for i in range(n2):
        for j in range(n2):
            m[n1 + i][n1 + j] = r2.entries[i][j]
    return Tensor2(("g", "g"), tuple(tuple(r) for r in m))


def sl2_standard_r() -> Tensor2:
    """e (x) f + 1/4 h (x) h."""
    return _r(3, {(0, 1): 1, (2, 2): Fraction(1, 4)})


def sl2_jordanian_r() -> Tensor2:
    """h (x) e - e (x) h, a triangular r-matrix supported on the Borel."""
    return _r(3, {(2, 0): 1, (0, 2): -1})


def ax_b_r() -> Tensor2:
    return _r(2, {(0, 1): 1, (1, 0): -1})


def abelian2() -> QuasitriangularBialgebra:
    g = LieAlgebra.abelian(2, name="abelian2", basis_names=("x", "y"))
    return QuasitriangularBialgebra(g, _r(2, {}))


def ax_b_triangular() -> QuasitriangularBialgebra:
    return QuasitriangularBialgebra(ax_b(), ax_b_r())


def sl2_standard() -> QuasitriangularBialgebra:
    return QuasitriangularBialgebra(sl2(), sl2_standard_r())


def sl2_jordanian() -> QuasitriangularBialgebra:
    return QuasitriangularBialgebra(sl2(), sl2_jordanian_r())


def _rename(names, suffix):
    return tuple(f"{b}{suffix}" for b in names)


def sl2_plus_ax_b() -> QuasitriangularBialgebra:
    a, b = sl2(), ax_b()
    g = direct_sum(a, b, name="sl2+ax+b")
    return QuasitriangularBialgebra(g, block_r(sl2_standard_r(), ax_b_r()))


def sl2_plus_sl2() -> QuasitriangularBialgebra:
    a = sl2()
    g = direct_sum(a, a, name="sl2+sl2")
    g = LieAlgebra(g.name, _rename(a.basis_names, "1") + _rename(a.basis_names, "2"), g.c)
    return QuasitriangularBialgebra(g, block_r(sl2_standard_r(), sl2_standard_r()))


def heisenberg() -> LieAlgebra:
    return LieAlgebra.from_brackets("heisenberg", ("x", "y", "z"), {(0, 1): {2: 1}})


def oscillator() -> LieAlgebra:
    # [h,x] = x, [h,y] = -y, [x,y] = z
    return LieAlgebra.from_brackets("oscillator", ("h", "x", "y", "z"),
                                    {(0, 1): {1: 1}, (0, 2): {2: -1}, (1, 2): {3: 1}})


def heisenberg_general() -> QuasitriangularBialgebra:
    """r = 1/2 z (x) z + z (x) x - x (x) z."""
    return QuasitriangularBialgebra(heisenberg(), _r(3, {(2, 2): Fraction(1, 2), (2, 0): 1, (0, 2): -1}))


def oscillator_general() -> QuasitriangularBialgebra:
    """r = 1/2 z (x) z - h (x) x + x (x) h."""
    return QuasitriangularBialgebra(oscillator(), _r(4, {(3, 3): Fraction(1, 2), (0, 1): -1, (1, 0): 1}))


def sl2_zero_r() -> QuasitriangularBialgebra:
    return QuasitriangularBialgebra(sl2(), _r(3, {}))


FIXTURES = {
    "abelian2": abelian2,
    "ax_b": ax_b_triangular,
    "sl2_standard": sl2_standard,
    "sl2_plus_ax_b": sl2_plus_ax_b,
    "sl2_plus_sl2": sl2_plus_sl2,
    "sl2_jordanian": sl2_jordanian,
    "sl2_zero": sl2_zero_r,
    "heisenberg": heisenberg_general,
    "oscillator": oscillator_general,
}

# the five fixtures named by the acceptance criteria
ACCEPTANCE_FIXTURES = ("abelian2", "ax_b", "sl2_standard", "sl2_plus_ax_b", "sl2_plus_sl2")


def load(name: str) -> QuasitriangularBialgebra:
    return FIXTURES[name]()


def data_path(name: str):
    """Path of the shipped JSON file for a fixture."""
    return resources.files("qtdouble") / "data" / f"{name}.json"
