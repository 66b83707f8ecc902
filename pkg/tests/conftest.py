from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qtdouble import fixtures as F

ALL = tuple(F.FIXTURES)


small_q = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))


def matrices(max_rows=5, max_cols=5, rows=None, cols=None):
    """Small rational matrices, biased toward rank deficiency by many zeros."""
    entry = st.one_of(st.just(Fraction(0)), st.just(Fraction(0)), small_q)
    r = st.just(rows) if rows is not None else st.integers(0, max_rows)
    c = st.just(cols) if cols is not None else st.integers(1, max_cols)
    return st.tuples(r, c).flatmap(
        lambda rc: st.lists(st.lists(entry, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(
            lambda m: (tuple(tuple(row) for row in m), rc[1])))


@pytest.fixture(scope="session")
def bialgebras():
    return {k: F.load(k) for k in ALL}
