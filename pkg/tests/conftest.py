import pytest

from spbrsk.grid import Cell, Monomial
from spbrsk.order import IndexSet


def iset(*entries, d=None):
    d = d or len(entries)
    return IndexSet.of(entries, 2 * d)


def mono(v, *cells):
    return Monomial(v, tuple(Cell(r, c) for r, c in cells))


@pytest.fixture
def v13():
    return iset(1, 3)
