import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import iset, mono
from spbrsk.brsk import (
    BiWord,
    NotchedTableauPair,
    bounded_insert,
    brsk,
    brsk_inverse,
    lex_arrange,
    rows_to_standard_monomial,
    tableau_from_standard_monomial,
)
from spbrsk.errors import InvalidInputError, NotInvertibleError
from spbrsk.grid import Monomial, grid_cells, iter_corpus
from spbrsk.order import StandardMonomial, iter_I_rn
from spbrsk.peel import pi_tilde

TWO_ROWS = NotchedTableauPair(((1,), (1, 3)), ((4,), (4, 2)))
SQUARE = NotchedTableauPair(((1, 3), (1, 3)), ((4, 2), (4, 2)))


def test_lex_arrange(v13):
    assert list(lex_arrange(mono(v13, (2, 1), (4, 1), (4, 3)))) == [(3, 4), (1, 4), (1, 2)]
    assert list(lex_arrange(mono(v13, (2, 1)))) == [(1, 2)]
    assert list(lex_arrange(mono(v13, (4, 1), (4, 3)))) == [(3, 4), (1, 4)]


def test_biword_validation():
    with pytest.raises(InvalidInputError):
        BiWord(((1, 2), (3, 4)))
    with pytest.raises(InvalidInputError):
        BiWord(((3, 2),))


def test_bounded_insert_examples():
    t = NotchedTableauPair(((3,),), ((4,),))
    assert bounded_insert(t, 1, 4) == NotchedTableauPair(((1,), (3,)), ((4,), (4,)))
    assert bounded_insert(NotchedTableauPair(), 2, 5) == NotchedTableauPair(((2,),), ((5,),))
    assert bounded_insert(NotchedTableauPair(((1,), (3,)), ((4,), (4,))), 1, 2) == TWO_ROWS


def _insert_bound_first_row_only(P, Q, a, b):
    """Variant that freezes entries only in the first row; kept to show it is wrong."""
    x = a
    for i, row in enumerate(P):
        limit = b if i == 0 else float("inf")
        cand = [j for j, y in enumerate(row) if x <= y < limit]
        if not cand:
            row.append(x)
            row.sort()
            Q[i].append(b)
            return
        j = cand[0]
        row[j], x = x, row[j]
    P.append([x])
    Q.append([b])


def test_bound_applies_in_every_row(v13):
    U = mono(v13, (2, 1), (4, 1), (4, 3))
    P, Q = [], []
    for a, b in lex_arrange(U):
        _insert_bound_first_row_only(P, Q, a, b)
    assert P == [[1], [1], [3]]
    assert len(P) == 3 != len(pi_tilde(U).steps)
    assert len(brsk(U).P) == len(pi_tilde(U).steps) == 2


def test_brsk_examples(v13):
    assert brsk(mono(v13, (2, 1), (4, 1), (4, 3))) == TWO_ROWS
    assert brsk(Monomial(v13)) == NotchedTableauPair()
    assert brsk(mono(v13, (2, 1), (2, 1), (4, 3), (4, 3))) == SQUARE


def test_brsk_inverse_examples(v13):
    assert brsk_inverse(TWO_ROWS, v13) == mono(v13, (2, 1), (4, 1), (4, 3))
    assert brsk_inverse(NotchedTableauPair(), v13) == Monomial(v13)
    assert brsk_inverse(SQUARE, v13) == mono(v13, (2, 1), (2, 1), (4, 3), (4, 3))


def test_brsk_inverse_rejects_non_image(v13):
    # second row longer than the first cannot arise from insertion here
    with pytest.raises(NotInvertibleError):
        brsk_inverse(NotchedTableauPair(((3,), (1, 3)), ((4,), (4, 2))), v13)
    with pytest.raises(NotInvertibleError):
        brsk_inverse(NotchedTableauPair(((3,),), ((2,),)), v13)


def test_tableau_validation():
    with pytest.raises(InvalidInputError):
        NotchedTableauPair(((1, 3),), ((4,),))
    with pytest.raises(InvalidInputError):
        NotchedTableauPair(((3, 1),), ((4, 2),))
    with pytest.raises(InvalidInputError):
        NotchedTableauPair(((1, 3),), ((2, 4),))


def test_rows_to_standard_monomial(v13):
    assert rows_to_standard_monomial(TWO_ROWS, v13).words == (iset(3, 4), iset(2, 4))
    assert rows_to_standard_monomial(NotchedTableauPair(), v13) == StandardMonomial()
    assert rows_to_standard_monomial(SQUARE, v13).words == (iset(2, 4), iset(2, 4))
    with pytest.raises(InvalidInputError):
        rows_to_standard_monomial(NotchedTableauPair(((1,),), ((3,),)), v13)


def test_standard_monomial_to_tableau_inverts_reading(v13):
    for t in (TWO_ROWS, SQUARE, NotchedTableauPair()):
        assert tableau_from_standard_monomial(rows_to_standard_monomial(t, v13), v13) == t


CORPUS_V = list(iter_I_rn(2, 4)) + [iset(1, 2, 3), iset(1, 2, 5), iset(1, 4, 5)]


@pytest.mark.parametrize("v", CORPUS_V, ids=str)
def test_round_trip_and_main_theorem(v):
    max_size = 5 if len(v) == 2 else 4
    for U in iter_corpus(v, max_size):
        t = brsk(U)
        assert brsk_inverse(t, v) == U
        trace = pi_tilde(U)
        assert len(t.P) == len(trace.steps)
        for row_p, row_q, step in zip(t.P, t.Q, trace.steps):
            assert sorted(row_p) == sorted(c.col for c in step.distinguished)
            assert sorted(row_q) == sorted(c.row for c in step.distinguished)
        assert rows_to_standard_monomial(t, v) == trace.words


@st.composite
def monomials(draw):
    v = draw(st.sampled_from([iset(*e) for e in itertools.combinations(range(1, 9), 4)]))
    cells = grid_cells(v, "N_tilde")
    if not cells:
        return Monomial(v)
    return Monomial(v, tuple(draw(st.lists(st.sampled_from(cells), max_size=7))))


@settings(max_examples=300, deadline=None)
@given(monomials())
def test_insertion_invariants_and_theorem_d4(U):
    t = NotchedTableauPair()
    for a, b in lex_arrange(U):
        t = bounded_insert(t, a, b)  # constructor re-checks row shapes
    assert sorted(x for r in t.P for x in r) == U.cols()
    assert sorted(x for r in t.Q for x in r) == U.rows()
    assert rows_to_standard_monomial(t, U.v) == pi_tilde(U).words
    assert brsk_inverse(t, U.v) == U
