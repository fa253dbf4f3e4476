"""Bounded RSK: notched tableau pairs, bounded row insertion and its inverse."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple

from spbrsk.errors import InvalidInputError, NotInvertibleError
from spbrsk.grid import Cell, Monomial, swap_entries
from spbrsk.order import IndexSet, StandardMonomial


class BiLetter(NamedTuple):
    a: int  # column value, in v
    b: int  # row value, outside v


@dataclass(frozen=True)
class BiWord:
    """Pairs sorted with ``b`` non-increasing and, on ties, ``a`` non-increasing."""

    pairs: tuple[BiLetter, ...] = ()

    def __post_init__(self):
        pairs = tuple(BiLetter(*p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for p in pairs:
            if p.b <= p.a:
                raise InvalidInputError(f"biletter {tuple(p)} needs b > a")
        for p, q in zip(pairs, pairs[1:]):
            if (q.b, q.a) > (p.b, p.a):
                raise InvalidInputError(f"biword not in lexicographic order at {tuple(p)}, {tuple(q)}")

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def lex_arrange(U: Monomial) -> BiWord:
    """Swap coordinates of every cell and sort decreasingly."""
    letters = sorted((BiLetter(c.col, c.row) for c in U.cells), key=lambda p: (p.b, p.a), reverse=True)
    return BiWord(tuple(letters))


@dataclass(frozen=True)
class NotchedTableauPair:
    """Insertion rows ``P`` (columns of cells) and recording rows ``Q`` (bounds)."""

    P: tuple[tuple[int, ...], ...] = ()
    Q: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        P = tuple(tuple(int(x) for x in row) for row in self.P)
        Q = tuple(tuple(int(x) for x in row) for row in self.Q)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)
        if len(P) != len(Q):
            raise InvalidInputError(f"P has {len(P)} rows but Q has {len(Q)}")
        for i, (p, q) in enumerate(zip(P, Q)):
            if not p or len(p) != len(q):
                raise InvalidInputError(f"row {i + 1}: lengths {len(p)} and {len(q)}")
            if any(y <= x for x, y in zip(p, p[1:])):
                raise InvalidInputError(f"row {i + 1} of P is not strictly increasing: {list(p)}")
            if any(y > x for x, y in zip(q, q[1:])):
                raise InvalidInputError(f"row {i + 1} of Q is not non-increasing: {list(q)}")

    def __len__(self):
        return sum(len(r) for r in self.P)

    def to_json(self) -> dict:
        return {"P": [list(r) for r in self.P], "Q": [list(r) for r in self.Q]}

    @classmethod
    def from_json(cls, data: dict) -> NotchedTableauPair:
        if not isinstance(data, dict) or "P" not in data or "Q" not in data:
            raise InvalidInputError("tableau pair needs 'P' and 'Q'")
        return cls(tuple(map(tuple, data["P"])), tuple(map(tuple, data["Q"])))


def bounded_insert(t: NotchedTableauPair, a: int, b: int) -> NotchedTableauPair:
    """Insert ``a`` into ``P`` with bound ``b`` and record ``b`` in ``Q``.

    In every row of the bump path the entries ``>= b`` are frozen. The moving
    value bumps the smallest unfrozen entry that is ``>=`` it; when there is
    none it takes a new box and ``b`` is appended to the same row of ``Q``.
    """
    P = [list(r) for r in t.P]
    Q = [list(r) for r in t.Q]
    x = a
    for i, row in enumerate(P):
        # unfrozen entries form a prefix since rows are increasing
        unfrozen = bisect.bisect_left(row, b)
        j = bisect.bisect_left(row, x, 0, unfrozen)
        if j == unfrozen:
            row.insert(j, x)
            Q[i].append(b)
            break
        row[j], x = x, row[j]
    else:
        P.append([x])
        Q.append([b])
    return NotchedTableauPair(tuple(map(tuple, P)), tuple(map(tuple, Q)))


def brsk(U: Monomial) -> NotchedTableauPair:
    U.require_grid("N_tilde")
    t = NotchedTableauPair()
    for a, b in lex_arrange(U):
        t = bounded_insert(t, a, b)
    return t


def _pop_last(P: list[list[int]], Q: list[list[int]]) -> tuple[int, int]:
    # most recent box: smallest rightmost Q entry, bottom-most row on ties
    i = min(range(len(Q)), key=lambda k: (Q[k][-1], -k))
    b = Q[i].pop()
    unfrozen = bisect.bisect_left(P[i], b)
    if unfrozen == 0:
        raise NotInvertibleError(f"row {i + 1} of P has no entry below the bound {b}")
    x = P[i].pop(unfrozen - 1)
    for k in range(i - 1, -1, -1):
        row = P[k]
        unfrozen = bisect.bisect_left(row, b)
        j = bisect.bisect_right(row, x, 0, unfrozen) - 1
        if j < 0:
            raise NotInvertibleError(f"nothing in row {k + 1} of P can be bumped back by {x}")
        row[j], x = x, row[j]
    if not P[i]:
        if i != len(P) - 1:
            raise NotInvertibleError(f"row {i + 1} emptied before the rows below it")
        P.pop()
        Q.pop()
    return x, b


def brsk_inverse(t: NotchedTableauPair, v: IndexSet) -> Monomial:
    """The monomial whose BRSK image is ``t``; raises if there is none."""
    P = [list(r) for r in t.P]
    Q = [list(r) for r in t.Q]
    cells = []
    while P:
        a, b = _pop_last(P, Q)
        cells.append(Cell(b, a))
    try:
        U = Monomial(v, tuple(cells))
        ok = U.in_grid("N_tilde") and brsk(U) == t
    except InvalidInputError:
        ok = False
    if not ok:
        raise NotInvertibleError(f"{t.to_json()} is not the BRSK image of any monomial over {v!r}")
    return U


def rows_to_standard_monomial(t: NotchedTableauPair, v: IndexSet) -> StandardMonomial:
    """Read the tableau top-down; row i swaps the columns in ``P[i]`` for the rows in ``Q[i]``."""
    try:
        return StandardMonomial(tuple(swap_entries(v, p, q) for p, q in zip(t.P, t.Q)))
    except InvalidInputError as exc:
        raise InvalidInputError(f"invalid tableau for {v!r}: {exc}") from exc


def tableau_from_standard_monomial(sm: StandardMonomial, v: IndexSet) -> NotchedTableauPair:
    vs = set(v.entries)
    P = []
    Q = []
    for word in sm:
        ws = set(word.entries)
        P.append(tuple(sorted(vs - ws)))
        Q.append(tuple(sorted(ws - vs, reverse=True)))
    return NotchedTableauPair(tuple(P), tuple(Q))
