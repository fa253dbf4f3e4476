"""The peeling map pi and its iteration pi-tilde."""

from __future__ import annotations

from dataclasses import dataclass

from spbrsk.errors import EmptyMonomialError
from spbrsk.grid import Cell, Monomial, block_decomposition, dominates_monomial, s_action
from spbrsk.order import IndexSet, StandardMonomial, leq


@dataclass(frozen=True)
class PeelStep:
    w: IndexSet
    remainder: Monomial
    distinguished: tuple[Cell, ...]


@dataclass(frozen=True)
class PeelTrace:
    v: IndexSet
    steps: tuple[PeelStep, ...] = ()

    @property
    def words(self) -> StandardMonomial:
        return StandardMonomial(tuple(s.w for s in self.steps))

    @property
    def distinguished(self) -> list[tuple[Cell, ...]]:
        return [s.distinguished for s in self.steps]

    def to_json(self) -> dict:
        return {
            "words": [s.w.to_json() for s in self.steps],
            "distinguished": [[[c.row, c.col] for c in s.distinguished] for s in self.steps],
        }


def pi_step(U: Monomial) -> PeelStep:
    """Peel one layer off ``U``.

    Each block ``(r_1,c_1), ..., (r_p,c_p)`` of every depth gives up the cell
    ``(r_p, c_1)`` and leaves ``(r_1,c_2), ..., (r_{p-1},c_p)`` behind.
    """
    if not U:
        raise EmptyMonomialError("cannot peel the empty monomial")
    U.require_grid("N_tilde")
    distinguished = []
    remainder = []
    for blocks in block_decomposition(U).values():
        for block in blocks:
            distinguished.append(Cell(block[-1].row, block[0].col))
            remainder.extend(Cell(a.row, b.col) for a, b in zip(block, block[1:]))
    distinguished.sort()
    return PeelStep(
        w=s_action(U.v, distinguished),
        remainder=Monomial(U.v, tuple(remainder)),
        distinguished=tuple(distinguished),
    )


def pi_tilde(U: Monomial) -> PeelTrace:
    steps = []
    while U:
        step = pi_step(U)
        steps.append(step)
        U = step.remainder
    return PeelTrace(U.v, tuple(steps))


def domination_equals_top(w: IndexSet, U: Monomial) -> bool:
    """Does "w dominates U" agree with "w >= first word of pi-tilde(U)"?

    Only used to collect agreement statistics; never a definition of domination.
    """
    trace = pi_tilde(U)
    by_top = not trace.steps or leq(trace.steps[0].w, w)
    return dominates_monomial(w, U) == by_top
