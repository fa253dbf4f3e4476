"""From standard tableaux to folded monomials, and the two sides of the Hilbert-function count."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from spbrsk.brsk import brsk_inverse, tableau_from_standard_monomial
from spbrsk.errors import ConsistencyError, InvalidInputError
from spbrsk.grid import Monomial, dominates_monomial, grid_cells, iter_monomials, mirror
from spbrsk.order import (
    AdmissiblePair,
    IndexSet,
    StandardMonomial,
    StandardTableau,
    admissible_pairs,
    classify_tableau,
    leq,
    require_I_d,
    star,
    v_degree_pair,
)


@dataclass(frozen=True)
class SpecialityReport:
    symmetric: bool
    diagonal_parities_even: bool

    @property
    def special(self) -> bool:
        return self.symmetric and self.diagonal_parities_even


@dataclass(frozen=True)
class HilbertTable:
    v: IndexSet
    w: IndexSet
    counts: tuple[int, ...]

    def to_csv(self) -> str:
        return "".join(f"{m},{c}\n" for m, c in enumerate(self.counts))

    def to_json(self) -> dict:
        return {"v": self.v.to_json(), "w": self.w.to_json(), "counts": list(self.counts)}


def in_SM_vv(T: StandardTableau, v: IndexSet) -> bool:
    flags = classify_tableau(T, v, v)
    return flags.standard and flags.v_compatible and flags.anti_dominated


def flatten_f(T: StandardTableau, v: IndexSet) -> StandardMonomial:
    """List ``top_1, bot_1, top_2, bot_2, ...`` as one standard monomial.

    Only the last bottom can equal ``v``; that word carries no degree and is
    dropped so the result stays v-compatible.
    """
    if not in_SM_vv(T, v):
        raise InvalidInputError("tableau is not a v-compatible standard tableau anti-dominated by v")
    words = []
    for p in T:
        words.extend((p.top, p.bot))
    if words and words[-1] == v:
        words.pop()
    return StandardMonomial(tuple(words))


def is_special(U: Monomial) -> SpecialityReport:
    d = U.d
    counts = U.counts
    symmetric = all(counts[mirror(c, d)] == k for c, k in counts.items())
    diagonal = all(k % 2 == 0 for c, k in counts.items() if c.row == star(c.col, d))
    return SpecialityReport(symmetric, diagonal)


def fold_g(U: Monomial) -> Monomial:
    """Reflect cells below the antidiagonal onto it, then halve every multiplicity."""
    if not is_special(U).special:
        raise InvalidInputError("fold is only defined on special monomials")
    d = U.d
    folded = Counter()
    for cell, k in U.counts.items():
        if cell.row > star(cell.col, d):
            cell = mirror(cell, d)
        folded[cell] += k
    cells = []
    for cell, k in sorted(folded.items()):
        cells.extend([cell] * (k // 2))
    return Monomial(U.v, tuple(cells))


def unfold_g_inv(S: Monomial) -> Monomial:
    S.require_grid("N_folded")
    d = S.d
    cells = []
    for cell, k in S.counts.items():
        if cell.row == star(cell.col, d):
            cells.extend([cell] * (2 * k))
        else:
            cells.extend([cell] * k + [mirror(cell, d)] * k)
    return Monomial(S.v, tuple(cells))


def eta(T: StandardTableau, v: IndexSet) -> Monomial:
    """Flatten, invert BRSK, then fold."""
    require_I_d(v, len(v))
    sm = flatten_f(T, v)
    U = brsk_inverse(tableau_from_standard_monomial(sm, v), v)
    report = is_special(U)
    if not report.special:
        raise ConsistencyError(
            f"inverse BRSK of f(T) is not special ({report!r}); T={T.to_json()} U={U.to_json()}"
        )
    return fold_g(U)


def _check_pair(v: IndexSet, w: IndexSet) -> int:
    d = len(v)
    require_I_d(v, d)
    require_I_d(w, d)
    if not leq(v, w):
        raise InvalidInputError(f"need v <= w, got v={v!r} w={w!r}")
    return d


def iter_S_w_v(w: IndexSet, v: IndexSet, m: int, all_chains: bool = False) -> Iterator[Monomial]:
    _check_pair(v, w)
    for S in iter_monomials(v, grid_cells(v, "R"), m):
        if dominates_monomial(w, S, all_chains=all_chains):
            yield S


def enumerate_S_w_v(w: IndexSet, v: IndexSet, m: int, all_chains: bool = False) -> list[Monomial]:
    return list(iter_S_w_v(w, v, m, all_chains))


def _iter_tableaux(pairs: list[AdmissiblePair], v: IndexSet, first: IndexSet | None, max_doubled: int):
    """Depth-first over standard tableaux built from ``pairs``; yields (tableau, doubled degree)."""
    weight = {p: v_degree_pair(p, v).doubled for p in pairs}

    def grow(seq, doubled):
        yield StandardTableau(tuple(seq)), doubled
        for p in pairs:
            if seq and not leq(p.top, seq[-1].bot):
                continue
            if not seq and first is not None and not leq(p.top, first):
                continue
            nd = doubled + weight[p]
            if nd <= max_doubled:
                yield from grow(seq + [p], nd)

    yield from grow([], 0)


def enumerate_SM_w_v(w: IndexSet, v: IndexSet, m: int) -> list[StandardTableau]:
    d = _check_pair(v, w)
    vv = (v, v)
    # every allowed pair has positive degree, so the search is finite
    pairs = [
        p for p in admissible_pairs(d)
        if (leq(p.top, v) or leq(v, p.bot)) and (p.top, p.bot) != vv
    ]
    found = [T for T, k in _iter_tableaux(pairs, v, w, 2 * m) if k == 2 * m]
    return sorted(found, key=StandardTableau.sort_key)


def enumerate_SM_vv(v: IndexSet, maxdeg: int) -> list[StandardTableau]:
    """All v-compatible standard tableaux anti-dominated by ``v`` of degree at most ``maxdeg``."""
    d = len(v)
    require_I_d(v, d)
    pairs = [p for p in admissible_pairs(d) if leq(v, p.bot) and (p.top, p.bot) != (v, v)]
    found = [T for T, _ in _iter_tableaux(pairs, v, None, 2 * maxdeg)]
    return sorted(found, key=StandardTableau.sort_key)


def hilbert_function(w: IndexSet, v: IndexSet, M: int, all_chains: bool = False) -> HilbertTable:
    counts = tuple(sum(1 for _ in iter_S_w_v(w, v, m, all_chains)) for m in range(M + 1))
    return HilbertTable(v, w, counts)
