"""Cell grids over an index set, monomials in them, v-chains and block structure.

A cell ``(r, c)`` always has its row outside ``v`` and its column inside ``v``.
Four grids are used:

* ``N_tilde``: ``r > c``; meaningful for any ``v`` in I(d, 2d).
* ``N``: the same cells when ``v`` lies in I(d).
* ``R``: ``r <= c*``.
* ``N_folded``: ``c < r <= c*``, i.e. ``N`` intersected with ``R``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple

from spbrsk.errors import InvalidInputError
from spbrsk.order import IndexSet, is_member_I_d, leq, star

GRID_KINDS = ("R", "N", "N_tilde", "N_folded")


class Cell(NamedTuple):
    row: int
    col: int

    def __repr__(self):
        return f"({self.row},{self.col})"


def _in_rect(cell: Cell, v: IndexSet) -> bool:
    r, c = cell
    return 1 <= r <= v.n and r not in v and c in v


def in_grid(cell: Cell, v: IndexSet, kind: str) -> bool:
    if not _in_rect(cell, v):
        return False
    d = len(v)
    r, c = cell
    if kind in ("N", "N_tilde"):
        return r > c
    if kind == "R":
        return r <= star(c, d)
    if kind == "N_folded":
        return c < r <= star(c, d)
    raise InvalidInputError(f"unknown grid {kind!r}")


def grid_cells(v: IndexSet, kind: str) -> list[Cell]:
    """Cells of one grid in lexicographic (row, col) order."""
    if kind != "N_tilde":
        _require_symplectic(v)
    return [
        Cell(r, c)
        for r in range(1, v.n + 1)
        for c in v
        if in_grid(Cell(r, c), v, kind)
    ]


def _require_symplectic(v: IndexSet) -> None:
    d = len(v)
    if v.n != 2 * d or not is_member_I_d(v, d):
        raise InvalidInputError(f"{v!r} is not in I({d}); only N_tilde is defined")


def build_grids(v: IndexSet, d: int | None = None, symplectic: bool = True) -> dict[str, list[Cell]]:
    """All four grids for ``v``, or only ``N_tilde`` when ``symplectic`` is false."""
    d = len(v) if d is None else d
    if v.n != 2 * d or len(v) != d:
        raise InvalidInputError(f"{v!r} is not a {d}-subset of [{2 * d}]")
    if not symplectic:
        return {"N_tilde": grid_cells(v, "N_tilde")}
    _require_symplectic(v)
    return {kind: grid_cells(v, kind) for kind in GRID_KINDS}


def mirror(cell: Cell, d: int) -> Cell:
    """Reflect across the antidiagonal: ``(r, c) -> (c*, r*)``."""
    return Cell(star(cell.col, d), star(cell.row, d))


def chain_gt(b1: Cell, b2: Cell) -> bool:
    return b1.row > b2.row and b1.col < b2.col


def swap_entries(v: IndexSet, cols: Iterable[int], rows: Iterable[int]) -> IndexSet:
    """Remove ``cols`` from ``v`` and add ``rows``."""
    cols, rows = list(cols), list(rows)
    if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
        raise InvalidInputError(f"repeated row or column in rows={rows} cols={cols}")
    if len(cols) != len(rows):
        raise InvalidInputError(f"{len(rows)} rows against {len(cols)} columns")
    if not set(cols) <= set(v.entries):
        raise InvalidInputError(f"columns {cols} not all in {v!r}")
    if set(rows) & set(v.entries):
        raise InvalidInputError(f"rows {rows} meet {v!r}")
    return IndexSet.of((set(v.entries) - set(cols)) | set(rows), v.n)


def s_action(v: IndexSet, cells: Iterable[Cell]) -> IndexSet:
    cells = list(cells)
    return swap_entries(v, [c for _, c in cells], [r for r, _ in cells])


@dataclass(frozen=True)
class Monomial:
    """A finite multiset of cells, stored as a sorted tuple with repetition."""

    v: IndexSet
    cells: tuple[Cell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(Cell(*c) for c in self.cells)))
        for cell in self.cells:
            if not _in_rect(cell, self.v):
                raise InvalidInputError(f"cell {cell!r} has row in v or column outside {self.v!r}")

    @property
    def d(self) -> int:
        return len(self.v)

    def __len__(self):
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __bool__(self):
        return bool(self.cells)

    @property
    def counts(self) -> Counter:
        return Counter(self.cells)

    def distinct(self) -> list[Cell]:
        return sorted(set(self.cells))

    def rows(self) -> list[int]:
        return sorted(c.row for c in self.cells)

    def cols(self) -> list[int]:
        return sorted(c.col for c in self.cells)

    def in_grid(self, kind: str) -> bool:
        return all(in_grid(c, self.v, kind) for c in self.cells)

    def require_grid(self, kind: str) -> None:
        bad = [c for c in self.cells if not in_grid(c, self.v, kind)]
        if bad:
            raise InvalidInputError(f"cells {bad} are not in the {kind} grid of {self.v!r}")

    def to_json(self) -> dict:
        return {
            "v": self.v.to_json(),
            "d": self.d,
            "cells": [[c.row, c.col] for c in self.cells],
        }

    @classmethod
    def from_json(cls, data, v: IndexSet | None = None) -> Monomial:
        """Accepts the full object form or a bare ``[[r, c], ...]`` list (then ``v`` is required)."""
        if isinstance(data, dict):
            if "v" not in data or "cells" not in data:
                raise InvalidInputError("monomial object needs 'v' and 'cells'")
            d = int(data.get("d", len(data["v"])))
            v = IndexSet.of(data["v"], 2 * d)
            data = data["cells"]
        if v is None:
            raise InvalidInputError("a bare cell list needs v")
        if not isinstance(data, list) or not all(
            isinstance(c, (list, tuple)) and len(c) == 2 for c in data
        ):
            raise InvalidInputError(f"cells must be a list of [row, col] pairs: {data!r}")
        return cls(v, tuple(Cell(int(r), int(c)) for r, c in data))


def multiset_count(kinds: int, size: int) -> int:
    """Number of multisets of the given size over ``kinds`` elements."""
    if size == 0:
        return 1
    return comb(kinds + size - 1, size) if kinds else 0


def iter_monomials(v: IndexSet, cells: list[Cell], size: int) -> Iterator[Monomial]:
    for combo in itertools.combinations_with_replacement(sorted(cells), size):
        yield Monomial(v, combo)


def iter_corpus(v: IndexSet, max_size: int, kind: str = "N_tilde") -> Iterator[Monomial]:
    """Every monomial over a grid with at most ``max_size`` cells, by size then lexicographically."""
    cells = grid_cells(v, kind)
    for size in range(max_size + 1):
        yield from iter_monomials(v, cells, size)


def corpus_size(v: IndexSet, max_size: int, kind: str = "N_tilde") -> int:
    k = len(grid_cells(v, kind))
    return sum(multiset_count(k, n) for n in range(max_size + 1))


def iter_chains(cells: Iterable[Cell]) -> Iterator[tuple[Cell, ...]]:
    """Every non-empty v-chain among the distinct ``cells``, largest element first."""
    ordered = sorted(set(cells), key=lambda c: (-c.row, c.col))

    def extend(chain, start):
        yield chain
        for i in range(start, len(ordered)):
            if chain_gt(chain[-1], ordered[i]):
                yield from extend(chain + (ordered[i],), i + 1)

    for i, cell in enumerate(ordered):
        yield from extend((cell,), i + 1)


def maximal_chains(cells: Iterable[Cell]) -> Iterator[tuple[Cell, ...]]:
    """Chains that cannot be lengthened: paths through cover relations from a maximal to a minimal cell."""
    distinct = sorted(set(cells), key=lambda c: (-c.row, c.col))
    below = {a: [b for b in distinct if chain_gt(a, b)] for a in distinct}
    covers = {
        a: [b for b in below[a] if not any(chain_gt(m, b) for m in below[a])]
        for a in distinct
    }
    tops = [a for a in distinct if not any(chain_gt(b, a) for b in distinct)]

    def walk(chain):
        nxt = covers[chain[-1]]
        if not nxt:
            yield chain
        for b in nxt:
            yield from walk(chain + (b,))

    for a in tops:
        yield from walk((a,))


def dominates_chain(w: IndexSet, chain: Iterable[Cell], v: IndexSet) -> bool:
    return leq(s_action(v, chain), w)


def dominates_monomial(w: IndexSet, S: Monomial, all_chains: bool = False) -> bool:
    """Whether ``w`` dominates every v-chain in ``S`` (chains use only cells with row > col).

    Checking maximal chains suffices because dropping a cell from a chain can only
    lower its s-action; ``all_chains`` switches to the exhaustive check.
    """
    cells = [c for c in S.distinct() if c.row > c.col]
    chains = iter_chains(cells) if all_chains else maximal_chains(cells)
    return all(dominates_chain(w, ch, S.v) for ch in chains)


def depth_map(U: Monomial) -> dict[Cell, int]:
    """Length of the longest v-chain in ``U`` whose smallest element is the given cell."""
    depth: dict[Cell, int] = {}
    cells = sorted(set(U.cells), key=lambda c: -c.row)
    for cell in cells:
        above = [depth[g] for g in depth if chain_gt(g, cell)]
        depth[cell] = 1 + max(above, default=0)
    return depth


def block_decomposition(U: Monomial) -> dict[int, list[list[Cell]]]:
    """Split each depth layer of ``U`` into blocks, topmost block first.

    Cells of one depth are sorted by (row, col); a block continues while the
    row of the current cell exceeds the column of the next one.
    """
    depth = depth_map(U)
    layers: dict[int, list[Cell]] = {}
    for cell in U.cells:
        layers.setdefault(depth[cell], []).append(cell)
    out = {}
    for k in sorted(layers):
        layer = sorted(layers[k])
        for a, b in itertools.combinations(sorted(set(layer)), 2):
            # equal-depth cells are pairwise incomparable
            assert not chain_gt(a, b) and not chain_gt(b, a), (a, b)
        blocks = [[layer[0]]]
        for cell in layer[1:]:
            if blocks[-1][-1].row > cell.col:
                blocks[-1].append(cell)
            else:
                blocks.append([cell])
        out[k] = blocks
    return out
