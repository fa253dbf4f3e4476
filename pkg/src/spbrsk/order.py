"""Index sets, the componentwise order, degrees and standard tableaux."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from spbrsk.errors import InvalidInputError


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing tuple of integers drawn from ``1..n``."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.n < 1:
            raise InvalidInputError(f"ambient size must be positive, got {self.n}")
        if any(b <= a for a, b in zip(entries, entries[1:])):
            raise InvalidInputError(f"entries {list(entries)} are not strictly increasing")
        if entries and (entries[0] < 1 or entries[-1] > self.n):
            raise InvalidInputError(f"entries {list(entries)} not inside [1, {self.n}]")

    @classmethod
    def of(cls, entries: Iterable[int], n: int) -> IndexSet:
        """Build from any iterable; duplicates are rejected, order is not required."""
        values = [int(e) for e in entries]
        if len(set(values)) != len(values):
            raise InvalidInputError(f"repeated entry in {values}")
        return cls(tuple(sorted(values)), n)

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __contains__(self, item) -> bool:
        return item in self.entries

    def __le__(self, other: IndexSet) -> bool:
        return leq(self, other)

    def __ge__(self, other: IndexSet) -> bool:
        return leq(other, self)

    def __repr__(self):
        return "{" + ",".join(map(str, self.entries)) + "}"

    def to_json(self) -> list[int]:
        return list(self.entries)


def star(j: int, d: int) -> int:
    """The partner ``2d + 1 - j`` of ``j``."""
    return 2 * d + 1 - j


def is_member_I_d(x: IndexSet | Iterable[int], d: int) -> bool:
    """True iff ``x`` holds exactly one of ``j``, ``j*`` for every ``j <= d``."""
    entries = tuple(x)
    if len(entries) != d or len(set(entries)) != d:
        raise InvalidInputError(f"expected {d} distinct entries, got {list(entries)}")
    if any(e < 1 or e > 2 * d for e in entries):
        raise InvalidInputError(f"entries {list(entries)} not inside [1, {2 * d}]")
    chosen = set(entries)
    return all((j in chosen) != (star(j, d) in chosen) for j in range(1, d + 1))


def require_I_d(x: IndexSet, d: int) -> None:
    if x.n != 2 * d or not is_member_I_d(x, d):
        raise InvalidInputError(f"{x!r} is not in I({d})")


def leq(a: IndexSet, b: IndexSet) -> bool:
    """Componentwise comparison ``a_i <= b_i`` of two index sets of the same shape."""
    if len(a) != len(b) or a.n != b.n:
        raise InvalidInputError(f"cannot compare {a!r} in [{a.n}] with {b!r} in [{b.n}]")
    return all(x <= y for x, y in zip(a.entries, b.entries))


def iter_I_rn(r: int, n: int) -> Iterator[IndexSet]:
    """All r-subsets of [n] in lexicographic order."""
    for entries in itertools.combinations(range(1, n + 1), r):
        yield IndexSet(entries, n)


def iter_I_d(d: int) -> Iterator[IndexSet]:
    """All members of I(d) in lexicographic order."""
    for x in iter_I_rn(d, 2 * d):
        if is_member_I_d(x, d):
            yield x


def eps_degree(x: IndexSet, d: int) -> int:
    """Number of entries of ``x`` above ``d``."""
    require_I_d(x, d)
    return sum(1 for e in x if e > d)


def v_degree(x: IndexSet, v: IndexSet) -> int:
    """``|x \\ v|`` for two index sets of the same shape."""
    if len(x) != len(v) or x.n != v.n:
        raise InvalidInputError(f"shape mismatch between {x!r} and {v!r}")
    return len(set(x.entries) - set(v.entries))


@dataclass(frozen=True, order=True)
class HalfInt:
    """A non-negative multiple of 1/2, stored as twice its value."""

    doubled: int

    def __post_init__(self):
        if self.doubled < 0:
            raise InvalidInputError(f"negative half-integer {self.doubled}/2")

    def __add__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.doubled + other.doubled)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_json(self) -> int | float:
        return self.doubled // 2 if self.is_integer() else self.doubled / 2

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class AdmissiblePair:
    """Pair ``(top, bot)`` in I(d) with ``top >= bot`` and equal epsilon-degrees."""

    top: IndexSet
    bot: IndexSet

    def __post_init__(self):
        d = len(self.top)
        require_I_d(self.top, d)
        require_I_d(self.bot, d)
        if not leq(self.bot, self.top):
            raise InvalidInputError(f"top {self.top!r} is not >= bot {self.bot!r}")
        if eps_degree(self.top, d) != eps_degree(self.bot, d):
            raise InvalidInputError(f"epsilon-degrees of {self.top!r} and {self.bot!r} differ")

    @property
    def d(self) -> int:
        return len(self.top)

    def to_json(self) -> dict:
        return {"top": self.top.to_json(), "bot": self.bot.to_json()}

    @classmethod
    def from_json(cls, data: dict, d: int | None = None) -> AdmissiblePair:
        try:
            top, bot = data["top"], data["bot"]
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"admissible pair needs 'top' and 'bot': {data!r}") from exc
        d = d or len(top)
        return cls(IndexSet.of(top, 2 * d), IndexSet.of(bot, 2 * d))


def admissible_pairs(d: int) -> list[AdmissiblePair]:
    """Every admissible pair for ``d``, ordered lexicographically by (top, bot)."""
    members = list(iter_I_d(d))
    eps = {x: eps_degree(x, d) for x in members}
    return [
        AdmissiblePair(x, y)
        for x in members
        for y in members
        if leq(y, x) and eps[x] == eps[y]
    ]


def v_degree_pair(p: AdmissiblePair, v: IndexSet) -> HalfInt:
    return HalfInt(v_degree(p.top, v) + v_degree(p.bot, v))


@dataclass(frozen=True)
class StandardTableau:
    """A sequence of admissible pairs; standardness is checked, not enforced."""

    pairs: tuple[AdmissiblePair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[AdmissiblePair]:
        return iter(self.pairs)

    def is_standard(self) -> bool:
        return all(leq(b.top, a.bot) for a, b in zip(self.pairs, self.pairs[1:]))

    def to_json(self) -> dict:
        return {"pairs": [p.to_json() for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict, d: int | None = None) -> StandardTableau:
        if not isinstance(data, dict) or not isinstance(data.get("pairs"), list):
            raise InvalidInputError(f"standard tableau needs a 'pairs' list: {data!r}")
        return cls(tuple(AdmissiblePair.from_json(p, d) for p in data["pairs"]))

    def sort_key(self) -> tuple:
        return tuple((p.top.entries, p.bot.entries) for p in self.pairs)


def tableau_degree(T: StandardTableau, v: IndexSet) -> HalfInt:
    total = HalfInt(0)
    for p in T:
        total = total + v_degree_pair(p, v)
    return total


class TableauFlags(NamedTuple):
    standard: bool
    v_compatible: bool
    w_dominated: bool
    anti_dominated: bool


def classify_tableau(T: StandardTableau, v: IndexSet, w: IndexSet) -> TableauFlags:
    vv = (v, v)
    compatible = all(
        (leq(p.top, v) or leq(v, p.bot)) and (p.top, p.bot) != vv for p in T
    )
    # the empty tableau is dominated and anti-dominated by anything
    dominated = not T.pairs or leq(T.pairs[0].top, w)
    anti = not T.pairs or leq(v, T.pairs[-1].bot)
    return TableauFlags(T.is_standard(), compatible, dominated, anti)


@dataclass(frozen=True)
class StandardMonomial:
    """Non-increasing sequence of d-subsets of [2d]."""

    words: tuple[IndexSet, ...] = ()

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, "words", words)
        for a, b in zip(words, words[1:]):
            if not leq(b, a):
                raise InvalidInputError(f"words not non-increasing: {a!r} then {b!r}")

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.words)

    def is_v_compatible(self, v: IndexSet) -> bool:
        return all((leq(t, v) or leq(v, t)) and t != v for t in self.words)

    def is_anti_dominated(self, v: IndexSet) -> bool:
        return not self.words or leq(v, self.words[-1])

    def to_json(self) -> dict:
        return {"words": [w.to_json() for w in self.words]}

    @classmethod
    def from_json(cls, data: dict, n: int) -> StandardMonomial:
        if not isinstance(data, dict) or not isinstance(data.get("words"), list):
            raise InvalidInputError(f"standard monomial needs a 'words' list: {data!r}")
        return cls(tuple(IndexSet.of(w, n) for w in data["words"]))
