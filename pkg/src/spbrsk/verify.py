"""Exhaustive verification harnesses.

Each harness walks a corpus in canonical order and records every failed
check as a counterexample. Corpus harnesses split the stream into contiguous
ranges for worker processes and merge the partial results in range order, so
the report does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from spbrsk.bridge import (
    enumerate_SM_vv,
    enumerate_SM_w_v,
    eta,
    hilbert_function,
)
from spbrsk.brsk import brsk, brsk_inverse, rows_to_standard_monomial
from spbrsk.errors import ConsistencyError, InvalidInputError, NotInvertibleError
from spbrsk.grid import Monomial, corpus_size, grid_cells, iter_corpus, multiset_count
from spbrsk.order import IndexSet, leq, require_I_d, tableau_degree, v_degree
from spbrsk.peel import pi_tilde


@dataclass
class VerificationReport:
    kind: str
    parameters: dict
    instances_checked: int = 0
    expected_instances: int = 0
    mismatches: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.instances_checked == self.expected_instances

    def to_json(self) -> dict:
        # elapsed time is left out so reports are reproducible byte for byte
        out = {
            "kind": self.kind,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "expected_instances": self.expected_instances,
            "pass": self.passed,
            "mismatches": self.mismatches,
        }
        out.update(self.extra)
        return out


def _cells_json(cells) -> list[list[int]]:
    return [[c.row, c.col] for c in cells]


def check_main_theorem(U: Monomial) -> list[dict]:
    """Compare the peeling of ``U`` with its BRSK tableau row by row."""
    v = U.v
    problems = []
    trace = pi_tilde(U)
    t = brsk(U)
    record = {
        "monomial": _cells_json(U.cells),
        "expected": trace.to_json(),
        "actual": t.to_json(),
    }
    if len(t.P) != len(trace.steps):
        problems.append({"check": "row_count", **record})
    for i, step in enumerate(trace.steps):
        if i >= len(t.P):
            break
        cols = sorted(c.col for c in step.distinguished)
        rows = sorted(c.row for c in step.distinguished)
        if cols != sorted(t.P[i]) or rows != sorted(t.Q[i]):
            problems.append({"check": "row_match", "row": i + 1, **record})
            break
    if sum(len(s.distinguished) for s in trace.steps) != len(U):
        problems.append({"check": "degree", **record})
    for step in trace.steps:
        if len(step.distinguished) != v_degree(step.w, v) or not leq(v, step.w) or step.w == v:
            problems.append({"check": "anti_domination", **record})
            break
    if any(not leq(b.w, a.w) for a, b in zip(trace.steps, trace.steps[1:])):
        problems.append({"check": "standard", **record})
    if not problems:
        try:
            words = rows_to_standard_monomial(t, v)
        except InvalidInputError:
            problems.append({"check": "tableau_words", **record})
        else:
            if words != trace.words:
                problems.append({"check": "tableau_words", **record})
    return problems


def check_round_trip(U: Monomial) -> list[dict]:
    t = brsk(U)
    try:
        back = brsk_inverse(t, U.v)
    except NotInvertibleError as exc:
        return [{"check": "round_trip", "monomial": _cells_json(U.cells),
                 "tableau": t.to_json(), "error": str(exc)}]
    if back != U:
        return [{"check": "round_trip", "monomial": _cells_json(U.cells),
                 "tableau": t.to_json(), "recovered": _cells_json(back.cells)}]
    return []


_CHECKS = {"main": check_main_theorem, "roundtrip": check_round_trip}


def _run_chunk(kind: str, entries: tuple, n: int, max_size: int, start: int, stop: int):
    check = _CHECKS[kind]
    v = IndexSet(entries, n)
    count = 0
    found = []
    for U in itertools.islice(iter_corpus(v, max_size), start, stop):
        count += 1
        found.extend(check(U))
    return count, found


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    pieces = max(1, min(total, 4 * jobs))
    bounds = [total * i // pieces for i in range(pieces + 1)]
    return list(zip(bounds, bounds[1:]))


def _corpus_harness(kind: str, v: IndexSet, max_size: int, jobs: int) -> VerificationReport:
    began = time.perf_counter()
    expected = corpus_size(v, max_size)
    report = VerificationReport(
        kind=kind,
        parameters={"v": v.to_json(), "d": len(v), "max_size": max_size},
        expected_instances=expected,
    )
    args = [(kind, v.entries, v.n, max_size, a, b) for a, b in _chunks(expected, jobs)]
    if jobs <= 1 or len(args) <= 1:
        results = [_run_chunk(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, *zip(*args)))
    for count, found in results:
        report.instances_checked += count
        report.mismatches.extend(found)
    report.elapsed = time.perf_counter() - began
    return report


def verify_main_theorem(v: IndexSet, max_size: int, jobs: int = 1) -> VerificationReport:
    """Peeling against BRSK on every monomial over ``N_tilde`` with at most ``max_size`` cells."""
    return _corpus_harness("main", v, max_size, jobs)


def verify_round_trip(v: IndexSet, max_size: int, jobs: int = 1) -> VerificationReport:
    return _corpus_harness("roundtrip", v, max_size, jobs)


def verify_eta_bijection(v: IndexSet, maxdeg: int) -> VerificationReport:
    """Injectivity, degree, speciality and per-degree image size of eta up to ``maxdeg``."""
    began = time.perf_counter()
    d = len(v)
    require_I_d(v, d)
    folded = len(grid_cells(v, "N_folded"))
    expected_by_degree = [multiset_count(folded, m) for m in range(maxdeg + 1)]
    report = VerificationReport(
        kind="eta",
        parameters={"v": v.to_json(), "d": d, "max_degree": maxdeg},
        expected_instances=sum(expected_by_degree),
    )
    seen: dict[tuple, dict] = {}
    image_by_degree = Counter()
    for T in enumerate_SM_vv(v, maxdeg):
        report.instances_checked += 1
        degree = tableau_degree(T, v)
        try:
            image = eta(T, v)
        except (ConsistencyError, NotInvertibleError) as exc:
            report.mismatches.append({"check": "special", "tableau": T.to_json(), "error": str(exc)})
            continue
        if not degree.is_integer() or len(image) != degree.doubled // 2:
            report.mismatches.append({"check": "degree", "tableau": T.to_json(),
                                      "image": image.to_json()["cells"], "degree": degree.to_json()})
            continue
        key = image.cells
        if key in seen:
            report.mismatches.append({"check": "injective", "tableau": T.to_json(),
                                      "other": seen[key], "image": image.to_json()["cells"]})
            continue
        seen[key] = T.to_json()
        image_by_degree[len(image)] += 1
    counts = [image_by_degree[m] for m in range(maxdeg + 1)]
    if counts != expected_by_degree:
        report.mismatches.append({"check": "image_size", "expected": expected_by_degree, "actual": counts})
    report.extra = {"image_by_degree": counts, "folded_by_degree": expected_by_degree}
    report.elapsed = time.perf_counter() - began
    return report


def verify_counting(v: IndexSet, w: IndexSet, mmax: int, all_chains: bool = False) -> VerificationReport:
    """Compare the number of tableaux and of dominated monomials in each degree."""
    began = time.perf_counter()
    monomials = list(hilbert_function(w, v, mmax, all_chains=all_chains).counts)
    tableaux = [len(enumerate_SM_w_v(w, v, m)) for m in range(mmax + 1)]
    report = VerificationReport(
        kind="counting",
        parameters={"v": v.to_json(), "w": w.to_json(), "d": len(v), "max_degree": mmax},
        instances_checked=mmax + 1,
        expected_instances=mmax + 1,
        extra={"counts": monomials, "tableau_counts": tableaux},
    )
    for m, (a, b) in enumerate(zip(tableaux, monomials)):
        if a != b:
            report.mismatches.append({"check": "count", "m": m, "tableaux": a, "monomials": b})
    report.elapsed = time.perf_counter() - began
    return report
