"""Acceptance suite. Run with ``pytest tests/test_acceptance.py -s`` to see one line per criterion."""

import random
import subprocess
import sys
import time
from math import comb

import oracles
from conftest import iset, mono
from spbrsk import verify
from spbrsk.brsk import NotchedTableauPair, brsk
from spbrsk.bridge import hilbert_function
from spbrsk.grid import Monomial, depth_map, dominates_monomial, grid_cells
from spbrsk.order import iter_I_d, iter_I_rn, leq
from spbrsk.peel import pi_tilde

CORPUS = [(v, 5) for v in iter_I_rn(2, 4)] + [(iset(*e), 4) for e in ((1, 2, 3), (1, 2, 5), (1, 4, 5))]


def report(number, label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label}"
    print(line + (f" ({detail})" if detail else ""))
    assert ok, detail or label


def analytic_size(v, max_size):
    # multisets of size m from k cells; an empty grid only has the empty monomial
    k = len(grid_cells(v, "N_tilde"))
    return sum(comb(k + m - 1, m) if k else m == 0 for m in range(max_size + 1))


def test_criterion_1_main_theorem():
    began = time.perf_counter()
    bad, total = [], 0
    for v, size in CORPUS:
        r = verify.verify_main_theorem(v, size)
        total += r.instances_checked
        if not r.passed or r.instances_checked != analytic_size(v, size):
            bad.append((v.entries, r.instances_checked, len(r.mismatches)))
    elapsed = time.perf_counter() - began
    assert analytic_size(iset(1, 3), 4) == 35
    report(1, "peeling equals BRSK on the exhaustive corpus", not bad and elapsed < 300,
           f"{total} monomials, {elapsed:.1f}s, failures {bad}")


def test_criterion_2_round_trip():
    bad, total = [], 0
    for v, size in CORPUS:
        r = verify.verify_round_trip(v, size)
        total += r.instances_checked
        if not r.passed:
            bad.append((v.entries, len(r.mismatches)))
    report(2, "inverse BRSK undoes BRSK on the same corpus", not bad, f"{total} monomials, failures {bad}")


def test_criterion_3_fixed_values():
    v = iset(1, 3)
    U = mono(v, (2, 1), (4, 1), (4, 3))
    doubled = mono(v, (2, 1), (2, 1), (4, 3), (4, 3))
    checks = [
        brsk(U) == NotchedTableauPair(((1,), (1, 3)), ((4,), (4, 2))),
        pi_tilde(U).words.words == (iset(3, 4), iset(2, 4)),
        set(oracles.depth(U.cells).values()) == {1},
        brsk(doubled) == NotchedTableauPair(((1, 3), (1, 3)), ((4, 2), (4, 2))),
    ]
    report(3, "fixed BRSK and peeling values", all(checks), f"checks {checks}")


def test_criterion_4_eta():
    details, ok = [], True
    for v in (iset(1, 3), iset(1, 2, 3)):
        r = verify.verify_eta_bijection(v, 3)
        k = len(grid_cells(v, "N_folded"))
        expected = [comb(k + m - 1, m) for m in range(4)]
        good = r.passed and r.extra["image_by_degree"] == expected
        ok = ok and good
        details.append(f"v={list(v.entries)} images {r.extra['image_by_degree']}")
    report(4, "eta is injective, degree preserving, special, and fills each degree", ok, "; ".join(details))


def test_criterion_5_hilbert():
    v = iset(1, 3)
    got = {w: hilbert_function(iset(*w), v, 2).counts for w in ((1, 3), (2, 4), (3, 4))}
    want = {(1, 3): (1, 1, 1), (2, 4): (1, 2, 3), (3, 4): (1, 3, 6)}
    sizes = all(len(grid_cells(u, "R")) == d * (d + 1) // 2 for d in range(1, 5) for u in iter_I_d(d))
    report(5, "Hilbert values for v={1,3} and the size of R", got == want and sizes, f"{got}")


def test_criterion_6_counting():
    pairs = [(v, w, 3) for v in iter_I_d(2) for w in iter_I_d(2) if leq(v, w)]
    rank3 = [(v, w) for v in iter_I_d(3) for w in iter_I_d(3) if leq(v, w)]
    rng = random.Random(20240611)
    pairs += [(v, w, 2) for v, w in rng.sample(rank3, 5)]
    bad = []
    for v, w, mmax in pairs:
        r = verify.verify_counting(v, w, mmax)
        if not r.passed:
            bad.append((v.entries, w.entries, r.extra["counts"], r.extra["tableau_counts"]))
    report(6, "standard tableaux and dominated monomials have equal counts", not bad,
           f"{len(pairs)} pairs, failures {bad}")


def test_criterion_7_oracles():
    rng = random.Random(7)
    pool = [v for d in (2, 3, 4) for v in iter_I_rn(d, 2 * d) if grid_cells(v, "N_tilde")]
    depth_bad = dom_bad = 0
    samples = 1500
    for _ in range(samples):
        v = rng.choice(pool)
        cells = grid_cells(v, "N_tilde")
        U = Monomial(v, tuple(rng.choice(cells) for _ in range(rng.randint(0, 6))))
        if depth_map(U) != oracles.depth(U.cells):
            depth_bad += 1
        w = rng.choice(list(iter_I_rn(len(v), v.n)))
        a = dominates_monomial(w, U)
        b = dominates_monomial(w, U, all_chains=True)
        if not a == b == oracles.dominates(w.entries, U.cells, v.entries):
            dom_bad += 1
    report(7, "depth and domination agree with the chain oracles", depth_bad == dom_bad == 0,
           f"{samples} monomials, depth disagreements {depth_bad}, domination disagreements {dom_bad}")


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "spbrsk.cli", *argv],
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_8_determinism():
    commands = [
        ("verify", "main", "--v", "all", "--d", "2", "--max-size", "5"),
        ("verify", "roundtrip", "--v", "1,2,3", "--max-size", "4"),
        ("verify", "counting", "--v", "1,2,3", "--max-m", "2"),
    ]
    diffs = []
    for cmd in commands:
        one = _cli(*cmd, "--jobs", "1")
        eight = _cli(*cmd, "--jobs", "8")
        if one != eight or one[0] != 0:
            diffs.append(cmd[1])
    report(8, "reports are byte identical for 1 and 8 jobs", not diffs, f"differing {diffs}")
