"""Acceptance criteria.  Each test appends one PASS/FAIL line to the summary
printed at the end of the run."""

import itertools
import time

import pytest

from conftest import ACCEPTANCE_LINES
from hypernim.hypergraph import all_spectra, make_symmetric, spectrum_is_minimal_tf
from hypernim.jm import u_of
from hypernim.oracles import brute_tetris
from hypernim.sg import nim_sum, sg_on_box, sg_value
from hypernim.tetris import tetris_on_box
from hypernim.verify import (
    HOLDS,
    check_A0,
    check_B1,
    check_C2,
    check_C3,
    check_tetris_lemmas,
    find_sg_violation,
    verify_jm_on_box,
    verify_theorem2,
)


def record(name, ok, info=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {info}".rstrip())
    assert ok, f"{name}: {info}"


JM_CASES = [
    (3, (1, 2), 9),
    (4, (2,), 7),
    (4, (1, 2, 3), 6),
    (5, (2, 3), 5),
]


def test_1_closed_form_equivalence():
    start = time.perf_counter()
    bad = []
    checked = 0
    for n in range(1, 13):
        rep = verify_theorem2(n)
        checked += rep.checked
        if not rep.holds:
            bad.append((n, rep.witness))
    elapsed = time.perf_counter() - start
    assert checked == sum(2 ** n - 1 for n in range(1, 13))
    record("1 closed-form MTF test n=1..12", not bad and elapsed < 60,
           f"{checked} spectra, {len(bad)} discrepancies, {elapsed:.1f}s")


@pytest.mark.parametrize("n,sizes,b", JM_CASES, ids=lambda v: str(v))
def test_2_jm_equality_and_8_sg_characterization(n, sizes, b):
    H = make_symmetric(n, sizes)
    start = time.perf_counter()
    table = sg_on_box(H, (b,) * n)
    rep = verify_jm_on_box(H, (b,) * n, table=table)
    elapsed = time.perf_counter() - start
    violation = find_sg_violation(table)
    record(f"2 jm==sg n={n} lambda={sizes} box [0,{b}]^{n}",
           rep.holds and rep.checked == (b + 1) ** n and elapsed < 300,
           f"{rep.checked} positions, witness={rep.witness}, {elapsed:.1f}s")
    record(f"8 sg characterization n={n} lambda={sizes} box [0,{b}]^{n}",
           violation is None, f"violation={violation}")


def test_3_non_jm_witnesses():
    start = time.perf_counter()
    missing = []
    found = 0
    for n in (3, 4):
        for spec in all_spectra(n):
            if spectrum_is_minimal_tf(spec):
                continue
            rep = verify_jm_on_box(make_symmetric(n, spec), (5,) * n)
            if rep.holds:
                missing.append((n, spec.sizes))
            else:
                found += 1
    H = make_symmetric(3, (1,))
    u, g = u_of(H, (1, 2, 3)).u, sg_value(H, (1, 2, 3))
    elapsed = time.perf_counter() - start
    record("3 non-JM witnesses n=3,4 box [0,5]^n",
           not missing and (u, g) == (6, 0) and elapsed < 120,
           f"{found} witnesses, missing={missing}, lambda=(1) at (1,2,3): u={u} sg={g}, "
           f"{elapsed:.1f}s")


def test_4_classical_nim():
    start = time.perf_counter()
    bad = []
    for n in (2, 3):
        table = sg_on_box(make_symmetric(n, (1,)), (7,) * n)
        bad += [x for x in itertools.product(range(8), repeat=n) if table[x] != nim_sum(x)]
    elapsed = time.perf_counter() - start
    record("4 sg == nim-sum on [0,7]^2, [0,7]^3", not bad and elapsed < 30,
           f"{len(bad)} mismatches, {elapsed:.1f}s")


def test_5_tetris_reduction():
    start = time.perf_counter()
    bad = []
    count = 0
    for n, b in ((3, 4), (4, 3)):
        for sizes in [(1,), (2,), (1, 2), (2, 3)]:
            H = make_symmetric(n, sizes)
            fast = tetris_on_box(H, (b,) * n)
            slow = brute_tetris(H)
            for x in itertools.product(range(b + 1), repeat=n):
                count += 1
                if fast[x] != slow(x):
                    bad.append((n, sizes, x))
    elapsed = time.perf_counter() - start
    record("5 slow-move Tetris == brute force", not bad and elapsed < 120,
           f"{count} positions, {len(bad)} mismatches, {elapsed:.1f}s")


def _detail(rep, name):
    return next(d for d in rep.details if d["subject"] == name)


@pytest.mark.parametrize("sizes", [(2,), (1, 2)], ids=str)
def test_6_monotone_contiguous(sizes):
    rep = check_tetris_lemmas(make_symmetric(3, sizes), (4, 4, 4))
    d = _detail(rep, "monotonicity-contiguity")
    record(f"6 monotonicity+contiguity n=3 lambda={sizes} [0,4]^3",
           d["outcome"] == HOLDS, f"{d['checked']} pairs, witness={d['witness']}")


TETRIS_CASES = [(3, (2,), 4), (3, (1, 2), 4), (3, (2, 3), 4), (5, (2, 3), 3)]


@pytest.mark.parametrize("n,sizes,b", TETRIS_CASES, ids=str)
def test_6_exchange(n, sizes, b):
    rep = check_tetris_lemmas(make_symmetric(n, sizes), (b,) * n)
    d = _detail(rep, "exchange")
    record(f"6 exchange n={n} lambda={sizes} [0,{b}]^{n}",
           d["outcome"] == HOLDS, f"{d['checked']} moves, witness={d['witness']}")


@pytest.mark.parametrize("n,sizes,b", TETRIS_CASES, ids=str)
def test_6_slow_move(n, sizes, b):
    rep = check_tetris_lemmas(make_symmetric(n, sizes), (b,) * n)
    d = _detail(rep, "slow-move")
    v = _detail(rep, "slow-move-variant")
    ACCEPTANCE_LINES.append(
        f"info  slow-move with second edge {{1..k-1,n}} n={n} lambda={sizes}: {v['outcome']}")
    record(f"6 slow-move {{1..k}},{{2..k,n}} n={n} lambda={sizes} [0,{b}]^{n}",
           d["outcome"] == HOLDS, f"{d['checked']} moves, witness={d['witness']}")


@pytest.mark.parametrize("n,sizes,b", [(3, (1, 2), 4), (5, (2, 3), 3)], ids=str)
def test_7_sg_conditions(n, sizes, b):
    H = make_symmetric(n, sizes)
    start = time.perf_counter()
    reps = [check_A0(H), check_B1(H, (b,) * n), check_C2(H, (b,) * n), check_C3(H, (b,) * n)]
    elapsed = time.perf_counter() - start
    failed = [(r.subject, r.witness) for r in reps if not r.holds]
    record(f"7 A0,B1,C2,C3 n={n} lambda={sizes} [0,{b}]^{n}",
           not failed and elapsed < 300, f"failed={failed}, {elapsed:.1f}s")


def test_9_determinism_across_worker_counts():
    differing = []
    for n, sizes, b in JM_CASES:
        H = make_symmetric(n, sizes)
        one = sg_on_box(H, (b,) * n, jobs=1).to_csv()
        eight = sg_on_box(H, (b,) * n, jobs=8).to_csv()
        if one.encode() != eight.encode():
            differing.append((n, sizes))
    record("9 CSV identical with 1 and 8 workers", not differing, f"differing={differing}")
