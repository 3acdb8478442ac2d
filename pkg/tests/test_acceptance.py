"""End-to-end acceptance checks.

Each test appends one ``criterion N: PASS|FAIL`` line to the acceptance
section printed at the end of the pytest run.
Run on their own with ``pytest tests/test_acceptance.py -v``.
"""

import os
import time

import pytest

from binedge.census import CactusCorpus, Exhaustive, census_run
from binedge.classify import Status, classify
from binedge.corpus import path_of_blocks, path_of_blocks_corpus
from binedge.figures import (
    TRIANGLE_C4_CUTSET,
    c4,
    c4_with_adjacent_whiskers,
    decomposable_cactus,
    diamond,
    k2_c4_c3,
    k2_c4_c4_k2,
    theta_122_whisker,
    theta_123_whiskers,
    theta_222_whiskers,
    theta_223_whiskers,
    triangle_with_three_c4,
)
from binedge.graph import Graph
from binedge.primedec import enumerate_cutsets, is_unmixed, krull_dim, minimal_primes
from binedge.structure import block_path_pattern, decompose, predicted_path_cutsets

JOBS = os.cpu_count() or 1


@pytest.fixture
def record(acceptance_log):
    def _record(n, ok, detail, seconds):
        acceptance_log.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail}; {seconds:.1f}s)")
        return ok

    return _record


def _sets(g):
    return sorted(tuple(sorted(T)) for T in enumerate_cutsets(g).sets())


def test_criterion_1_small_exact_values(record):
    t0 = time.perf_counter()
    got = {
        "C4 cutsets": _sets(c4()),
        "diamond cutsets": _sets(diamond()),
        "C4 heights": sorted(p.height for p in minimal_primes(c4())),
    }
    ok_c4, w = is_unmixed(c4())
    got["C4 witness"] = None if w is None else sorted(w.T)
    dt = time.perf_counter() - t0
    expected = {
        "C4 cutsets": [(), (1, 3), (2, 4)],
        "diamond cutsets": [(), (2, 4)],
        "C4 heights": [3, 4, 4],
        "C4 witness": [2, 4],
    }
    ok = got == expected and not ok_c4 and dt < 1.0
    assert record(1, ok, f"values={got}", dt), got


def test_criterion_2_figure_graphs(record):
    t0 = time.perf_counter()
    cm = Status.COHEN_MACAULAY
    c3_c4_c4_k2 = path_of_blocks(("C3", "C4", "C4", "K2"))
    expect = [
        ("K2", Graph.complete(2), cm),
        ("C3", Graph.complete(3), cm),
        ("K2-C4-K2", c4_with_adjacent_whiskers(), cm),
        ("K2-C4-C3", k2_c4_c3(), cm),
        ("K2-C4-C4-K2", k2_c4_c4_k2(), cm),
        ("C3-C4-C4-K2", c3_c4_c4_k2, cm),
        ("theta122", theta_122_whisker(), cm),
        ("theta123", theta_123_whiskers(), cm),
        ("theta222", theta_222_whiskers(), Status.UNMIXED_NOT_CM),
        ("theta223", theta_223_whiskers(), Status.UNMIXED_NOT_CM),
        ("C3+3xC4", triangle_with_three_c4(), Status.NOT_UNMIXED),
        ("four-piece cactus", decomposable_cactus(), cm),
    ]
    bad = [name for name, g, s in expect if classify(g).value is not s]
    for name in ("theta222", "theta223"):
        g = next(g for n, g, _ in expect if n == name)
        if not is_unmixed(g)[0]:
            bad.append(f"{name} oracle")
    g = triangle_with_three_c4()
    fam = enumerate_cutsets(g)
    big = [T for T in fam if len(T.T) == 6 and T.c == 6]
    if frozenset(TRIANGLE_C4_CUTSET) not in {T.T for T in big}:
        bad.append("six-vertex cutset with six components")
    pieces = len(decompose(decomposable_cactus()))
    if pieces != 4:
        bad.append(f"{pieces} pieces")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5.0
    assert record(2, ok, f"{len(expect)} graphs, problems={bad}", dt), bad


def test_criterion_3_oracle_matches_classifier(record):
    t0 = time.perf_counter()
    s = census_run(CactusCorpus(5), ["oracle_classifier"])
    for n in range(1, 7):
        s.merge(census_run(Exhaustive(n, "cactus_or_bicyclic"), ["oracle_classifier"]))
    dt = time.perf_counter() - t0
    bad = s.violation_counts.get("oracle_classifier", 0)
    ok = s.ok and dt < 600
    assert record(3, ok, f"{s.graphs_seen} graphs, {bad} mismatches, cap hits {s.cap_exceeded}", dt), s.to_json()


def test_criterion_4_closure_filtration(record):
    t0 = time.perf_counter()
    s = census_run(Exhaustive(1), ["closure"])
    for n in range(2, 7):
        s.merge(census_run(Exhaustive(n), ["closure"], jobs=JOBS))
    dt = time.perf_counter() - t0
    ok = s.ok
    assert record(4, ok, f"{s.graphs_seen} graphs, {s.violation_counts.get('closure', 0)} violations", dt), s.to_json()


def test_criterion_5_paths_of_blocks(record):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for kinds, g in path_of_blocks_corpus(5):
        count += 1
        predicted = predicted_path_cutsets(block_path_pattern(g), g)
        scanned = enumerate_cutsets(g)
        if [(T.T, T.c, frozenset(T.parts)) for T in predicted] != [(T.T, T.c, frozenset(T.parts)) for T in scanned]:
            bad.append((kinds, "cutsets"))
        if not is_unmixed(g)[0]:
            bad.append((kinds, "unmixed"))
        if {p.height for p in minimal_primes(g)} != {g.n - 1}:
            bad.append((kinds, "heights"))
        if krull_dim(g) != g.n + 1:
            bad.append((kinds, "dim"))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    assert record(5, ok, f"{count} graphs, {len(bad)} violations", dt), bad[:10]


STRUCTURAL = ["block_tree", "cycle_lengths", "theta_lengths", "gluing", "free_vertex", "incomparable"]


def test_criterion_6_structural_census(record):
    t0 = time.perf_counter()
    s = census_run(Exhaustive(1), STRUCTURAL)
    for n in range(2, 8):
        s.merge(census_run(Exhaustive(n), STRUCTURAL, jobs=JOBS))
    dt = time.perf_counter() - t0
    ok = s.ok and dt < 3600
    detail = f"{s.graphs_seen} graphs, violations={dict(s.violation_counts)}, cap hits {s.cap_exceeded}"
    assert record(6, ok, detail, dt), s.to_json()


def test_criterion_7_determinism(record):
    t0 = time.perf_counter()
    runs = [
        census_run(Exhaustive(5), "all", jobs=j, batch=b).to_json()
        for j, b in ((1, 2000), (2, 50), (3, 7))
    ]
    runs += [census_run(CactusCorpus(3), None, jobs=j, batch=b).to_json() for j, b in ((1, 2000), (2, 11))]
    dt = time.perf_counter() - t0
    ok = runs[0] == runs[1] == runs[2] and runs[3] == runs[4]
    assert record(7, ok, "summaries byte-identical across worker counts and batch sizes" if ok else "summaries differ", dt)
