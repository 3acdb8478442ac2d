import json

import pytest

from binedge.census import (
    CHECKS,
    CactusCorpus,
    Exhaustive,
    Graph6Lines,
    PathCorpus,
    census_run,
    resolve_checks,
    run_checks,
)
from binedge.errors import RangeError
from binedge.figures import all_fixtures
from binedge.graph import Graph
from binedge.io import to_graph6


def test_exhaustive_n4():
    s = census_run(Exhaustive(4), ["block_tree"])
    assert s.graphs_seen == 38
    assert s.violation_counts["block_tree"] == 0 and s.ok


def test_cactus_corpus_oracle():
    s = census_run(CactusCorpus(3, ("K2", "C3", "C4")), ["oracle_classifier"])
    assert s.graphs_seen > 0 and s.ok


def test_all_checks_on_small_graphs():
    s = census_run(Exhaustive(5), "all")
    assert s.graphs_seen == 728 and s.ok, s.to_json()


def test_paths_census():
    s = census_run(PathCorpus(3), ["path_prediction", "heights"])
    assert s.ok and s.unmixed_count == s.graphs_seen


def test_graph6_source_and_families():
    lines = tuple(to_graph6(f.graph) for f in all_fixtures())
    s = census_run(Graph6Lines(lines + ("",)), "all")
    assert s.graphs_seen == len(lines) and s.ok
    cacti = census_run(Exhaustive(5, "cactus"), ["oracle_classifier"])
    both = census_run(Exhaustive(5, "cactus_or_bicyclic"), ["oracle_classifier"])
    assert 0 < cacti.graphs_seen < both.graphs_seen < 728


def test_violations_are_recorded():
    def always_fails(x):
        return "nope"

    CHECKS["always_fails"] = always_fails
    try:
        s = run_checks([Graph.cycle(4), Graph.complete(2)], ["always_fails"])
    finally:
        del CHECKS["always_fails"]
    assert s.violation_counts["always_fails"] == 2 and not s.ok
    d = s.to_dict()
    assert d["violations"][0]["graph"] == {"n": 2, "edges": [[1, 2]]}


def test_cap_is_recorded_not_fatal():
    s = run_checks([Graph.cycle(6), Graph.complete(3)], ["heights"], cap=3)
    assert s.graphs_seen == 2 and s.cap_exceeded == 1


def test_resolve_checks():
    assert resolve_checks("block_tree,gluing") == ("block_tree", "gluing")
    assert resolve_checks("all") == tuple(CHECKS)
    with pytest.raises(RangeError):
        resolve_checks("bogus")


def test_summary_independent_of_workers():
    a = census_run(Exhaustive(5), None, jobs=1, batch=50).to_json()
    b = census_run(Exhaustive(5), None, jobs=3, batch=50).to_json()
    c = census_run(Exhaustive(5), None, jobs=2, batch=7).to_json()
    assert a == b == c
    assert json.loads(a)["graphs_seen"] == 728
