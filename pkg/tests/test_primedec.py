from itertools import combinations

import networkx as nx
import pytest
from conftest import graphs, to_nx
from hypothesis import given
from hypothesis import strategies as st

from binedge.errors import CapExceeded, RangeError
from binedge.figures import diamond, triangle_with_three_c4
from binedge.graph import Graph, closure_at, components, free_vertices, is_connected
from binedge.primedec import (
    enumerate_cutsets,
    is_cutset,
    is_unmixed,
    krull_dim,
    minimal_primes,
    prime_contains,
)


def nx_cutsets(g: Graph) -> list[tuple[int, ...]]:
    """Every subset T of V with each i in T an articulation point of G[(V - T) + i]."""
    h = to_nx(g)
    out = []
    for k in range(g.n + 1):
        for T in combinations(range(1, g.n + 1), k):
            rest = set(h) - set(T)
            c = nx.number_connected_components(h.subgraph(rest)) if rest else 0
            if all(nx.number_connected_components(h.subgraph(rest | {i})) < c for i in T):
                out.append(T)
    return out


def as_tuples(fam):
    return [tuple(sorted(c.T)) for c in fam]


def test_is_cutset_examples():
    c4 = Graph.cycle(4)
    assert is_cutset(c4, {1, 3})
    assert is_cutset(c4, set())
    assert not is_cutset(c4, {1, 2})
    with pytest.raises(RangeError):
        is_cutset(c4, {9})


def test_enumerate_examples():
    assert as_tuples(enumerate_cutsets(Graph.cycle(4))) == [(), (1, 3), (2, 4)]
    assert as_tuples(enumerate_cutsets(Graph.complete(5))) == [()]
    assert as_tuples(enumerate_cutsets(diamond())) == [(), (2, 4)]


def test_cutset_parts():
    fam = enumerate_cutsets(Graph.cycle(4))
    assert fam[1].c == 2 and set(fam[1].parts) == {frozenset({2}), frozenset({4})}
    assert {1, 3} in fam and {1, 2} not in fam


def test_primes_and_heights():
    assert [p.height for p in minimal_primes(Graph.cycle(4))] == [3, 4, 4]
    assert [p.height for p in minimal_primes(Graph.complete(6))] == [5]
    assert [p.height for p in minimal_primes(Graph.path(3))] == [2, 2]
    assert minimal_primes(Graph.cycle(4))[1].describe() == "(x1,y1, x3,y3)"


def test_prime_contains_examples():
    c4 = minimal_primes(Graph.cycle(4))
    assert not prime_contains(Graph.cycle(4), c4[0], c4[1])
    assert prime_contains(Graph.cycle(4), c4[1], c4[1])
    g5 = Graph.cycle(5)
    p = {tuple(sorted(q.cutset.T)): q for q in minimal_primes(g5)}
    assert not prime_contains(g5, p[()], p[(1, 3)])


def test_unmixed_examples():
    ok, w = is_unmixed(Graph.cycle(4))
    assert not ok and w.T == {2, 4} and w.c == 2
    assert is_unmixed(Graph.complete(5)) == (True, None)


def test_unmixed_disconnected_goes_by_component():
    # two disjoint edges: globally c(empty) = 2, but each component is unmixed
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert is_unmixed(g) == (True, None)
    g = Graph.from_edges(6, [(1, 2), (3, 4), (4, 5), (5, 6), (6, 3)])
    ok, w = is_unmixed(g)
    assert not ok and w.T == {4, 6} and w.c == 2


def test_krull_dim_examples():
    assert krull_dim(Graph.complete(4)) == 5
    assert krull_dim(Graph.cycle(4)) == 5


def test_cap():
    g = triangle_with_three_c4()
    with pytest.raises(CapExceeded):
        enumerate_cutsets(g, cap=5)
    assert len(enumerate_cutsets(g, cap=5, max_size=1)) >= 1


def test_max_size_truncates():
    g = triangle_with_three_c4()
    full = enumerate_cutsets(g)
    small = enumerate_cutsets(g, max_size=2)
    assert small.sets() == [T for T in full.sets() if len(T) <= 2]


@given(graphs(max_n=7))
def test_enumeration_matches_networkx_oracle(g):
    expected = nx_cutsets(g)
    assert as_tuples(enumerate_cutsets(g, prune=False)) == expected
    assert as_tuples(enumerate_cutsets(g)) == expected


@given(graphs(max_n=8))
def test_family_invariants(g):
    fam = enumerate_cutsets(g)
    free = free_vertices(g)
    assert fam[0].T == frozenset()
    keys = [c.sort_key() for c in fam]
    assert keys == sorted(keys)
    for c in fam:
        assert not c.T & free
        assert (c.c, list(c.parts)) == components(g, c.T)


@given(graphs(max_n=8))
def test_pruned_equals_unpruned(g):
    assert enumerate_cutsets(g).sets() == enumerate_cutsets(g, prune=False).sets()


@given(graphs(max_n=7))
def test_primes_are_pairwise_incomparable(g):
    primes = minimal_primes(g)
    for a in primes:
        assert prime_contains(g, a, a)
        assert a.height == g.n + len(a.cutset.T) - a.cutset.c
    for a, b in combinations(primes, 2):
        assert not prime_contains(g, a, b)
        assert not prime_contains(g, b, a)


@given(graphs(max_n=8), st.data())
def test_closure_filtration(g, data):
    v = data.draw(st.integers(1, g.n))
    closed = enumerate_cutsets(closure_at(g, v))
    filtered = [c for c in enumerate_cutsets(g) if v not in c.T]
    assert [(c.T, set(c.parts)) for c in closed] == [(c.T, set(c.parts)) for c in filtered]


@given(graphs(max_n=8, connected=True))
def test_unmixed_connected_heights_and_dim(g):
    ok, w = is_unmixed(g)
    fam = enumerate_cutsets(g)
    assert ok == all(c.c == len(c.T) + 1 for c in fam)
    if ok:
        assert {p.height for p in minimal_primes(g)} == {g.n - 1}
        assert krull_dim(g) == g.n + 1
    else:
        assert w in fam.cutsets and w.c != len(w.T) + 1
        smallest = min(len(c.T) for c in fam if c.c != len(c.T) + 1)
        assert len(w.T) == smallest


@given(graphs(max_n=8))
def test_krull_dim_is_max_over_all_subsets(g):
    # non-cutsets never beat the maximum, so scanning every subset gives the same value
    best = 0
    for k in range(g.n + 1):
        for T in combinations(range(1, g.n + 1), k):
            best = max(best, g.n - k + components(g, T)[0])
    assert krull_dim(g) == best


def test_disconnected_unmixed_matches_components():
    g = Graph.from_edges(7, [(1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert not is_connected(g)
    assert is_unmixed(g)[0] is False
    assert is_unmixed(Graph.from_edges(5, [(1, 2), (2, 3), (4, 5)]))[0] is True
