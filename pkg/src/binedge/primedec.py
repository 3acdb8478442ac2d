"""Cutsets and the minimal primes of a binomial edge ideal.

A vertex set ``T`` is a cutset when every ``i`` in ``T`` is an articulation
vertex of the graph induced on ``(V - T) + {i}``.  The minimal primes of
``J(G)`` are exactly the ``P_T`` with ``T`` a cutset; each is represented here
combinatorially by ``T`` and the vertex partition of ``G - T``, and has height
``n + |T| - c(T)``.

Cutsets are found by brute force over subsets of the non-free vertices, in
increasing size and then lexicographic order.  Free vertices never belong to a
cutset, which is the only pruning applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, RangeError
from .graph import (
    Graph,
    bits,
    component_masks,
    count_components,
    free_mask,
    mask_of,
    popcount,
    to_set,
)

DEFAULT_CAP = 24


@dataclass(frozen=True)
class Cutset:
    T: frozenset[int]
    c: int
    parts: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.T)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.T), tuple(sorted(self.T))


@dataclass(frozen=True)
class MinimalPrime:
    """``P_T``: the variables of ``T`` plus the complete-graph ideals of the parts."""

    cutset: Cutset
    height: int

    def describe(self) -> str:
        gens = [f"x{i},y{i}" for i in sorted(self.cutset.T)]
        gens += ["J(K{" + ",".join(map(str, sorted(p))) + "})" for p in self.cutset.parts if len(p) > 1]
        return "(" + ", ".join(gens) + ")" if gens else "(0)"


@dataclass(frozen=True)
class CutsetFamily:
    cutsets: tuple[Cutset, ...]

    def __iter__(self) -> Iterator[Cutset]:
        return iter(self.cutsets)

    def __len__(self) -> int:
        return len(self.cutsets)

    def __getitem__(self, i: int) -> Cutset:
        return self.cutsets[i]

    def sets(self) -> list[frozenset[int]]:
        return [c.T for c in self.cutsets]

    def __contains__(self, T: object) -> bool:
        return frozenset(T) in {c.T for c in self.cutsets}  # type: ignore[arg-type]


def scan_cutsets(
    nbr: Sequence[int], universe: int, candidates: int, max_size: int | None = None
) -> Iterator[tuple[int, int]]:
    """Yield ``(T, c(T))`` for every cutset ``T`` of the graph induced on ``universe``.

    ``T`` ranges over subsets of ``candidates`` in (size, lex) order, up to
    ``max_size`` elements.  Only the component counts of the previous size
    level are kept in memory.
    """
    cand = [1 << v for v in bits(candidates & universe)]
    prev = {0: count_components(nbr, universe)}
    yield 0, prev[0]
    top = len(cand) if max_size is None else min(max_size, len(cand))
    for k in range(1, top + 1):
        cur = {}
        for combo in combinations(cand, k):
            T = sum(combo)
            c = count_components(nbr, universe & ~T)
            cur[T] = c
            for b in combo:
                # b is a cutpoint of G[(V - T) + b] iff putting it back merges parts
                if prev[T ^ b] >= c:
                    break
            else:
                yield T, c
        prev = cur


def _candidates(g: Graph, prune: bool, cap: int | None) -> int:
    cand = g.full_mask & ~free_mask(g) if prune else g.full_mask
    if cap is not None and popcount(cand) > cap:
        raise CapExceeded(popcount(cand), cap)
    return cand


def _check_subset(g: Graph, T: Iterable[int]) -> int:
    tm = mask_of(T)
    if tm & ~g.full_mask:
        raise RangeError("vertex set must lie in 1..n")
    return tm


def is_cutset(g: Graph, T: Iterable[int]) -> bool:
    tm = _check_subset(g, T)
    alive = g.full_mask & ~tm
    c = count_components(g.nbr, alive)
    return all(count_components(g.nbr, alive | (1 << i)) < c for i in bits(tm))


def make_cutset(g: Graph, T: Iterable[int], universe: int | None = None) -> Cutset:
    tm = _check_subset(g, T)
    if universe is None:
        universe = g.full_mask
    parts = component_masks(g.nbr, universe & ~tm)
    return Cutset(to_set(tm), len(parts), tuple(to_set(p) for p in parts))


def cutset_masks(
    g: Graph, cap: int | None = DEFAULT_CAP, prune: bool = True, max_size: int | None = None
) -> list[tuple[int, int]]:
    """Raw ``(T, c)`` pairs of all cutsets; ``prune=False`` scans every subset of ``V``.

    With ``max_size`` only cutsets of at most that many vertices are listed and
    the cap is not applied, since the scan is then polynomial.
    """
    cand = _candidates(g, prune, cap if max_size is None else None)
    return list(scan_cutsets(g.nbr, g.full_mask, cand, max_size))


def enumerate_cutsets(
    g: Graph, cap: int | None = DEFAULT_CAP, prune: bool = True, max_size: int | None = None
) -> CutsetFamily:
    """All cutsets of ``g`` with their component partitions.

    Raises :class:`CapExceeded` when more than ``cap`` vertices would have to be
    scanned.
    """
    out = []
    for T, _ in cutset_masks(g, cap, prune, max_size):
        out.append(make_cutset(g, bits(T)))
    return CutsetFamily(tuple(out))


def height(g: Graph, cutset: Cutset) -> int:
    return g.n + len(cutset.T) - cutset.c


def minimal_primes(g: Graph, cap: int | None = DEFAULT_CAP) -> list[MinimalPrime]:
    return [MinimalPrime(c, height(g, c)) for c in enumerate_cutsets(g, cap)]


def prime_contains(g: Graph, a: MinimalPrime, b: MinimalPrime) -> bool:
    """Whether ``P_a`` is contained in ``P_b``.

    Holds iff ``a.T`` is inside ``b.T`` and no binomial of a part of ``a``
    escapes ``P_b``: every part of ``a``, minus ``b.T``, sits inside a single
    part of ``b``.
    """
    ta, tb = a.cutset.T, b.cutset.T
    if not ta <= tb:
        return False
    return parts_refine(
        [mask_of(p) for p in a.cutset.parts], [mask_of(p) for p in b.cutset.parts], mask_of(tb)
    )


def parts_refine(parts_a: Iterable[int], parts_b: Sequence[int], tb: int) -> bool:
    for x in parts_a:
        rest = x & ~tb
        if not rest:
            continue
        low = rest & -rest
        home = next(p for p in parts_b if p & low)
        if rest & ~home:
            return False
    return True


def unmixed_witness_mask(
    g: Graph, cap: int | None = DEFAULT_CAP, free: int | None = None
) -> tuple[int, int, int] | None:
    """Violating ``(T, c, component)`` or ``None`` when ``g`` is unmixed.

    Components are scanned in order of their smallest vertex; ``c`` counts
    components inside that component only.  The witness is a smallest
    violating cutset, ties broken towards the lexicographically greatest
    sorted vertex tuple (the violator avoiding the lowest labels).
    """
    if free is None:
        free = free_mask(g)
    for comp in component_masks(g.nbr, g.full_mask):
        cand = comp & ~free
        if cap is not None and popcount(cand) > cap:
            raise CapExceeded(popcount(cand), cap)
        hit = smallest_violator(g.nbr, comp, cand)
        if hit is not None:
            return hit[0], hit[1], comp
    return None


def smallest_violator(nbr: Sequence[int], universe: int, candidates: int) -> tuple[int, int] | None:
    """Smallest cutset with ``c(T) != |T| + 1`` among subsets of ``candidates``.

    Ties go to the lexicographically greatest sorted vertex tuple.
    """
    found: list[tuple[int, int]] = []
    for T, c in scan_cutsets(nbr, universe, candidates):
        k = popcount(T)
        if found and k > popcount(found[0][0]):
            break
        if c != k + 1:
            found.append((T, c))
    if not found:
        return None
    return max(found, key=lambda tc: sorted(bits(tc[0])))


def is_unmixed(g: Graph, cap: int | None = DEFAULT_CAP) -> tuple[bool, Cutset | None]:
    """Unmixedness via ``c(T) == |T| + 1`` on every cutset of every component.

    On failure the witness comes from the first failing component (see
    :func:`unmixed_witness_mask`); its ``c`` and ``parts`` are taken inside
    that component.
    """
    hit = unmixed_witness_mask(g, cap)
    if hit is None:
        return True, None
    T, _, comp = hit
    return False, make_cutset(g, bits(T), universe=comp)


def krull_dim(g: Graph, cap: int | None = DEFAULT_CAP) -> int:
    """``dim S/J(G) = max(n - |T| + c(T))`` over the cutsets of ``g``."""
    return max(g.n - popcount(T) + c for T, c in cutset_masks(g, cap))
