"""Graph streams for the census: cactus corpora, paths of blocks, and all labelled graphs."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .errors import RangeError, Unsupported
from .graph import Graph, count_components

CACTUS_KINDS = ("K2", "C3", "C4", "C5")
PATH_END_KINDS = ("K2", "K3", "K4", "K5")
# "D" is a diamond entered at a degree-2 vertex, "D'" one entered at a degree-3 vertex
PATH_INTERIOR_KINDS = ("K3", "K4", "K5", "C4", "D", "D'")
MAX_EXHAUSTIVE_N = 7


def _cycle_size(kind: str) -> int:
    if kind == "K2":
        return 2
    if kind.startswith("C") and kind[1:].isdigit() and int(kind[1:]) >= 3:
        return int(kind[1:])
    raise Unsupported(f"cactus corpus blocks are K2 or C<l>, got {kind!r}")


def _attach(edges: list[tuple[int, int]], n: int, u: int, size: int) -> tuple[list[tuple[int, int]], int]:
    ring = [u] + list(range(n + 1, n + size))
    new = list(edges)
    if size == 2:
        new.append((u, n + 1))
    else:
        new.extend((ring[i], ring[(i + 1) % size]) for i in range(size))
    return new, n + size - 1


def generate_cactus_corpus(
    max_blocks: int, kinds: Sequence[str] = CACTUS_KINDS, ordered: bool = True
) -> Iterator[Graph]:
    """Cacti with 1..``max_blocks`` blocks built by gluing one block at a time.

    Each new block shares one vertex with the graph built so far; its other
    vertices are numbered next.  With ``ordered`` the gluing vertex never
    decreases and, at a repeated vertex, the block kind index never decreases.
    Every cactus still appears up to isomorphism (build it breadth-first from
    any root block) while the raw count drops by orders of magnitude.
    Isomorphic duplicates are kept.
    """
    if max_blocks < 1:
        return
    if max_blocks > 6:
        raise RangeError("max_blocks is limited to 6")
    sizes = [_cycle_size(k) for k in kinds]

    def grow(edges, n, blocks_used, last_u, last_k):
        yield Graph.from_edges(n, edges)
        if blocks_used == max_blocks:
            return
        for u in range(last_u if ordered else 1, n + 1):
            for k, size in enumerate(sizes):
                if ordered and u == last_u and k < last_k:
                    continue
                new, m = _attach(edges, n, u, size)
                yield from grow(new, m, blocks_used + 1, u, k)

    for k, size in enumerate(sizes):
        if size == 2:
            start = [(1, 2)]
        else:
            start = [(i, i % size + 1) for i in range(1, size + 1)]
        yield from grow(start, size, 1, 1, k)


def _block_edges(kind: str, entry: int, first_new: int) -> tuple[list[tuple[int, int]], int, int]:
    """Edges of one block glued at ``entry``, its exit vertex and the next free label."""
    if kind.startswith("K") or kind == "C3":
        m = 3 if kind == "C3" else int(kind[1:])
        vs = [entry] + list(range(first_new, first_new + m - 1))
        edges = [(vs[i], vs[j]) for i in range(m) for j in range(i + 1, m)]
        return edges, vs[1], first_new + m - 1
    a, b, c = first_new, first_new + 1, first_new + 2
    if kind == "C4":
        # exit a is adjacent to the entry
        return [(entry, a), (a, b), (b, c), (c, entry)], a, first_new + 3
    if kind == "D":
        # entry degree 2, exit a degree 3, c the other degree-3 vertex, b free
        return [(entry, a), (entry, c), (a, c), (a, b), (b, c)], a, first_new + 3
    if kind == "D'":
        # entry degree 3, exit a degree 2
        return [(entry, a), (entry, b), (entry, c), (a, c), (b, c)], a, first_new + 3
    raise Unsupported(f"unknown block kind {kind!r}")


def path_of_blocks(kinds: Sequence[str]) -> Graph:
    """The graph ``B_1 - B_2 - ... - B_l`` with consecutive blocks sharing one vertex."""
    first = kinds[0]
    if first.startswith("K") or first == "C3":
        m = 3 if first == "C3" else int(first[1:])
        edges = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
        exit_, nxt = 2, m + 1
    else:
        edges, exit_, nxt = _block_edges(first, 1, 2)
    for kind in kinds[1:]:
        more, exit_, nxt = _block_edges(kind, exit_, nxt)
        edges += more
    return Graph.from_edges(nxt - 1, edges)


def path_of_blocks_corpus(
    max_blocks: int,
    ends: Sequence[str] = PATH_END_KINDS,
    interiors: Sequence[str] = PATH_INTERIOR_KINDS,
) -> Iterator[tuple[tuple[str, ...], Graph]]:
    """Every path of at most ``max_blocks`` blocks with complete end blocks.

    Interior C4 blocks are entered and left at adjacent vertices, interior
    diamonds at a degree-2 and a degree-3 vertex (both orientations).
    """
    for l in range(1, max_blocks + 1):
        if l == 1:
            for k in ends:
                yield (k,), path_of_blocks((k,))
            continue
        for first, last in product(ends, repeat=2):
            for mid in product(interiors, repeat=l - 2):
                kinds = (first, *mid, last)
                yield kinds, path_of_blocks(kinds)


def edge_positions(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order: column by column of the upper triangle."""
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def graph_from_code(n: int, code: int, pairs: Sequence[tuple[int, int]] | None = None) -> Graph:
    if pairs is None:
        pairs = edge_positions(n)
    nbr = [0] * (n + 1)
    k = 0
    while code:
        if code & 1:
            i, j = pairs[k]
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        code >>= 1
        k += 1
    return Graph._trusted(n, tuple(nbr))


def connected_codes(n: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Codes in ``[start, stop)`` of connected labelled graphs on ``n`` vertices.

    Bit ``k`` of a code is the ``k``-th pair of :func:`edge_positions`.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise RangeError(f"exhaustive enumeration needs 1 <= n <= {MAX_EXHAUSTIVE_N}")
    pairs = edge_positions(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    full = ((1 << n) - 1) << 1
    for code in range(start, stop):
        g = graph_from_code(n, code, pairs)
        if count_components(g.nbr, full) == 1:
            yield code


def connected_graphs(n: int) -> Iterator[Graph]:
    pairs = edge_positions(n)
    for code in connected_codes(n):
        yield graph_from_code(n, code, pairs)
