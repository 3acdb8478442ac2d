"""Simple undirected graphs on vertices ``1..n`` backed by neighbour bitmasks.

Bit ``v`` of a mask stands for vertex ``v``; bit 0 is never set.  The public
functions speak in vertex labels and frozensets, the ``*_masks`` helpers in raw
integers for the hot loops of the cutset scan and the census.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEdge, RangeError, SelfLoop

VertexSet = frozenset  # frozenset[int]; kept as an alias for readability


def bits(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``nbr[v]`` is the neighbour mask of vertex ``v`` (``nbr[0] == 0``).  Build
    instances with :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    nbr: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RangeError(f"vertex count must be positive, got {self.n}")
        if len(self.nbr) != self.n + 1 or self.nbr[0]:
            raise ValueError("neighbour table must have n + 1 entries with nbr[0] == 0")
        full = ((1 << (self.n + 1)) - 1) ^ 1
        for v in range(1, self.n + 1):
            m = self.nbr[v]
            if m & ~full:
                raise RangeError(f"vertex {v} has a neighbour outside 1..{self.n}")
            if m >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in bits(m):
                if not self.nbr[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, nbr: Sequence[int]) -> "Graph":
        # skips validation; only for tables produced inside the package
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "nbr", tuple(nbr))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise RangeError(f"vertex count must be positive, got {n}")
        nbr = [0] * (n + 1)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise RangeError(f"edge {u} {v} outside 1..{n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if nbr[u] >> v & 1:
                raise DuplicateEdge(f"duplicate edge {min(u, v)} {max(u, v)}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return cls._trusted(n, nbr)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = ((1 << (n + 1)) - 1) ^ 1
        return cls._trusted(n, [0] + [full ^ (1 << v) for v in range(1, n + 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @property
    def full_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return sum(popcount(x) for x in self.nbr) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.nbr[v])

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex; index 0 is an empty placeholder."""
        return tuple(to_set(x) for x in self.nbr)

    def degree(self, v: int) -> int:
        return popcount(self.nbr[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in bits(self.nbr[u]) if u < v]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled ``1..k`` in increasing label order.

        Returns the subgraph and ``labels`` with ``labels[i - 1]`` the original
        label of new vertex ``i``.
        """
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels, 1)}
        keep = mask_of(labels)
        nbr = [0] * (len(labels) + 1)
        for v, i in index.items():
            nbr[i] = mask_of(index[u] for u in bits(self.nbr[v] & keep))
        return Graph._trusted(len(labels), nbr), labels

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# --------------------------------------------------------------------------
# connectivity


def component_masks(nbr: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced on ``alive``."""
    parts = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= nbr[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        parts.append(comp)
        alive &= ~comp
    return parts


def count_components(nbr: Sequence[int], alive: int) -> int:
    count = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= nbr[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        count += 1
        alive &= ~comp
    return count


def components(g: Graph, removed: Iterable[int] = ()) -> tuple[int, list[frozenset[int]]]:
    """Components of ``g`` minus ``removed``, ordered by smallest vertex."""
    rm = mask_of(removed)
    if rm & ~g.full_mask:
        raise RangeError("removed vertices must lie in 1..n")
    parts = component_masks(g.nbr, g.full_mask & ~rm)
    return len(parts), [to_set(p) for p in parts]


def is_connected(g: Graph) -> bool:
    return count_components(g.nbr, g.full_mask) == 1


# --------------------------------------------------------------------------
# blocks


def block_masks(g: Graph) -> list[int]:
    """Vertex masks of the blocks of ``g`` (isolated vertices are one-vertex blocks).

    Iterative Tarjan/Hopcroft biconnected-components scan.  Blocks are induced
    subgraphs, so the vertex mask determines the block's edges.
    """
    nbr = g.nbr
    n = g.n
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    clock = 1
    blocks = []
    for root in range(1, n + 1):
        if disc[root]:
            continue
        if not nbr[root]:
            disc[root] = clock
            clock += 1
            blocks.append(1 << root)
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, 0, bits(nbr[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, bits(nbr[w])))
                    break
                if disc[w] < disc[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                    edge_stack.append((v, w))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        mask = 0
                        while True:
                            a, b = edge_stack.pop()
                            mask |= (1 << a) | (1 << b)
                            if a == p and b == v:
                                break
                        blocks.append(mask)
    blocks.sort(key=lambda m: (m & -m, sorted(bits(m))))
    return blocks


def block_edge_count(g: Graph, mask: int) -> int:
    return sum(popcount(g.nbr[v] & mask) for v in bits(mask)) // 2


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cutpoints and the block graph ``B(G)``.

    Two blocks are adjacent in the block graph when they share a cutpoint, so a
    cutpoint lying in three blocks already creates a triangle in ``B(G)``.
    """

    blocks: tuple[frozenset[int], ...]
    block_masks: tuple[int, ...]
    cutpoints: frozenset[int]
    block_adjacency: tuple[frozenset[int], ...]
    is_tree: bool
    is_path: bool

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, m in enumerate(self.block_masks) if m >> v & 1]


def blocks(g: Graph) -> BlockDecomposition:
    masks = block_masks(g)
    count = [0] * (g.n + 1)
    for m in masks:
        for v in bits(m):
            count[v] += 1
    cut = mask_of(v for v in g.vertices if count[v] > 1)
    adjacency = []
    n_edges = 0
    for i, mi in enumerate(masks):
        nb = frozenset(j for j, mj in enumerate(masks) if j != i and mi & mj)
        n_edges += len(nb)
        adjacency.append(nb)
    n_edges //= 2
    n_comp = count_components(g.nbr, g.full_mask)
    is_tree = n_edges == len(masks) - n_comp
    is_path = is_tree and all(len(nb) <= 2 for nb in adjacency)
    return BlockDecomposition(
        blocks=tuple(to_set(m) for m in masks),
        block_masks=tuple(masks),
        cutpoints=to_set(cut),
        block_adjacency=tuple(adjacency),
        is_tree=is_tree,
        is_path=is_path,
    )


def is_cycle_block(g: Graph, mask: int) -> bool:
    k = popcount(mask)
    return k >= 3 and all(popcount(g.nbr[v] & mask) == 2 for v in bits(mask))


# --------------------------------------------------------------------------
# free vertices and closure


def free_mask(g: Graph) -> int:
    nbr = g.nbr
    free = 0
    for v in range(1, g.n + 1):
        nv = nbr[v]
        for u in bits(nv):
            if nv & ~(nbr[u] | (1 << u)):
                break
        else:
            free |= 1 << v
    return free


def free_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighbourhood is a clique, i.e. that lie in one maximal clique."""
    return to_set(free_mask(g))


def closure_at(g: Graph, v: int) -> Graph:
    """Make the neighbourhood of ``v`` a clique."""
    if not 1 <= v <= g.n:
        raise RangeError(f"vertex {v} outside 1..{g.n}")
    nv = g.nbr[v]
    nbr = list(g.nbr)
    for u in bits(nv):
        nbr[u] |= nv & ~(1 << u)
    return Graph._trusted(g.n, nbr)


# --------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class GraphMetrics:
    component_count: int
    edge_count: int
    deviation: int
    is_cactus: bool
    is_bicyclic: bool
    is_forest: bool


def is_cactus_blocks(g: Graph, masks: Iterable[int]) -> bool:
    for m in masks:
        k = popcount(m)
        if k <= 2:
            continue
        if not is_cycle_block(g, m):
            return False
    return True


def metrics(g: Graph) -> GraphMetrics:
    c = count_components(g.nbr, g.full_mask)
    m = g.m
    deviation = m - g.n + c
    return GraphMetrics(
        component_count=c,
        edge_count=m,
        deviation=deviation,
        is_cactus=is_cactus_blocks(g, block_masks(g)),
        is_bicyclic=c == 1 and deviation == 2,
        is_forest=deviation == 0,
    )
