"""Structural pieces used by the classifier.

* :func:`decompose` glues a graph apart at cutpoints that are free on both
  sides, giving indecomposable pieces.
* :func:`block_path_pattern` reads off the ordered block sequence of a piece
  whose block graph is a path.
* :func:`detect_theta` finds the two-cycle block of a non-cactus bicyclic graph
  and the pendant trees hanging from it.
* :func:`predicted_path_cutsets` lists the cutsets of an admissible path of
  blocks directly from the block labelling, without any subset scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .errors import HypothesisViolated, NotAPath, NotTheta, StructureError
from .graph import (
    Graph,
    bits,
    block_edge_count,
    block_masks,
    blocks,
    component_masks,
    count_components,
    is_cactus_blocks,
    is_cycle_block,
    mask_of,
    popcount,
)
from .primedec import Cutset, CutsetFamily, make_cutset


def _relabel_set(s: Iterable[int], labels: Mapping[int, int] | tuple[int, ...]) -> frozenset[int]:
    return frozenset(_map(labels, v) for v in s)


def _map(labels: Mapping[int, int] | tuple[int, ...], v: int) -> int:
    if isinstance(labels, tuple):
        return labels[v - 1]
    return labels[v]


def _is_clique(nbr, mask: int) -> bool:
    for u in bits(mask):
        if mask & ~(nbr[u] | (1 << u)):
            return False
    return True


# --------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True)
class Piece:
    """An indecomposable piece, relabelled ``1..k``; ``labels[i-1]`` is the original of ``i``."""

    graph: Graph
    labels: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(self.labels[u - 1], self.labels[v - 1]) for u, v in self.graph.edges()]


@dataclass(frozen=True)
class Decomposition:
    pieces: tuple[Piece, ...]
    glue_vertices: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.pieces)


def split_vertices(g: Graph, bmasks: list[int] | None = None) -> list[tuple[int, int, int]]:
    """Cutpoints where ``g`` decomposes, as ``(v, block_i, block_j)``.

    ``v`` qualifies when it lies in exactly two blocks and its neighbours inside
    each block form a clique, i.e. ``v`` is free on both sides.
    """
    if bmasks is None:
        bmasks = block_masks(g)
    at: dict[int, list[int]] = {}
    for i, m in enumerate(bmasks):
        for v in bits(m):
            at.setdefault(v, []).append(i)
    out = []
    for v, idx in at.items():
        if len(idx) != 2:
            continue
        if all(_is_clique(g.nbr, g.nbr[v] & bmasks[i]) for i in idx):
            out.append((v, idx[0], idx[1]))
    out.sort()
    return out


def piece_masks(g: Graph, bmasks: list[int] | None = None) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Vertex masks of the decomposition pieces plus ``(v, piece_i, piece_j)`` glue triples."""
    if bmasks is None:
        bmasks = block_masks(g)
    parent = list(range(len(bmasks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    splits = split_vertices(g, bmasks)
    split_at = {v for v, _, _ in splits}
    at: dict[int, list[int]] = {}
    for i, m in enumerate(bmasks):
        for v in bits(m):
            at.setdefault(v, []).append(i)
    for v, idx in at.items():
        if v in split_at:
            continue
        root = find(idx[0])
        for j in idx[1:]:
            parent[find(j)] = root
    groups: dict[int, int] = {}
    for i, m in enumerate(bmasks):
        r = find(i)
        groups[r] = groups.get(r, 0) | m
    order = sorted(groups, key=lambda r: groups[r] & -groups[r])
    index = {r: k for k, r in enumerate(order)}
    glue = []
    for v, i, j in splits:
        a, b = sorted((index[find(i)], index[find(j)]))
        glue.append((v, a, b))
    return [groups[r] for r in order], glue


def decompose(g: Graph) -> Decomposition:
    """Split ``g`` into indecomposable pieces glued at free vertices.

    Pieces are ordered by their smallest original vertex; an indecomposable
    graph comes back as a single piece.
    """
    if count_components(g.nbr, g.full_mask) != 1:
        raise StructureError("decompose expects a connected graph")
    masks, glue = piece_masks(g)
    pieces = tuple(Piece(*g.induced(bits(m))) for m in masks)
    return Decomposition(pieces, tuple(glue))


# --------------------------------------------------------------------------
# path-of-blocks patterns


def block_kind(g: Graph, mask: int) -> str:
    """Name a block: ``K1``, ``K2``, ``C3``, ``C<l>``, ``K<m>``, ``D`` (diamond) or ``other``."""
    k = popcount(mask)
    if k <= 2:
        return f"K{k}"
    e = block_edge_count(g, mask)
    if e == k * (k - 1) // 2:
        return "C3" if k == 3 else f"K{k}"
    if is_cycle_block(g, mask):
        return f"C{k}"
    if k == 4 and e == 5:
        return "D"
    return "other"


def is_complete_kind(kind: str) -> bool:
    return kind == "C3" or (kind.startswith("K") and kind != "K1")


def complete_order(kind: str) -> int:
    return 3 if kind == "C3" else int(kind[1:])


@dataclass(frozen=True)
class PathBlockPattern:
    """Blocks ``B_1..B_l`` along a path block graph.

    ``entry[i]``/``exit[i]`` are the cutpoints shared with the previous/next
    block (``None`` at the ends), so ``exit[i] == entry[i + 1]``.
    ``c4_cutpoints_adjacent[i]`` is only set for C4 blocks.
    """

    kinds: tuple[str, ...]
    blocks: tuple[frozenset[int], ...]
    entry: tuple[int | None, ...]
    exit: tuple[int | None, ...]
    c4_cutpoints_adjacent: tuple[bool | None, ...]

    def __len__(self) -> int:
        return len(self.kinds)

    def relabeled(self, labels: Mapping[int, int] | tuple[int, ...]) -> "PathBlockPattern":
        def m(v: int | None) -> int | None:
            return None if v is None else _map(labels, v)

        return PathBlockPattern(
            kinds=self.kinds,
            blocks=tuple(_relabel_set(b, labels) for b in self.blocks),
            entry=tuple(m(v) for v in self.entry),
            exit=tuple(m(v) for v in self.exit),
            c4_cutpoints_adjacent=self.c4_cutpoints_adjacent,
        )


def block_path_pattern(piece: Graph) -> PathBlockPattern:
    """Block sequence of a connected graph whose block graph is a path.

    The endpoint block with the lexicographically smaller sorted vertex tuple
    becomes ``B_1``.  Raises :class:`NotAPath` otherwise.
    """
    if count_components(piece.nbr, piece.full_mask) != 1:
        raise StructureError("block_path_pattern expects a connected graph")
    bd = blocks(piece)
    if not bd.is_path:
        raise NotAPath("block graph is not a path")
    masks = bd.block_masks
    l = len(masks)
    if l == 1:
        order = [0]
    else:
        ends = [i for i, nb in enumerate(bd.block_adjacency) if len(nb) == 1]
        start = min(ends, key=lambda i: sorted(bits(masks[i])))
        order = [start]
        prev = -1
        while len(order) < l:
            cur = order[-1]
            nxt = next(j for j in bd.block_adjacency[cur] if j != prev)
            prev = cur
            order.append(nxt)
    seq = [masks[i] for i in order]
    entry: list[int | None] = [None] * l
    exit_: list[int | None] = [None] * l
    for i in range(l - 1):
        shared = seq[i] & seq[i + 1]
        v = shared.bit_length() - 1
        exit_[i] = v
        entry[i + 1] = v
    kinds = tuple(block_kind(piece, m) for m in seq)
    flags = []
    for kind, a, b in zip(kinds, entry, exit_):
        if kind != "C4":
            flags.append(None)
        else:
            flags.append(a is not None and b is not None and piece.has_edge(a, b))
    return PathBlockPattern(
        kinds=kinds,
        blocks=tuple(frozenset(bits(m)) for m in seq),
        entry=tuple(entry),
        exit=tuple(exit_),
        c4_cutpoints_adjacent=tuple(flags),
    )


# --------------------------------------------------------------------------
# predicted cutsets of an admissible path of blocks


def _optional_vertices(pattern: PathBlockPattern, g: Graph) -> list[tuple[int, int, int]]:
    """``(x, need, avoid)`` rules: ``x`` may join ``T`` only if ``need`` in ``T`` and ``avoid`` not.

    Validates the block kinds along the way.
    """
    l = len(pattern)
    kinds = pattern.kinds
    if l == 1:
        if not is_complete_kind(kinds[0]):
            raise HypothesisViolated(f"single block must be complete, got {kinds[0]}")
        return []
    for end in (0, l - 1):
        if not is_complete_kind(kinds[end]):
            raise HypothesisViolated(f"end block {end + 1} must be complete, got {kinds[end]}")
    rules = []
    for i in range(1, l - 1):
        kind = kinds[i]
        v, w = pattern.entry[i], pattern.exit[i]
        assert v is not None and w is not None
        block = mask_of(pattern.blocks[i])
        if is_complete_kind(kind) and kind != "K2":
            continue
        if kind == "C4":
            if not g.has_edge(v, w):
                raise HypothesisViolated(f"C4 block {i + 1} has non-adjacent cutpoints")
            v1 = (g.nbr[v] & block & ~(1 << w)).bit_length() - 1
            w1 = (g.nbr[w] & block & ~(1 << v)).bit_length() - 1
            rules.append((v1, w, v))
            rules.append((w1, v, w))
        elif kind == "D":
            dv = popcount(g.nbr[v] & block)
            dw = popcount(g.nbr[w] & block)
            if {dv, dw} != {2, 3}:
                raise HypothesisViolated(f"diamond block {i + 1} is not attached at a degree-2/degree-3 pair")
            p, q = (v, w) if dv == 2 else (w, v)
            # the other degree-3 vertex of the diamond
            r = (block & ~(1 << q) & ~(1 << p) & g.nbr[p]).bit_length() - 1
            rules.append((r, q, p))
        else:
            raise HypothesisViolated(f"interior block {i + 1} of kind {kind} is not admissible")
    return rules


def predicted_path_cutsets(pattern: PathBlockPattern, g: Graph) -> CutsetFamily:
    """Cutsets of an admissible path of blocks, generated from the labelling.

    ``T`` is any set of cutpoints, optionally extended per C4 block by
    ``v'`` (allowed when ``w`` is in ``T`` and ``v`` is not) or ``w'`` (the
    mirror case), and per diamond by its non-cutpoint degree-3 vertex (allowed
    when the degree-3 cutpoint is in ``T`` and the degree-2 one is not).
    """
    rules = _optional_vertices(pattern, g)
    cut = [v for v in pattern.exit if v is not None]
    found: list[Cutset] = []
    for choice in product((0, 1), repeat=len(cut)):
        base = mask_of(v for v, bit in zip(cut, choice) if bit)
        allowed = [x for x, need, avoid in rules if base >> need & 1 and not base >> avoid & 1]
        for extra in product((0, 1), repeat=len(allowed)):
            T = base | mask_of(x for x, bit in zip(allowed, extra) if bit)
            found.append(make_cutset(g, bits(T)))
    found.sort(key=Cutset.sort_key)
    return CutsetFamily(tuple(found))


# --------------------------------------------------------------------------
# theta blocks


@dataclass(frozen=True)
class ThetaSignature:
    """Three internally disjoint ``a``-``b`` paths forming the only non-edge block.

    ``paths`` run from ``a`` to ``b`` sorted by length; ``whiskers`` maps each
    theta vertex carrying pendant trees to the sorted sizes (in vertices) of
    those trees.  ``a`` is the branch vertex with more pendant vertices, ties
    going to the smaller label.
    """

    a: int
    b: int
    paths: tuple[tuple[int, ...], ...]
    lengths: tuple[int, int, int]
    whiskers: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def whisker_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.whiskers)

    def relabeled(self, labels: Mapping[int, int] | tuple[int, ...]) -> "ThetaSignature":
        return ThetaSignature(
            a=_map(labels, self.a),
            b=_map(labels, self.b),
            paths=tuple(tuple(_map(labels, v) for v in p) for p in self.paths),
            lengths=self.lengths,
            whiskers=tuple(sorted((_map(labels, v), s) for v, s in self.whiskers)),
        )


def detect_theta(g: Graph) -> ThetaSignature:
    """Locate the theta block of a connected, bicyclic, non-cactus graph.

    Raises :class:`NotTheta` for any other input.
    """
    c = count_components(g.nbr, g.full_mask)
    if c != 1 or g.m - g.n + 1 != 2:
        raise NotTheta("graph is not connected with two independent cycles")
    bm = block_masks(g)
    if is_cactus_blocks(g, bm):
        raise NotTheta("graph is a cactus: its cycles are separate blocks")
    block = next(m for m in bm if block_edge_count(g, m) == popcount(m) + 1)
    branch = [v for v in bits(block) if popcount(g.nbr[v] & block) == 3]
    if len(branch) != 2:
        raise NotTheta("two-cycle block has no pair of branch vertices")
    outside = component_masks(g.nbr, g.full_mask & ~block)
    whisk: dict[int, list[int]] = {}
    for comp in outside:
        anchor = next(v for v in bits(block) if g.nbr[v] & comp)
        whisk.setdefault(anchor, []).append(popcount(comp))
    weight = {v: sum(whisk.get(v, ())) for v in branch}
    a, b = sorted(branch, key=lambda v: (-weight[v], v))
    paths = []
    for start in bits(g.nbr[a] & block):
        path = [a, start]
        prev, cur = a, start
        while cur != b:
            nxt = (g.nbr[cur] & block & ~(1 << prev)).bit_length() - 1
            prev, cur = cur, nxt
            path.append(cur)
        paths.append(tuple(path))
    paths.sort(key=lambda p: (len(p), p))
    lengths = tuple(len(p) - 1 for p in paths)
    return ThetaSignature(
        a=a,
        b=b,
        paths=tuple(paths),
        lengths=lengths,  # type: ignore[arg-type]
        whiskers=tuple(sorted((v, tuple(sorted(s))) for v, s in whisk.items())),
    )
