"""Cohen-Macaulay classification of cactus and bicyclic graphs.

Everything here is decided structurally from blocks, the free-vertex
decomposition and the block patterns of the pieces; no cutset scan is needed
except to attach a concrete violating cutset to a negative answer, and for
graphs outside both families (``UNKNOWN_CM``), where only unmixedness can be
reported.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import NotAPath, NotBicyclic, NotC4, NotCactus, StructureError, UnsupportedBlock
from .graph import (
    Graph,
    bits,
    block_masks,
    blocks,
    component_masks,
    count_components,
    free_mask,
    is_cactus_blocks,
    is_cycle_block,
    mask_of,
    popcount,
)
from .primedec import DEFAULT_CAP, Cutset, is_unmixed, make_cutset, smallest_violator
from .structure import (
    Decomposition,
    PathBlockPattern,
    Piece,
    ThetaSignature,
    block_path_pattern,
    detect_theta,
    piece_masks,
)

WITNESS_CAP = 16


class Status(str, Enum):
    COHEN_MACAULAY = "cohen_macaulay"
    UNMIXED_NOT_CM = "unmixed_not_cm"
    NOT_UNMIXED = "not_unmixed"
    UNKNOWN_CM = "unknown_cm"

    @property
    def unmixed(self) -> bool | None:
        if self is Status.UNKNOWN_CM:
            return None
        return self is not Status.NOT_UNMIXED


# meet order: the first status present wins
_MEET = (Status.NOT_UNMIXED, Status.UNKNOWN_CM, Status.UNMIXED_NOT_CM, Status.COHEN_MACAULAY)


@dataclass(frozen=True)
class PatternCertificate:
    pattern: PathBlockPattern


@dataclass(frozen=True)
class DecompositionCertificate:
    """Pieces with their block patterns; a non-cactus piece carries its theta match instead."""

    decomposition: Decomposition
    patterns: tuple[PathBlockPattern | None, ...]
    theta: ThetaSignature | None = None
    template: str | None = None


@dataclass(frozen=True)
class Violation:
    condition: str
    detail: str
    cutset: Cutset | None = None


@dataclass(frozen=True)
class UnclassifiedFamily:
    unmixed: bool
    witness: Cutset | None


@dataclass(frozen=True)
class ComponentCertificate:
    components: tuple[tuple[tuple[int, ...], "CmStatus"], ...]


Certificate = Union[
    PatternCertificate, DecompositionCertificate, Violation, UnclassifiedFamily, ComponentCertificate
]


@dataclass(frozen=True)
class CmStatus:
    value: Status
    certificate: Certificate

    @property
    def is_unmixed(self) -> bool | None:
        return self.value.unmixed


def _not_unmixed(condition: str, detail: str, cutset: Cutset | None = None) -> CmStatus:
    return CmStatus(Status.NOT_UNMIXED, Violation(condition, detail, cutset))


def _local_witness(g: Graph, region: int) -> Cutset | None:
    """A cutset of ``g`` inside ``region`` with ``c(T) != |T| + 1``, if a small scan finds one."""
    cand = region & ~free_mask(g)
    if popcount(cand) > WITNESS_CAP:
        return None
    hit = smallest_violator(g.nbr, g.full_mask, cand)
    return None if hit is None else make_cutset(g, bits(hit[0]))


def _with_witness(status: CmStatus, g: Graph, region: int, enabled: bool) -> CmStatus:
    cert = status.certificate
    if not enabled or not isinstance(cert, Violation) or cert.cutset is not None:
        return status
    witness = _local_witness(g, region)
    if witness is None and region != g.full_mask:
        witness = _local_witness(g, g.full_mask)
    if witness is None:
        return status
    return CmStatus(status.value, Violation(cert.condition, cert.detail, witness))


# --------------------------------------------------------------------------
# single blocks and path pieces


def c4_condition(g: Graph, block) -> bool:
    """Whether a 4-cycle block has exactly two cutpoints of ``g`` and they are adjacent."""
    bm = mask_of(block)
    if popcount(bm) != 4 or not is_cycle_block(g, bm) or bm not in block_masks(g):
        raise NotC4(f"{sorted(block)} is not a 4-cycle block")
    cut = mask_of(blocks(g).cutpoints) & bm
    if popcount(cut) != 2:
        return False
    u, v = bits(cut)
    return g.has_edge(u, v)


def _cycle_length(kind: str) -> int | None:
    if kind.startswith("C") and kind[1:].isdigit():
        return int(kind[1:])
    return None


def classify_path_piece(pattern: PathBlockPattern) -> CmStatus:
    """Classify an indecomposable cactus piece whose block graph is a path.

    Cohen-Macaulay and unmixed coincide here, so the answer is either
    ``COHEN_MACAULAY`` or ``NOT_UNMIXED``.
    """
    kinds = pattern.kinds
    for k in kinds:
        if k in ("K1", "K2") or _cycle_length(k) is not None:
            continue
        raise UnsupportedBlock(f"block kind {k} does not occur in a cactus")
    ok = CmStatus(Status.COHEN_MACAULAY, PatternCertificate(pattern))
    l = len(kinds)
    for i, k in enumerate(kinds):
        length = _cycle_length(k)
        if length is not None and length >= 5:
            return _not_unmixed("cycle_length", f"block {i + 1} is a {k}; only C3 and C4 can occur")
    for i, flag in enumerate(pattern.c4_cutpoints_adjacent):
        if flag is False:
            return _not_unmixed("c4_condition", f"C4 block {i + 1} lacks two adjacent cutpoints")
    if l == 1:
        if kinds[0] in ("K1", "K2", "C3"):
            return ok
        return _not_unmixed("single_block", f"a lone {kinds[0]} is not unmixed")
    if l == 2:
        return _not_unmixed("two_blocks", "an indecomposable path of two blocks is not unmixed")
    if kinds[0] not in ("K2", "C3") or kinds[-1] not in ("K2", "C3"):
        return _not_unmixed("end_block", "end blocks must be K2 or C3")
    if kinds[1] != "C4" or kinds[-2] != "C4":
        return _not_unmixed("second_block", "the blocks next to the ends must be C4")
    for i in range(2, l - 2):
        if kinds[i] not in ("C3", "C4"):
            return _not_unmixed("interior_block", f"interior block {i + 1} is {kinds[i]}")
        if kinds[i] == "C3" and kinds[i + 1] != "C4":
            return _not_unmixed("triangle_successor", f"C3 block {i + 1} is not followed by a C4")
    return ok


# --------------------------------------------------------------------------
# theta templates

# role keys: "a"/"b" for the branch vertices, (path length, distance from a)
# for internal vertices; every listed role carries exactly one pendant vertex
THETA_TEMPLATES: dict[str, tuple[tuple[int, int, int], Counter, Status]] = {
    "CM-A": ((1, 2, 2), Counter({"a": 1}), Status.COHEN_MACAULAY),
    "CM-B": ((1, 2, 3), Counter({"a": 1, (3, 1): 1}), Status.COHEN_MACAULAY),
    "U-A": ((2, 2, 2), Counter({(2, 1): 2}), Status.UNMIXED_NOT_CM),
    "U-B": ((2, 2, 3), Counter({(2, 1): 1, (3, 1): 1, (3, 2): 1}), Status.UNMIXED_NOT_CM),
}


def theta_roles(sig: ThetaSignature, a: int) -> Counter:
    """Multiset of whisker roles with ``a`` taken as the distinguished branch vertex."""
    roles: Counter = Counter()
    for v, sizes in sig.whiskers:
        for _ in sizes:
            if v == a:
                roles["a"] += 1
                continue
            if v in (sig.a, sig.b):
                roles["b"] += 1
                continue
            path = next(p for p in sig.paths if v in p)
            length = len(path) - 1
            d = path.index(v)
            if a != sig.a:
                d = length - d
            roles[(length, d)] += 1
    return roles


def match_theta_template(sig: ThetaSignature) -> str | None:
    if any(sizes != (1,) for _, sizes in sig.whiskers):
        return None
    for name, (lengths, roles, _) in THETA_TEMPLATES.items():
        if sig.lengths != lengths:
            continue
        if theta_roles(sig, sig.a) == roles or theta_roles(sig, sig.b) == roles:
            return name
    return None


# --------------------------------------------------------------------------
# whole graphs


def _require_connected(g: Graph) -> None:
    if count_components(g.nbr, g.full_mask) != 1:
        raise StructureError("expected a connected graph")


def _tree_violation(g: Graph, bmasks: list[int]) -> CmStatus | None:
    count = Counter(v for m in bmasks for v in bits(m))
    bad = sorted(v for v, k in count.items() if k >= 3)
    if not bad:
        return None
    v = bad[0]
    return _not_unmixed(
        "block_graph_not_tree",
        f"cutpoint {v} lies in {count[v]} blocks",
        make_cutset(g, [v]),
    )


def _branching_region(piece: Piece) -> int:
    # a block of degree >= 3 in the piece's block graph together with its neighbours
    bd = blocks(piece.graph)
    i = max(range(len(bd.block_masks)), key=lambda j: len(bd.block_adjacency[j]))
    local = bd.block_masks[i]
    for j in bd.block_adjacency[i]:
        local |= bd.block_masks[j]
    return mask_of(piece.labels[v - 1] for v in bits(local))


def _pieces(g: Graph, bmasks: list[int]) -> Decomposition:
    masks, glue = piece_masks(g, bmasks)
    return Decomposition(tuple(Piece(*g.induced(bits(m))) for m in masks), tuple(glue))


def _classify_cactus_piece(g: Graph, piece: Piece, witness: bool) -> tuple[CmStatus, PathBlockPattern | None]:
    region = mask_of(piece.labels)
    try:
        pattern = block_path_pattern(piece.graph)
    except NotAPath:
        st = _not_unmixed("piece_not_path", f"piece on {list(piece.labels)} has a branching block graph")
        return _with_witness(st, g, _branching_region(piece), witness), None
    pattern = pattern.relabeled(piece.labels)
    st = classify_path_piece(pattern)
    if st.value is Status.NOT_UNMIXED:
        st = _with_witness(st, g, region, witness)
    return st, pattern


def classify_cactus(g: Graph, witness: bool = True) -> CmStatus:
    """Classify a connected cactus.

    Cohen-Macaulay iff the block graph is a tree and every free-vertex piece is
    a path of blocks passing :func:`classify_path_piece`; otherwise not even
    unmixed.
    """
    _require_connected(g)
    bmasks = block_masks(g)
    if not is_cactus_blocks(g, bmasks):
        raise NotCactus("some block is neither an edge nor a cycle")
    bad = _tree_violation(g, bmasks)
    if bad is not None:
        return bad
    dec = _pieces(g, bmasks)
    patterns = []
    for piece in dec.pieces:
        st, pattern = _classify_cactus_piece(g, piece, witness)
        if st.value is not Status.COHEN_MACAULAY:
            return st
        patterns.append(pattern)
    return CmStatus(Status.COHEN_MACAULAY, DecompositionCertificate(dec, tuple(patterns)))


def classify_bicyclic(g: Graph, witness: bool = True) -> CmStatus:
    """Classify a connected graph with two independent cycles.

    Cacti go through :func:`classify_cactus`.  Otherwise the piece holding the
    theta block must match one of :data:`THETA_TEMPLATES` and every other piece
    must be a Cohen-Macaulay path piece.
    """
    if count_components(g.nbr, g.full_mask) != 1 or g.m - g.n + 1 != 2:
        raise NotBicyclic("graph is not connected with deviation 2")
    bmasks = block_masks(g)
    if is_cactus_blocks(g, bmasks):
        return classify_cactus(g, witness)
    bad = _tree_violation(g, bmasks)
    if bad is not None:
        return bad
    dec = _pieces(g, bmasks)
    patterns: list[PathBlockPattern | None] = []
    sig = None
    template = None
    for piece in dec.pieces:
        if is_cactus_blocks(piece.graph, block_masks(piece.graph)):
            st, pattern = _classify_cactus_piece(g, piece, witness)
            if st.value is not Status.COHEN_MACAULAY:
                return st
            patterns.append(pattern)
            continue
        sig = detect_theta(piece.graph).relabeled(piece.labels)
        template = match_theta_template(sig)
        if template is None:
            st = _not_unmixed(
                "theta_template",
                f"theta piece with lengths {sig.lengths} and whiskers {dict(sig.whiskers)} matches no template",
            )
            return _with_witness(st, g, mask_of(piece.labels), witness)
        patterns.append(None)
    assert template is not None and sig is not None
    status = THETA_TEMPLATES[template][2]
    return CmStatus(status, DecompositionCertificate(dec, tuple(patterns), sig, template))


def _classify_connected(g: Graph, cap: int | None, witness: bool) -> CmStatus:
    if g.n == 1:
        return CmStatus(Status.COHEN_MACAULAY, PatternCertificate(block_path_pattern(g)))
    bmasks = block_masks(g)
    if is_cactus_blocks(g, bmasks):
        return classify_cactus(g, witness)
    if g.m - g.n + 1 == 2:
        return classify_bicyclic(g, witness)
    ok, w = is_unmixed(g, cap)
    return CmStatus(Status.UNKNOWN_CM, UnclassifiedFamily(ok, w))


def meet(values) -> Status:
    present = set(values)
    return next(s for s in _MEET if s in present)


def classify(g: Graph, cap: int | None = DEFAULT_CAP, witness: bool = True) -> CmStatus:
    """Classify every connected component and combine the answers.

    Components outside the cactus and bicyclic families get ``UNKNOWN_CM`` with
    the brute-force unmixedness verdict attached (this is the only path that can
    raise :class:`~binedge.errors.CapExceeded`).
    """
    comps = component_masks(g.nbr, g.full_mask)
    if len(comps) == 1:
        return _classify_connected(g, cap, witness)
    parts = []
    for comp in comps:
        sub, labels = g.induced(bits(comp))
        parts.append((labels, _classify_connected(sub, cap, witness)))
    return CmStatus(meet(st.value for _, st in parts), ComponentCertificate(tuple(parts)))
