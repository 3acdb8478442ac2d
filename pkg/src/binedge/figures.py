"""Named example graphs with their known classifications.

Vertex numbering is fixed here once; comments name the roles the labels play.
Used by ``binedge selfcheck`` and by the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import classify
from .graph import Graph
from .primedec import enumerate_cutsets, is_cutset, is_unmixed, make_cutset, minimal_primes
from .structure import decompose


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    status: str
    unmixed: bool
    pieces: int | None = None
    notes: dict = field(default_factory=dict)


def c4() -> Graph:
    return Graph.cycle(4)


def diamond() -> Graph:
    # C4 plus the chord {2,4}; 1 and 3 are the free vertices
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)])


def c4_with_adjacent_whiskers() -> Graph:
    # K2 - C4 - K2 with the C4's two cutpoints 1, 2 adjacent
    return Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 6)])


def c4_with_opposite_whiskers() -> Graph:
    return Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (3, 6)])


def k2_c4_c3() -> Graph:
    # pendant 1 at C4 (2,3,4,5); triangle (3,6,7) on the C4 vertex next to 2
    return Graph.from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (3, 6), (6, 7), (7, 3)])


def k2_c4_c4_k2() -> Graph:
    # C4 (2,3,4,5) and C4 (3,6,7,8) share 3; pendants 1 at 2 and 9 at 6
    return Graph.from_edges(
        9,
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (3, 6), (6, 7), (7, 8), (8, 3), (6, 9)],
    )


def theta_122_whisker() -> Graph:
    # a=1, b=2, paths 1-2, 1-3-2, 1-4-2, pendant 5 at a
    return Graph.from_edges(5, [(1, 2), (1, 3), (3, 2), (1, 4), (4, 2), (1, 5)])


def theta_123_whiskers() -> Graph:
    # a=1, b=2, a1=3, b1=4, f1=5, f2=6, f3=7; paths 1-2, 1-5-2, 1-3-4-2
    return Graph.from_edges(
        7, [(1, 2), (2, 5), (5, 1), (2, 4), (4, 3), (3, 1), (1, 6), (3, 7)]
    )


def theta_222_whiskers() -> Graph:
    # branch 1, 2; midpoints 3, 4, 5; pendants 6 at 3 and 7 at 5
    return Graph.from_edges(
        7, [(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2), (3, 6), (5, 7)]
    )


def theta_223_whiskers() -> Graph:
    # branch 1, 2; midpoints 3, 4; long path 1-5-6-2; pendants 7 at 3, 8 at 5, 9 at 6
    return Graph.from_edges(
        9,
        [(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 6), (6, 2), (3, 7), (5, 8), (6, 9)],
    )


def triangle_with_three_c4() -> Graph:
    """A triangle whose three vertices each carry a C4, each C4 with one pendant vertex.

    Triangle 1, 2, 3.  C4s: (4, 1, 5, 6) at 1, (3, 7, 8, 9) at 3, (2, 10, 11, 12)
    at 2.  Pendants 13 at 4, 14 at 7, 15 at 12.  The set {6, 1, 2, 3, 8, 11}
    is a cutset leaving six components.
    """
    return Graph.from_edges(
        15,
        [
            (1, 2), (2, 3), (3, 1),
            (4, 1), (1, 5), (5, 6), (6, 4),
            (3, 7), (7, 8), (8, 9), (9, 3),
            (2, 10), (10, 11), (11, 12), (12, 2),
            (4, 13), (7, 14), (12, 15),
        ],
    )


TRIANGLE_C4_CUTSET = frozenset({6, 1, 2, 3, 8, 11})


def decomposable_cactus() -> Graph:
    """A Cohen-Macaulay cactus made of four indecomposable pieces.

    Pieces: the edge 16-17, the triangle (1, 15, 16), a [C3, C4, K2] chain
    starting at 6, and a [K2, C4, C3, C4, C4, K2] chain on vertices 1..14.
    """
    return Graph.from_edges(
        23,
        [
            # [K2, C4, C3, C4, C4, K2]: pendant 1-2, C4 (2,3,4,5), C3 (3,6,7),
            # C4 (7,8,9,10), C4 (8,11,12,13), pendant 11-14
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 2),
            (3, 6), (6, 7), (7, 3),
            (7, 8), (8, 9), (9, 10), (10, 7),
            (8, 11), (11, 12), (12, 13), (13, 8),
            (11, 14),
            # triangle (1, 15, 16) glued at the free vertex 1
            (1, 15), (15, 16), (16, 1),
            # edge 16-17 glued at the free vertex 16
            (16, 17),
            # [C3, C4, K2]: triangle (6, 18, 19) glued at 6, C4 (19,20,21,22), pendant 20-23
            (6, 18), (18, 19), (19, 6),
            (19, 20), (20, 21), (21, 22), (22, 19),
            (20, 23),
        ],
    )


def all_fixtures() -> list[Fixture]:
    cm, um, nu = "cohen_macaulay", "unmixed_not_cm", "not_unmixed"
    return [
        Fixture("K2", Graph.complete(2), cm, True, 1),
        Fixture("C3", Graph.complete(3), cm, True, 1),
        Fixture("K2-C4-K2", c4_with_adjacent_whiskers(), cm, True, 1),
        Fixture("K2-C4-C3", k2_c4_c3(), cm, True, 1),
        Fixture("K2-C4-C4-K2", k2_c4_c4_k2(), cm, True, 1),
        Fixture("theta122+a", theta_122_whisker(), cm, True, 1),
        Fixture("theta123+a,a1", theta_123_whiskers(), cm, True, 1),
        Fixture("theta222+2mid", theta_222_whiskers(), um, True, 1),
        Fixture("theta223+mid,a1,b1", theta_223_whiskers(), um, True, 1),
        Fixture("C3+3xC4", triangle_with_three_c4(), nu, False, 1),
        Fixture("CM-cactus-4-pieces", decomposable_cactus(), cm, True, 4),
        Fixture("C4", c4(), nu, False, 1),
        Fixture("diamond", diamond(), nu, False, 1),
        Fixture("C4-opposite-whiskers", c4_with_opposite_whiskers(), nu, False, 1),
    ]


THETA_123_CUTSETS = [(), (1,), (3,), (1, 2), (1, 3), (1, 4), (2, 3), (1, 2, 3)]


def selfcheck() -> list[tuple[str, bool, str]]:
    """Run every fixture plus the known cutset values; ``(name, passed, detail)`` per item."""
    def sets(g):
        return [tuple(sorted(T)) for T in enumerate_cutsets(g).sets()]

    out = []
    for fx in all_fixtures():
        st = classify(fx.graph).value.value
        um = is_unmixed(fx.graph)[0]
        pieces = len(decompose(fx.graph))
        ok = st == fx.status and um == fx.unmixed and (fx.pieces is None or pieces == fx.pieces)
        out.append((fx.name, ok, f"status={st} unmixed={um} pieces={pieces}"))
    g = c4()
    out.append(("C4 cutsets", sets(g) == [(), (1, 3), (2, 4)], str(sets(g))))
    heights = sorted(p.height for p in minimal_primes(g))
    out.append(("C4 heights", heights == [3, 4, 4], str(heights)))
    ok, w = is_unmixed(g)
    witness = None if w is None else (tuple(sorted(w.T)), w.c)
    out.append(("C4 witness", not ok and witness == ((2, 4), 2), str(witness)))
    out.append(("diamond cutsets", sets(diamond()) == [(), (2, 4)], str(sets(diamond()))))
    g = triangle_with_three_c4()
    c = make_cutset(g, TRIANGLE_C4_CUTSET).c
    out.append(("C3+3xC4 cutset", is_cutset(g, TRIANGLE_C4_CUTSET) and c == 6, f"c={c}"))
    got = sets(theta_123_whiskers())
    out.append(("theta123 cutsets", got == THETA_123_CUTSETS, str(got)))
    return out
