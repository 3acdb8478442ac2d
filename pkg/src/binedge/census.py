"""Run property checks over streams of graphs and summarise the outcome.

A census pulls graphs from a source (all connected labelled graphs on ``n``
vertices, a cactus corpus, paths of blocks, or graph6 lines), runs the
selected checks on each graph and merges per-batch summaries.  Merging is
commutative, so the final summary does not depend on the number of workers.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, islice
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator, Sequence

from .classify import Status, c4_condition, classify
from .corpus import connected_codes, edge_positions, generate_cactus_corpus, graph_from_code, path_of_blocks_corpus
from .errors import BinedgeError, CapExceeded, HypothesisViolated, NotAPath, RangeError
from .graph import (
    Graph,
    bits,
    block_masks,
    blocks,
    closure_at,
    component_masks,
    count_components,
    free_mask,
    is_cactus_blocks,
    is_cycle_block,
    popcount,
)
from .io import parse_graph6
from .primedec import DEFAULT_CAP, cutset_masks, is_unmixed, parts_refine
from .structure import block_path_pattern, decompose, detect_theta, predicted_path_cutsets

THETA_LENGTHS = {(1, 2, 2), (1, 2, 3), (2, 2, 2), (2, 2, 3)}
MAX_EXAMPLES = 20
BATCH = 2000


class _Ctx:
    """Per-graph quantities shared between checks, computed on first use."""

    def __init__(self, g: Graph, cap: int | None):
        self.g = g
        self.cap = cap

    @cached_property
    def connected(self) -> bool:
        return count_components(self.g.nbr, self.g.full_mask) == 1

    @cached_property
    def bmasks(self) -> list[int]:
        return block_masks(self.g)

    @cached_property
    def free(self) -> int:
        return free_mask(self.g)

    @cached_property
    def cactus(self) -> bool:
        return self.connected and is_cactus_blocks(self.g, self.bmasks)

    @cached_property
    def bicyclic(self) -> bool:
        return self.connected and self.g.m - self.g.n + 1 == 2

    @cached_property
    def family(self) -> list[tuple[int, int]]:
        return cutset_masks(self.g, self.cap)

    @cached_property
    def unpruned(self) -> list[tuple[int, int]]:
        return cutset_masks(self.g, None, prune=False)

    @cached_property
    def unmixed(self) -> bool:
        if self.connected and "family" in self.__dict__:
            return all(c == popcount(T) + 1 for T, c in self.family)
        return is_unmixed(self.g, self.cap)[0]

    @cached_property
    def status(self) -> Status:
        return classify(self.g, self.cap, witness=False).value


def _parts(g: Graph, T: int) -> list[int]:
    return component_masks(g.nbr, g.full_mask & ~T)


# each check returns a short failure reason, or None when the property holds


def check_oracle_classifier(x: _Ctx) -> str | None:
    st = x.status
    if st is Status.UNKNOWN_CM:
        return None
    if st.unmixed != x.unmixed:
        return f"classifier says {st.value}, oracle says unmixed={x.unmixed}"
    return None


def check_block_tree(x: _Ctx) -> str | None:
    if x.unmixed and not blocks(x.g).is_tree:
        return "unmixed but the block graph is not a forest"
    return None


def check_cycle_lengths(x: _Ctx) -> str | None:
    if not (x.cactus and x.unmixed):
        return None
    for m in x.bmasks:
        k = popcount(m)
        if k >= 3 and is_cycle_block(x.g, m):
            if k > 4:
                return f"unmixed cactus with a C{k} block"
            if k == 4 and not c4_condition(x.g, bits(m)):
                return "unmixed cactus with a C4 block failing the C4 condition"
    return None


def _theta_case(x: _Ctx) -> bool:
    return x.bicyclic and not x.cactus and x.unmixed


def check_theta_lengths(x: _Ctx) -> str | None:
    if not _theta_case(x):
        return None
    lengths = detect_theta(x.g).lengths
    if lengths not in THETA_LENGTHS:
        return f"unmixed theta with lengths {lengths}"
    return None


def check_remark(x: _Ctx) -> str | None:
    if not _theta_case(x):
        return None
    sig = detect_theta(x.g)
    if sig.lengths[0] != 1:
        return None
    block = 0
    for p in sig.paths:
        for v in p:
            block |= 1 << v
    attached = [v for v in (sig.a, sig.b) if x.g.nbr[v] & ~block]
    if len(attached) != 1:
        return f"l1 = 1 but {len(attached)} branch vertices carry outside attachments"
    return None


def check_gluing(x: _Ctx) -> str | None:
    if not x.connected:
        return None
    pieces = decompose(x.g).pieces
    if len(pieces) == 1:
        return None
    glued = all(is_unmixed(p.graph, x.cap)[0] for p in pieces)
    if glued != x.unmixed:
        return f"graph unmixed={x.unmixed} but pieces unmixed={glued}"
    return None


def check_free_vertex(x: _Ctx) -> str | None:
    for T, _ in x.unpruned:
        if T & x.free:
            return f"cutset {sorted(bits(T))} contains a free vertex"
    return None


def check_pruned_equals_unpruned(x: _Ctx) -> str | None:
    if sorted(x.unpruned) != sorted(x.family):
        return "pruned and unpruned scans disagree"
    return None


def check_incomparable(x: _Ctx) -> str | None:
    fam = [(T, _parts(x.g, T)) for T, _ in x.family]
    for (ta, pa), (tb, pb) in combinations(fam, 2):
        if ta & ~tb == 0 and parts_refine(pa, pb, tb):
            return f"P_{sorted(bits(ta))} lies in P_{sorted(bits(tb))}"
        if tb & ~ta == 0 and parts_refine(pb, pa, ta):
            return f"P_{sorted(bits(tb))} lies in P_{sorted(bits(ta))}"
    return None


def check_closure(x: _Ctx) -> str | None:
    g = x.g
    for v in g.vertices:
        h = closure_at(g, v)
        expect = [(T, c) for T, c in x.family if not T >> v & 1]
        got = cutset_masks(h, x.cap)
        if sorted(got) != sorted(expect):
            return f"cutsets of the closure at {v} differ"
        for T, _ in got:
            if sorted(_parts(g, T)) != sorted(_parts(h, T)):
                return f"closure at {v} changes the parts of {sorted(bits(T))}"
    return None


def check_heights(x: _Ctx) -> str | None:
    if not (x.connected and x.unmixed):
        return None
    n = x.g.n
    if any(n + popcount(T) - c != n - 1 for T, c in x.family):
        return "unmixed graph with a prime of height other than n - 1"
    if max(n - popcount(T) + c for T, c in x.family) != n + 1:
        return "unmixed graph with dimension other than n + 1"
    return None


def check_path_prediction(x: _Ctx) -> str | None:
    """Cutsets predicted from a path-of-blocks labelling equal the scanned ones.

    Only graphs that are admissible paths of blocks are checked.
    """
    if not x.connected:
        return None
    try:
        pattern = block_path_pattern(x.g)
        fam = predicted_path_cutsets(pattern, x.g)
    except (NotAPath, HypothesisViolated):
        return None
    predicted = [(T.T, frozenset(T.parts)) for T in fam]
    scanned = [(frozenset(bits(T)), frozenset(map(frozenset, map(bits, _parts(x.g, T))))) for T, _ in x.family]
    if predicted != scanned:
        return "predicted and scanned cutsets differ"
    return None


CHECKS: dict[str, Callable[[_Ctx], str | None]] = {
    "oracle_classifier": check_oracle_classifier,
    "block_tree": check_block_tree,
    "cycle_lengths": check_cycle_lengths,
    "theta_lengths": check_theta_lengths,
    "remark": check_remark,
    "gluing": check_gluing,
    "free_vertex": check_free_vertex,
    "pruned_equals_unpruned": check_pruned_equals_unpruned,
    "incomparable": check_incomparable,
    "closure": check_closure,
    "heights": check_heights,
    "path_prediction": check_path_prediction,
}
DEFAULT_CHECKS = (
    "oracle_classifier",
    "block_tree",
    "cycle_lengths",
    "theta_lengths",
    "remark",
    "gluing",
    "free_vertex",
    "pruned_equals_unpruned",
    "incomparable",
    "heights",
)


def resolve_checks(names: Iterable[str] | str | None) -> tuple[str, ...]:
    if names is None:
        return DEFAULT_CHECKS
    if isinstance(names, str):
        names = [s for s in names.split(",") if s]
    names = list(names)
    if names == ["all"]:
        return tuple(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise RangeError(f"unknown check(s): {', '.join(unknown)}")
    return tuple(sorted(set(names), key=list(CHECKS).index))


# --------------------------------------------------------------------------
# summaries


def _graph_key(g: Graph) -> tuple:
    return (g.n, tuple(g.edges()))


@dataclass
class CensusSummary:
    """Counts and violations; ``violations`` keeps the ``MAX_EXAMPLES`` smallest per check."""

    checks: tuple[str, ...] = ()
    graphs_seen: int = 0
    status_counts: Counter = field(default_factory=Counter)
    unmixed_count: int = 0
    violation_counts: Counter = field(default_factory=Counter)
    violations: dict[str, list] = field(default_factory=dict)
    cap_exceeded: int = 0
    cap_examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violation_counts and not self.cap_exceeded

    def add_violation(self, check: str, key: tuple, reason: str) -> None:
        self.violation_counts[check] += 1
        self._keep(self.violations.setdefault(check, []), [key, reason])

    @staticmethod
    def _keep(lst: list, item) -> None:
        lst.append(item)
        lst.sort()
        del lst[MAX_EXAMPLES:]

    def merge(self, other: "CensusSummary") -> "CensusSummary":
        self.graphs_seen += other.graphs_seen
        self.status_counts.update(other.status_counts)
        self.unmixed_count += other.unmixed_count
        self.violation_counts.update(other.violation_counts)
        for check, items in other.violations.items():
            mine = self.violations.setdefault(check, [])
            for item in items:
                self._keep(mine, item)
        self.cap_exceeded += other.cap_exceeded
        for item in other.cap_examples:
            self._keep(self.cap_examples, item)
        return self

    def to_dict(self) -> dict:
        def graph(key):
            n, edges = key
            return {"n": n, "edges": [list(e) for e in edges]}

        return {
            "checks": list(self.checks),
            "graphs_seen": self.graphs_seen,
            "status_counts": {s.value: self.status_counts.get(s.value, 0) for s in Status},
            "unmixed": self.unmixed_count,
            "violation_counts": {
                c: self.violation_counts.get(c, 0)
                for c in (*self.checks, "error")
                if c != "error" or c in self.violation_counts
            },
            "violations": [
                {"check": c, "graph": graph(key), "reason": reason}
                for c in (*self.checks, "error")
                for key, reason in self.violations.get(c, [])
            ],
            "cap_exceeded": self.cap_exceeded,
            "cap_examples": [graph(key) for key in self.cap_examples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def run_checks(graphs: Iterable[Graph], checks: Sequence[str], cap: int | None = DEFAULT_CAP) -> CensusSummary:
    out = CensusSummary(tuple(checks))
    for g in graphs:
        out.graphs_seen += 1
        x = _Ctx(g, cap)
        try:
            out.status_counts[x.status.value] += 1
            for name in checks:
                reason = CHECKS[name](x)
                if reason is not None:
                    out.add_violation(name, _graph_key(g), reason)
            out.unmixed_count += bool(x.unmixed)
        except CapExceeded:
            out.cap_exceeded += 1
            out._keep(out.cap_examples, _graph_key(g))
        except BinedgeError as exc:
            out.add_violation("error", _graph_key(g), f"{type(exc).__name__}: {exc}")
    return out


# --------------------------------------------------------------------------
# sources: each is split into picklable work units


@dataclass(frozen=True)
class Exhaustive:
    """All connected labelled graphs on exactly ``n`` vertices (``n <= 7``)."""

    n: int
    family: str | None = None  # None, "cactus" or "cactus_or_bicyclic"

    def units(self, size: int) -> Iterator[tuple]:
        total = 1 << (self.n * (self.n - 1) // 2)
        step = max(size * 4, 1)
        for start in range(0, total, step):
            yield ("exhaustive", self.n, self.family, start, start + step)


@dataclass(frozen=True)
class CactusCorpus:
    max_blocks: int
    kinds: tuple[str, ...] = ("K2", "C3", "C4", "C5")
    ordered: bool = True

    def units(self, size: int) -> Iterator[tuple]:
        it = generate_cactus_corpus(self.max_blocks, self.kinds, self.ordered)
        while True:
            batch = list(islice(it, size))
            if not batch:
                return
            yield ("graphs", batch)


@dataclass(frozen=True)
class PathCorpus:
    max_blocks: int

    def units(self, size: int) -> Iterator[tuple]:
        it = (g for _, g in path_of_blocks_corpus(self.max_blocks))
        while True:
            batch = list(islice(it, size))
            if not batch:
                return
            yield ("graphs", batch)


@dataclass(frozen=True)
class Graph6Lines:
    lines: tuple[str, ...]

    def units(self, size: int) -> Iterator[tuple]:
        lines = [s for s in self.lines if s.strip()]
        for i in range(0, len(lines), size):
            yield ("graph6", tuple(lines[i:i + size]))


def _in_family(g: Graph, family: str | None) -> bool:
    if family is None:
        return True
    bm = block_masks(g)
    cactus = is_cactus_blocks(g, bm)
    if family == "cactus":
        return cactus
    if family == "cactus_or_bicyclic":
        return cactus or g.m - g.n + 1 == 2
    raise RangeError(f"unknown family {family!r}")


def _unit_graphs(unit: tuple) -> Iterator[Graph]:
    kind = unit[0]
    if kind == "exhaustive":
        _, n, family, start, stop = unit
        pairs = edge_positions(n)
        for code in connected_codes(n, start, stop):
            g = graph_from_code(n, code, pairs)
            if _in_family(g, family):
                yield g
    elif kind == "graphs":
        yield from unit[1]
    elif kind == "graph6":
        for line in unit[1]:
            yield parse_graph6(line)
    else:
        raise ValueError(kind)


def _work(args: tuple) -> CensusSummary:
    unit, checks, cap = args
    return run_checks(_unit_graphs(unit), checks, cap)


def census_run(
    source,
    checks: Iterable[str] | str | None = None,
    jobs: int = 1,
    cap: int | None = DEFAULT_CAP,
    batch: int = BATCH,
) -> CensusSummary:
    """Run ``checks`` on every graph of ``source`` using ``jobs`` worker processes.

    The summary is identical for every ``jobs``: batches are merged with
    commutative operations and kept examples are the smallest in a fixed order.
    """
    names = resolve_checks(checks)
    total = CensusSummary(names)
    work = ((unit, names, cap) for unit in source.units(batch))
    if jobs <= 1:
        for args in work:
            total.merge(_work(args))
        return total
    with get_context("fork").Pool(jobs) as pool:
        for part in pool.imap_unordered(_work, work):
            total.merge(part)
    return total
