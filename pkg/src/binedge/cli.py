"""Command-line interface.

Exit codes: 0 success, 1 property violation or verify mismatch, 2 input
error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import census as cen
from .classify import Status, classify
from .errors import BinedgeError, CapExceeded, InputError
from .figures import selfcheck
from .graph import Graph, bits, component_masks
from .io import export_cas_script, parse_edge_list, parse_graph6
from .primedec import DEFAULT_CAP, enumerate_cutsets, is_unmixed, krull_dim, minimal_primes
from .report import build_report, cutset_dict, decomposition_dict, dumps, prime_dict
from .structure import decompose

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read(path)
    if fmt == "auto":
        first = next(
            (s.strip() for s in text.split("\n") if s.strip() and not s.strip().startswith("#")), ""
        )
        fmt = "edges" if first.isdigit() else "graph6"
    if fmt == "edges":
        return parse_edge_list(text)
    lines = [s for s in text.split("\n") if s.strip()]
    if len(lines) != 1:
        raise InputError("a graph6 input file must hold exactly one graph")
    return parse_graph6(lines[0])


def _out(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_info(a, g: Graph) -> int:
    _out(build_report(g, classify(g, a.cap)).to_json())
    return EXIT_OK


def cmd_cutsets(a, g: Graph) -> int:
    for c in enumerate_cutsets(g, a.cap, max_size=a.max_size):
        _out(dumps(cutset_dict(c)))
    return EXIT_OK


def cmd_primes(a, g: Graph) -> int:
    for p in minimal_primes(g, a.cap):
        _out(dumps(prime_dict(p)))
    return EXIT_OK


def cmd_unmixed(a, g: Graph) -> int:
    ok, w = is_unmixed(g, a.cap)
    _out(dumps({"unmixed": ok, "witness": None if w is None else cutset_dict(w)}))
    return EXIT_OK


def cmd_dim(a, g: Graph) -> int:
    _out(dumps({"dim": krull_dim(g, a.cap)}))
    return EXIT_OK


def cmd_decompose(a, g: Graph) -> int:
    for comp in component_masks(g.nbr, g.full_mask):
        sub, labels = g.induced(bits(comp))
        d = decomposition_dict(decompose(sub), lambda v: labels[v - 1])
        _out(dumps({"component": list(labels), **d}))
    return EXIT_OK


def cmd_classify(a, g: Graph) -> int:
    st = classify(g, a.cap)
    if not a.verify:
        _out(build_report(g, st).to_json())
        return EXIT_OK
    ok, _ = is_unmixed(g, a.cap)
    fam = enumerate_cutsets(g, a.cap)
    _out(build_report(g, st, ok, len(fam), krull_dim(g, a.cap)).to_json())
    if st.value is not Status.UNKNOWN_CM and st.value.unmixed != ok:
        sys.stderr.write(f"verify: classifier says {st.value.value} but the oracle says unmixed={ok}\n")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_export(a, g: Graph) -> int:
    sys.stdout.write(export_cas_script(g, a.dialect))
    return EXIT_OK


def cmd_census(a) -> int:
    if a.graph6 is not None:
        source = cen.Graph6Lines(tuple(_read(a.graph6).split("\n")))
    elif a.cactus is not None:
        kinds = tuple(k for k in a.kinds.split(",") if k)
        source = cen.CactusCorpus(a.cactus, kinds, ordered=not a.raw)
    elif a.paths is not None:
        source = cen.PathCorpus(a.paths)
    else:
        if not 1 <= a.exhaustive <= 7:
            raise InputError("--exhaustive needs 1 <= n <= 7")
        source = cen.Exhaustive(a.exhaustive, a.family)
    summary = cen.census_run(source, a.checks, a.jobs, a.cap)
    sys.stdout.write(summary.to_json())
    if summary.violation_counts:
        return EXIT_VIOLATION
    if summary.cap_exceeded:
        return EXIT_CAP
    return EXIT_OK


def cmd_selfcheck(a) -> int:
    failed = 0
    for name, ok, detail in selfcheck():
        failed += not ok
        _out(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="binedge", description="Cutsets, minimal primes and CM classification of binomial edge ideals."
    )
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest candidate set the subset scan accepts")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="edge-list or graph6 file, '-' for stdin")
        sp.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto")
        sp.set_defaults(func=func, needs_graph=True)
        return sp

    graph_cmd("info", cmd_info, "metrics, blocks and classification")
    sp = graph_cmd("cutsets", cmd_cutsets, "list the cutsets, one JSON object per line")
    sp.add_argument("--max-size", type=int, default=None, help="only cutsets with at most K vertices")
    graph_cmd("primes", cmd_primes, "minimal primes with heights")
    graph_cmd("unmixed", cmd_unmixed, "brute-force unmixedness test")
    graph_cmd("dim", cmd_dim, "Krull dimension")
    graph_cmd("decompose", cmd_decompose, "split at free cutpoints")
    sp = graph_cmd("classify", cmd_classify, "Cohen-Macaulay classification")
    sp.add_argument("--verify", action="store_true", help="cross-check against the cutset oracle")
    sp = graph_cmd("export", cmd_export, "Macaulay2 or Singular script")
    sp.add_argument("--dialect", choices=("m2", "singular"), required=True)

    sp = sub.add_parser("census", help="run property checks over many graphs")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="FILE")
    src.add_argument("--cactus", type=int, metavar="MAX_BLOCKS")
    src.add_argument("--exhaustive", type=int, metavar="N")
    src.add_argument("--paths", type=int, metavar="MAX_BLOCKS", help="paths of complete, C4 and diamond blocks")
    sp.add_argument("--kinds", default="K2,C3,C4,C5", help="cactus block kinds")
    sp.add_argument("--raw", action="store_true", help="cactus corpus without the ordering restriction")
    sp.add_argument("--family", choices=("cactus", "cactus_or_bicyclic"), default=None)
    sp.add_argument("--checks", default=None, help=f"comma list from: {', '.join(cen.CHECKS)}; or 'all'")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_census, needs_graph=False)

    sp = sub.add_parser("selfcheck", help="run the built-in example graphs")
    sp.set_defaults(func=cmd_selfcheck, needs_graph=False)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    try:
        if a.needs_graph:
            return a.func(a, load_graph(a.file, a.format))
        return a.func(a)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except BinedgeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
