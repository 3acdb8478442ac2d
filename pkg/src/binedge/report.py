"""Plain-data views of results, with a fixed key order for byte-stable JSON lines."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .classify import (
    CmStatus,
    ComponentCertificate,
    DecompositionCertificate,
    PatternCertificate,
    UnclassifiedFamily,
    Violation,
)
from .graph import Graph, blocks, free_vertices, metrics
from .primedec import Cutset, MinimalPrime
from .structure import Decomposition, PathBlockPattern, ThetaSignature

Relabel = Callable[[int], int]


def _ident(v: int) -> int:
    return v


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _vs(vs, f: Relabel) -> list[int]:
    return sorted(f(v) for v in vs)


def cutset_dict(c: Cutset, f: Relabel = _ident) -> dict:
    parts = sorted((_vs(p, f) for p in c.parts), key=lambda p: p[0])
    return {"T": _vs(c.T, f), "c": c.c, "parts": parts}


def prime_dict(p: MinimalPrime) -> dict:
    d = cutset_dict(p.cutset)
    d["height"] = p.height
    d["generators"] = p.describe()
    return d


def pattern_dict(p: PathBlockPattern, f: Relabel = _ident) -> dict:
    def opt(v):
        return None if v is None else f(v)

    return {
        "kinds": list(p.kinds),
        "blocks": [_vs(b, f) for b in p.blocks],
        "entry": [opt(v) for v in p.entry],
        "exit": [opt(v) for v in p.exit],
        "c4_cutpoints_adjacent": list(p.c4_cutpoints_adjacent),
    }


def theta_dict(t: ThetaSignature, f: Relabel = _ident) -> dict:
    return {
        "a": f(t.a),
        "b": f(t.b),
        "paths": [[f(v) for v in p] for p in t.paths],
        "lengths": list(t.lengths),
        "whiskers": [[f(v), list(s)] for v, s in t.whiskers],
    }


def decomposition_dict(d: Decomposition, f: Relabel = _ident) -> dict:
    return {
        "pieces": [
            {"vertices": _vs(p.labels, f), "edges": sorted(sorted((f(u), f(v))) for u, v in p.edges())}
            for p in d.pieces
        ],
        "glue": [[f(v), i, j] for v, i, j in d.glue_vertices],
    }


def certificate_dict(st: CmStatus, f: Relabel = _ident) -> dict:
    cert = st.certificate
    if isinstance(cert, PatternCertificate):
        return {"type": "pattern", "pattern": pattern_dict(cert.pattern, f)}
    if isinstance(cert, DecompositionCertificate):
        d = {"type": "decomposition"}
        d.update(decomposition_dict(cert.decomposition, f))
        d["patterns"] = [None if p is None else pattern_dict(p, f) for p in cert.patterns]
        d["theta"] = None if cert.theta is None else theta_dict(cert.theta, f)
        d["template"] = cert.template
        return d
    if isinstance(cert, Violation):
        return {
            "type": "violation",
            "condition": cert.condition,
            "detail": cert.detail,
            "cutset": None if cert.cutset is None else cutset_dict(cert.cutset, f),
        }
    if isinstance(cert, UnclassifiedFamily):
        return {
            "type": "unclassified",
            "unmixed": cert.unmixed,
            "witness": None if cert.witness is None else cutset_dict(cert.witness, f),
        }
    if isinstance(cert, ComponentCertificate):
        comps = []
        for labels, sub in cert.components:
            g = _compose(f, labels)
            comps.append(
                {
                    "vertices": _vs(labels, f),
                    "cm_status": sub.value.value,
                    "certificate": certificate_dict(sub, g),
                }
            )
        return {"type": "components", "components": comps}
    raise TypeError(f"unknown certificate {type(cert).__name__}")


def _compose(f: Relabel, labels: Sequence[int]) -> Relabel:
    return lambda v: f(labels[v - 1])


@dataclass(frozen=True)
class Report:
    n: int
    m: int
    component_count: int
    deviation: int
    is_cactus: bool
    is_bicyclic: bool
    block_tree: bool
    free_vertices: tuple[int, ...]
    unmixed: bool | str
    cm_status: str
    certificate: dict
    cutset_count: int | None = None
    dim: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "component_count": self.component_count,
            "deviation": self.deviation,
            "is_cactus": self.is_cactus,
            "is_bicyclic": self.is_bicyclic,
            "block_tree": self.block_tree,
            "free_vertices": list(self.free_vertices),
            "unmixed": self.unmixed,
            "cm_status": self.cm_status,
            "certificate": self.certificate,
            "cutset_count": self.cutset_count,
            "dim": self.dim,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def build_report(
    g: Graph,
    status: CmStatus,
    unmixed: bool | None = None,
    cutset_count: int | None = None,
    dim: int | None = None,
) -> Report:
    """``unmixed=None`` records the oracle as skipped."""
    mt = metrics(g)
    return Report(
        n=g.n,
        m=mt.edge_count,
        component_count=mt.component_count,
        deviation=mt.deviation,
        is_cactus=mt.is_cactus,
        is_bicyclic=mt.is_bicyclic,
        block_tree=blocks(g).is_tree,
        free_vertices=tuple(sorted(free_vertices(g))),
        unmixed="skipped" if unmixed is None else unmixed,
        cm_status=status.value.value,
        certificate=certificate_dict(status),
        cutset_count=cutset_count,
        dim=dim,
    )
