"""Cutsets, minimal primes and Cohen-Macaulay classification of binomial edge ideals."""

from .classify import CmStatus, Status, classify, classify_bicyclic, classify_cactus, classify_path_piece
from .graph import Graph, blocks, closure_at, components, free_vertices, metrics
from .primedec import (
    enumerate_cutsets,
    is_cutset,
    is_unmixed,
    krull_dim,
    minimal_primes,
    prime_contains,
)
from .structure import block_path_pattern, decompose, detect_theta, predicted_path_cutsets

__all__ = [
    "CmStatus",
    "Graph",
    "Status",
    "block_path_pattern",
    "blocks",
    "classify",
    "classify_bicyclic",
    "classify_cactus",
    "classify_path_piece",
    "closure_at",
    "components",
    "decompose",
    "detect_theta",
    "enumerate_cutsets",
    "free_vertices",
    "is_cutset",
    "is_unmixed",
    "krull_dim",
    "metrics",
    "minimal_primes",
    "predicted_path_cutsets",
    "prime_contains",
]
