"""Exact lattice invariants of curve germs on normal surface
singularities, computed from resolution (plumbing) graphs."""

from .graph import CurveConfig, ResolutionGraph, ValidationReport, \
    intersection_matrix, parse_graph, serialize, validate
from .lattice import Cycle, LatticeContext, build_context, chi, class_of, \
    enumerate_classes, pairing
from .laufer import antinef_closure, fundamental_cycle, minimal_class_cycle, \
    oracle_sh
from .invariants import blache_A, delta, hironaka_mult, is_rational, \
    kappa_topological, kulikov_check, mumford_pairing, verify_duality

__all__ = [
    "CurveConfig", "ResolutionGraph", "ValidationReport",
    "intersection_matrix", "parse_graph", "serialize", "validate",
    "Cycle", "LatticeContext", "build_context", "chi", "class_of",
    "enumerate_classes", "pairing",
    "antinef_closure", "fundamental_cycle", "minimal_class_cycle",
    "oracle_sh",
    "blache_A", "delta", "hironaka_mult", "is_rational",
    "kappa_topological", "kulikov_check", "mumford_pairing",
    "verify_duality",
]

__version__ = "0.1.0"
