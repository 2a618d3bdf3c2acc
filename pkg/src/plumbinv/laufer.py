"""Computation sequences in the Lipman cone.

The generalized Laufer algorithm: starting from a dual-lattice cycle x,
repeatedly pick a vertex u with (x, E_u) > 0 and replace x by x + E_u.
The process terminates at the unique minimal antinef cycle above x, no
matter which admissible vertex is chosen at each step.  We pick the
lowest-index one so traces are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import CapExceededError, InputError, InternalCheckError
from .lattice import ClassRep, Cycle, LatticeContext, class_of, frac_part, \
    pairing_vector

DEFAULT_STEP_CAP = 10**6


@dataclass(frozen=True)
class ComputationTrace:
    """One entry per step: the cycle before the step and the vertex whose
    base cycle was added, with the positive pairing that triggered it."""

    steps: tuple[tuple[Cycle, int, Fraction], ...]
    final: Cycle


def antinef_closure(ctx: LatticeContext, x: Cycle,
                    step_cap: int = DEFAULT_STEP_CAP,
                    choose=None,
                    want_trace: bool = True) -> tuple[Cycle, ComputationTrace]:
    """Minimal antinef cycle s with s - x integral and >= 0.

    `choose` maps the list of admissible vertex indices to the chosen one;
    the default takes the first.  The result is choice-independent.
    With want_trace=False the per-step record is skipped (the trace comes
    back empty), which matters on long computation sequences.
    """
    if len(x) != ctx.n:
        raise InputError("cycle has wrong dimension")
    pf = pairing_vector(ctx, x)
    if not all(pi.denominator == 1 for pi in pf):
        raise InputError("cycle is not in the dual lattice L'")
    # the pairing vector stays integral along the sequence; keeping it in
    # plain ints keeps the inner loop cheap
    p = [int(pi) for pi in pf]
    n = ctx.n
    euler = ctx.graph.euler
    adjacency = ctx.adjacency
    cur = list(x)
    steps = []
    for _ in range(step_cap):
        if choose is None:
            u = next((v for v in range(n) if p[v] > 0), None)
        else:
            positive = [v for v in range(n) if p[v] > 0]
            u = choose(positive) if positive else None
        if u is None:
            final = tuple(cur)
            return final, ComputationTrace(tuple(steps), final)
        if want_trace:
            steps.append((tuple(cur), u, Fraction(p[u])))
        cur[u] += 1
        # adding E_u changes the pairing only at u and its neighbours
        p[u] += euler[u]
        for w in adjacency[u]:
            p[w] += 1
    raise CapExceededError("Laufer step cap exceeded")


def minimal_class_cycle(ctx: LatticeContext, h: ClassRep) -> Cycle:
    """s_h, the minimal antinef cycle in class h, via the closure of the
    canonical representative."""
    s, _ = antinef_closure(ctx, h, want_trace=False)
    if frac_part(s) != frac_part(h):
        raise InternalCheckError("s_h left its class")
    return s


def fundamental_cycle(ctx: LatticeContext) -> Cycle:
    """Z_min: the minimal nonzero antinef integral cycle.

    Laufer's classical sequence starting from a single base cycle; on a
    connected graph the result does not depend on the start vertex.
    """
    start = ctx.basis_vector(0)
    z, _ = antinef_closure(ctx, start, want_trace=False)
    return z


def oracle_sh(ctx: LatticeContext, h: ClassRep, bound: int) -> Cycle:
    """Brute-force s_h: enumerate r_h + l for integral 0 <= l <= bound*E,
    keep the antinef ones, return their coordinate-wise minimum.

    Independent of the Laufer path: candidates are screened by an integer
    matrix product (coordinates scaled by |H| so everything is integral).
    """
    n = ctx.n
    rep = class_of(ctx, h)
    scale = ctx.det_abs
    base = np.array([int(c * scale) for c in rep], dtype=np.int64)
    m = np.array([list(row) for row in ctx.matrix], dtype=np.int64)
    offsets = _box_offsets(n, bound)
    cand = base[None, :] + scale * offsets
    antinef = np.all(cand @ m.T <= 0, axis=1)
    hits = cand[antinef]
    if len(hits) == 0:
        raise InputError(f"no antinef cycle in the box of size {bound}")
    low = hits.min(axis=0)
    if not ((hits == low[None, :]).all(axis=1)).any():
        raise InternalCheckError(
            "coordinate-wise minimum is not itself antinef")
    return tuple(Fraction(int(c), scale) for c in low)


@lru_cache(maxsize=8)
def _box_offsets(n: int, bound: int) -> "np.ndarray":
    return np.array(list(product(range(bound + 1), repeat=n)),
                    dtype=np.int64)


def is_antinef(ctx: LatticeContext, x: Cycle) -> bool:
    return all(p <= 0 for p in pairing_vector(ctx, x))
