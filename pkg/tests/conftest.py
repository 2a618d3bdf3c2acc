"""Shared fixtures: a corpus of small graphs, independent linear-algebra
oracles, deterministic random corpora and blow-up helpers."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest

from plumbinv.cyclic import build_cyclic_graph
from plumbinv.graph import CurveConfig, ResolutionGraph, parse_graph, validate
from plumbinv.lattice import LatticeContext, build_context

# ---------------------------------------------------------------- fixtures

A1_TEXT = "vertex v e=-2\n"

A3_TEXT = """\
vertex v1 e=-2
vertex v2 e=-2
vertex v3 e=-2
edge v1 v2
edge v2 v3
curve C1: v1=1
curve C2: v3=1
curve Q: v3=4
"""

# star with a (-1) center and -4,-4,-4,-10 leaves; not negative
# semidefinite-degenerate but also not rational (chi(Z_min) = -2)
STAR_TEXT = """\
vertex a e=-1
vertex b e=-4
vertex c e=-4
vertex d e=-4
vertex f e=-10
edge a b
edge a c
edge a d
edge a f
curve C: b=1
"""

# embedded-resolution graph of the plane cusp; unimodular (|H| = 1)
CUSP_TEXT = """\
vertex w1 e=-3
vertex w2 e=-2
vertex w3 e=-1
edge w1 w3
edge w2 w3
curve C: w3=1
"""

D4_TEXT = """\
vertex c e=-2
vertex l1 e=-2
vertex l2 e=-2
vertex l3 e=-2
edge c l1
edge c l2
edge c l3
"""

E8_TEXT = """\
vertex v1 e=-2
vertex v2 e=-2
vertex v3 e=-2
vertex v4 e=-2
vertex v5 e=-2
vertex v6 e=-2
vertex v7 e=-2
vertex v8 e=-2
edge v1 v2
edge v2 v3
edge v3 v4
edge v4 v5
edge v5 v6
edge v6 v7
edge v3 v8
"""

SINGLE_BLOWUP_TEXT = "vertex o e=-1\n"

FIXTURE_TEXTS = {
    "a1": A1_TEXT,
    "a3": A3_TEXT,
    "star": STAR_TEXT,
    "cusp": CUSP_TEXT,
    "d4": D4_TEXT,
    "e8": E8_TEXT,
    "blowup1": SINGLE_BLOWUP_TEXT,
}


@pytest.fixture(scope="session")
def graphs() -> dict[str, ResolutionGraph]:
    return {name: parse_graph(text) for name, text in FIXTURE_TEXTS.items()}


@pytest.fixture(scope="session")
def contexts(graphs) -> dict[str, LatticeContext]:
    return {name: build_context(g) for name, g in graphs.items()}


_CYCLIC_CACHE: dict[tuple[int, int], LatticeContext] = {}


def cyclic_context(d: int, q: int) -> LatticeContext:
    """Context of the 1/d(1,q) bamboo, cached across the whole test run."""
    key = (d, q)
    if key not in _CYCLIC_CACHE:
        _CYCLIC_CACHE[key] = build_context(build_cyclic_graph(d, q))
    return _CYCLIC_CACHE[key]


# ------------------------------------------------- independent oracles

def det_permutation(m) -> int:
    """Determinant by the permutation (Leibniz) expansion; O(n!) but
    completely independent of the elimination code."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += sign * term
    return total


def inverse_adjugate(m) -> list[list[Fraction]]:
    """Matrix inverse via cofactors, using the permutation determinant."""
    n = len(m)
    det = det_permutation(m)
    assert det != 0
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            cof = det_permutation(minor) if minor else 1
            inv[j][i] = Fraction((-1) ** (i + j) * cof, det)
    return inv


# ------------------------------------------------- random graph corpus

def random_tree(rng: random.Random, n: int,
                weights=range(-7, -1)) -> ResolutionGraph:
    """Random labelled tree on n vertices with random Euler numbers."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    return ResolutionGraph(
        labels=tuple(f"t{v}" for v in range(n)),
        euler=tuple(rng.choice(list(weights)) for _ in range(n)),
        genus=(0,) * n,
        edges=tuple(edges),
    )


def random_valid_contexts(seed: int, count: int, max_n: int = 8,
                          predicate=None) -> list[LatticeContext]:
    """Deterministic corpus of validated contexts, filtered by predicate."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_tree(rng, rng.randrange(2, max_n + 1))
        if not validate(g).ok:
            continue
        ctx = build_context(g)
        if predicate is not None and not predicate(ctx):
            continue
        out.append(ctx)
    return out


def random_config(rng: random.Random, n: int, max_arrows: int = 3,
                  name: str = "R") -> CurveConfig:
    while True:
        arrows = tuple(rng.randrange(max_arrows + 1) for _ in range(n))
        if any(arrows):
            return CurveConfig(name, arrows)


# ------------------------------------------------- blow-up helpers

def blow_up(g: ResolutionGraph, label: str,
            move_arrow_of: str | None = None) -> ResolutionGraph:
    """One blow-up at a point of the curve of `label`.

    A new (-1)-vertex is attached to it and its Euler number drops by 1.
    With move_arrow_of set, the blown-up point is where that curve's
    branch meets the exceptional curve, so one of its arrows moves to the
    new vertex; otherwise arrows stay put.
    """
    v = g.index(label)
    new = "blowup"
    assert new not in g.labels
    euler = list(g.euler)
    euler[v] -= 1
    curves = []
    for c in g.curves:
        arrows = list(c.arrows) + [0]
        if c.name == move_arrow_of:
            assert arrows[v] > 0
            arrows[v] -= 1
            arrows[g.n] += 1
        curves.append(CurveConfig(c.name, tuple(arrows)))
    return ResolutionGraph(
        labels=g.labels + (new,),
        euler=tuple(euler) + (-1,),
        genus=g.genus + (0,),
        edges=g.edges + ((v, g.n),),
        curves=tuple(curves),
    )
