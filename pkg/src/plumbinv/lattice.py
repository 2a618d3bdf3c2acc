"""The lattice pair L < L', the discriminant group H = L'/L, and the
Riemann-Roch function chi.

Cycles are tuples of Fractions in the exceptional-curve basis, ordered by
vertex declaration order.  A cycle lies in L iff all coordinates are
integers, and in L' iff it pairs integrally with every basis vector,
i.e. M * coeffs is an integer vector.  Classes h in H are represented by
their canonical representative: the unique cycle in the class with all
coordinates in [0, 1).

LatticeContext is immutable after construction as far as callers are
concerned; the dual basis, Smith normal form and class list are computed
lazily and cached, which keeps large sweeps over many graphs cheap.
Pairings go through the adjacency structure (euler numbers + edges), so
they cost O(n) on trees instead of O(n^2).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import CapExceededError, InputError, InternalCheckError, \
    InvalidGraphError
from .graph import ResolutionGraph, intersection_matrix, validate
from .linalg import SnfDecomposition, leading_principal_minors, \
    smith_normal_form, solve_exact

Cycle = tuple[Fraction, ...]
ClassRep = tuple[Fraction, ...]

DEFAULT_CLASS_CAP = 10000

_ZERO = Fraction(0)


def cycle(values) -> Cycle:
    return tuple(Fraction(v) for v in values)


def zero_cycle(n: int) -> Cycle:
    return (_ZERO,) * n


class LatticeContext:
    """Graph plus cached lattice data; treat as read-only."""

    def __init__(self, graph: ResolutionGraph):
        report = validate(graph)
        if not report.ok:
            raise InvalidGraphError(report)
        self.graph = graph
        self.matrix = tuple(tuple(r) for r in intersection_matrix(graph))
        self.adjacency = tuple(
            tuple(b for (x, b) in _incident(graph, v)) for v in range(graph.n))
        minors = leading_principal_minors([list(r) for r in self.matrix])
        self.det_abs = abs(minors[-1])
        self.zk = tuple(solve_exact(
            [list(r) for r in self.matrix],
            [Fraction(e + 2) for e in graph.euler]))
        self._dual_cols: dict[int, Cycle] = {}
        self._snf: SnfDecomposition | None = None
        self._check_zk()

    @property
    def n(self) -> int:
        return self.graph.n

    def basis_vector(self, v: int) -> Cycle:
        return tuple(Fraction(int(i == v)) for i in range(self.n))

    def dual_basis_vector(self, v: int) -> Cycle:
        """E*_v, i.e. column v of -M^{-1}; solved on demand and cached."""
        col = self._dual_cols.get(v)
        if col is None:
            rhs = [Fraction(-(i == v)) for i in range(self.n)]
            col = tuple(solve_exact([list(r) for r in self.matrix], rhs))
            if any(x <= 0 for x in col):
                raise InternalCheckError("dual basis vector not positive")
            self._dual_cols[v] = col
        return col

    @property
    def neg_inv(self) -> tuple[tuple[Fraction, ...], ...]:
        """-M^{-1} as rows (assembled from the cached columns)."""
        cols = [self.dual_basis_vector(v) for v in range(self.n)]
        return tuple(tuple(cols[j][i] for j in range(self.n))
                     for i in range(self.n))

    @property
    def snf(self) -> SnfDecomposition:
        if self._snf is None:
            self._snf = smith_normal_form([list(r) for r in self.matrix])
            if self._snf.group_order() != self.det_abs:
                raise InternalCheckError("SNF order != |det M|")
        return self._snf

    def _check_zk(self):
        # cross-check the adjunction solution against the valency formula
        # Z_K = E - sum_v (2 - val(v)) E*_v; only vertices of valency != 2
        # contribute, so this stays cheap on bamboos
        alt = [Fraction(1)] * self.n
        for v in range(self.n):
            coeff = 2 - self.graph.valency(v)
            if coeff == 0:
                continue
            ev = self.dual_basis_vector(v)
            for i in range(self.n):
                alt[i] -= coeff * ev[i]
        if tuple(alt) != self.zk:
            raise InternalCheckError("Z_K adjunction/valency mismatch")


def _incident(graph, v):
    for a, b in graph.edges:
        if a == v:
            yield (a, b)
        elif b == v:
            yield (b, a)


def build_context(g: ResolutionGraph) -> LatticeContext:
    """Validate g and assemble the cached lattice data."""
    return LatticeContext(g)


def _scaled(x) -> tuple[list[int], int]:
    """Clear denominators: (integer coordinates, common denominator)."""
    m = lcm(*(c.denominator for c in x)) if x else 1
    return [c.numerator * (m // c.denominator) for c in x], m


def pairing_vector(ctx: LatticeContext, x: Cycle) -> Cycle:
    """(x, E_v) for every v, i.e. M * x (via the adjacency structure)."""
    if len(x) != ctx.n:
        raise InputError("cycle has wrong dimension")
    xs, m = _scaled(x)
    e = ctx.graph.euler
    out = [e[v] * xs[v] for v in range(ctx.n)]
    for v in range(ctx.n):
        for u in ctx.adjacency[v]:
            out[v] += xs[u]
    return tuple(Fraction(o, m) for o in out)


def pairing(ctx: LatticeContext, x: Cycle, y: Cycle) -> Fraction:
    """Intersection pairing x^T M y, exact (integer arithmetic after
    clearing denominators)."""
    if len(x) != ctx.n or len(y) != ctx.n:
        raise InputError("cycle has wrong dimension")
    xs, mx = _scaled(x)
    ys, my = _scaled(y)
    e = ctx.graph.euler
    total = sum(e[v] * xs[v] * ys[v] for v in range(ctx.n))
    for a, b in ctx.graph.edges:
        total += xs[a] * ys[b] + xs[b] * ys[a]
    return Fraction(total, mx * my)


def chi(ctx: LatticeContext, x: Cycle) -> Fraction:
    """Riemann-Roch expression -(x, x - Z_K) / 2."""
    shifted = tuple(a - b for a, b in zip(x, ctx.zk))
    return -pairing(ctx, x, shifted) / 2


def neg(x: Cycle) -> Cycle:
    return tuple(-a for a in x)


def add(x: Cycle, y: Cycle) -> Cycle:
    return tuple(a + b for a, b in zip(x, y))


def is_integral(x: Cycle) -> bool:
    return all(a.denominator == 1 for a in x)


def in_dual_lattice(ctx: LatticeContext, x: Cycle) -> bool:
    return is_integral(pairing_vector(ctx, x))


def frac_part(x: Cycle) -> Cycle:
    return tuple(a - (a.numerator // a.denominator) for a in x)


def class_of(ctx: LatticeContext, x: Cycle) -> ClassRep:
    """Canonical representative of [x] in H: coordinate-wise fractional
    part.  Requires x in L'."""
    if not in_dual_lattice(ctx, x):
        raise InputError("cycle is not in the dual lattice L'")
    return frac_part(x)


def zero_class(ctx: LatticeContext) -> ClassRep:
    return zero_cycle(ctx.n)


def negate_class(ctx: LatticeContext, h: ClassRep) -> ClassRep:
    # h is already a class rep, so membership in L' needs no re-check
    return frac_part(neg(h))


def add_classes(ctx: LatticeContext, h1: ClassRep, h2: ClassRep) -> ClassRep:
    return frac_part(add(h1, h2))


def enumerate_classes(ctx: LatticeContext,
                      cap: int = DEFAULT_CLASS_CAP) -> list[ClassRep]:
    """All of H, deterministically ordered.

    In dual-basis coordinates H = Z^n / M Z^n; with U M V = D the map
    a -> U a identifies it with the product of the Z/d_i.  For each
    nontrivial factor the generating cycle is recovered from the matching
    column of U^{-1}, and representatives are accumulated lexicographically
    in the SNF coordinates.
    """
    if ctx.det_abs > cap:
        raise CapExceededError(f"|H| = {ctx.det_abs} exceeds cap {cap}")
    n = ctx.n
    snf = ctx.snf
    reps: list[ClassRep] = [zero_cycle(n)]
    for j in range(n):
        dj = abs(snf.d[j])
        if dj <= 1:
            continue
        # cycle generating the j-th factor: solve M g = -(U^{-1} e_j)
        col = [Fraction(-snf.u_inv[i][j]) for i in range(n)]
        gen = frac_part(tuple(solve_exact([list(r) for r in ctx.matrix], col)))
        new: list[ClassRep] = []
        for r in reps:
            cur = r
            for _ in range(dj):
                new.append(cur)
                cur = frac_part(add(cur, gen))
            if cur != r:
                raise InternalCheckError("class generator order mismatch")
        reps = new
    if len(reps) != ctx.det_abs or len(set(reps)) != ctx.det_abs:
        raise InternalCheckError("class enumeration produced duplicates")
    return reps
