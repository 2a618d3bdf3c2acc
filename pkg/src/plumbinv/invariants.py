"""Curve-germ invariants on a resolution graph: delta, kappa, the Blache
correction term, Mumford and Hironaka intersection multiplicities, the
duality identity verifier and the Kulikov property.

The delta formula is only meaningful when the singularity is rational
(Artin's combinatorial criterion chi(Z_min) = 1).  On non-rational graphs
delta/kappa/blache/hironaka refuse by default; `chi_expression` exposes
the raw lattice expression for callers that want it anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalCheckError, NonRationalError
from .graph import CurveConfig
from .lattice import ClassRep, Cycle, LatticeContext, add, add_classes, chi, \
    class_of, enumerate_classes, neg, negate_class, pairing, pairing_vector
from .laufer import fundamental_cycle, minimal_class_cycle


@dataclass(frozen=True)
class CurveInvariantReport:
    curve: str
    curve_cycle: Cycle
    h: ClassRep
    branches: int                 # r, total arrow count
    chi_neg_cycle: Fraction       # chi(-l'_C)
    s_term: Cycle                 # s_{[Z_K + l'_C]}
    chi_s_term: Fraction
    delta: Fraction | None        # None when not rational
    blache_a: Fraction | None
    rational: bool


def is_rational(ctx: LatticeContext) -> bool:
    """Artin's criterion: chi of the fundamental cycle equals 1."""
    return chi(ctx, fundamental_cycle(ctx)) == 1


def curve_cycle(ctx: LatticeContext, c: CurveConfig) -> Cycle:
    """l'_C = sum_v a_v E*_v, the exceptional part of the total transform;
    it pairs to -a_v with each E_v."""
    if c.is_zero():
        raise InputError(f"curve {c.name!r} has no arrows")
    if len(c.arrows) != ctx.n:
        raise InputError("curve arrow vector has wrong dimension")
    out = [Fraction(0)] * ctx.n
    for v, a in enumerate(c.arrows):
        if a < 0:
            raise InputError("negative arrow count")
        if a:
            ev = ctx.dual_basis_vector(v)
            for i in range(ctx.n):
                out[i] += a * ev[i]
    return tuple(out)


def chi_expression(ctx: LatticeContext, c: CurveConfig) -> Fraction:
    """chi(-l'_C) - chi(s_{[Z_K + l'_C]}), with no rationality guard.

    Equals delta(C) when the graph is rational; otherwise it is just a
    lattice expression, not the delta invariant.
    """
    lc = curve_cycle(ctx, c)
    s = minimal_class_cycle(ctx, class_of(ctx, add(ctx.zk, lc)))
    return chi(ctx, neg(lc)) - chi(ctx, s)


def delta(ctx: LatticeContext, c: CurveConfig) -> CurveInvariantReport:
    """Full report for one curve config.

    On rational graphs delta = chi(-l'_C) - chi(s_{[Z_K + l'_C]}) and the
    equivalent form chi(-l'_C) - chi(s_{-h}) is re-verified; delta must
    come out a nonnegative integer.  On non-rational graphs the report
    carries the lattice data with delta and blache_a unset.
    """
    lc = curve_cycle(ctx, c)
    h = class_of(ctx, lc)
    s_term = minimal_class_cycle(ctx, add_classes(ctx, class_of(ctx, ctx.zk), h))
    chi_neg = chi(ctx, neg(lc))
    chi_s = chi(ctx, s_term)
    rational = is_rational(ctx)

    value = None
    blache = None
    if rational:
        value = chi_neg - chi_s
        alt = chi_neg - chi(ctx, minimal_class_cycle(ctx, negate_class(ctx, h)))
        if alt != value:
            raise InternalCheckError(
                "the two delta formulas disagree on a rational graph")
        if value.denominator != 1 or value < 0:
            raise InternalCheckError(
                f"delta = {value} is not a nonnegative integer")
        blache = chi_s

    return CurveInvariantReport(
        curve=c.name,
        curve_cycle=lc,
        h=h,
        branches=c.total(),
        chi_neg_cycle=chi_neg,
        s_term=s_term,
        chi_s_term=chi_s,
        delta=value,
        blache_a=blache,
        rational=rational,
    )


def require_rational(ctx: LatticeContext, what: str):
    if not is_rational(ctx):
        zmin = fundamental_cycle(ctx)
        raise NonRationalError(
            f"{what} requires a rational singularity, but "
            f"chi(Z_min) = {chi(ctx, zmin)} != 1; on non-rational graphs "
            "the lattice expression no longer computes delta")


def kappa_topological(ctx: LatticeContext, c: CurveConfig) -> Fraction:
    """kappa of the curve; equal to delta on rational graphs, refused
    otherwise."""
    require_rational(ctx, "kappa")
    return delta(ctx, c).delta


def blache_A(ctx: LatticeContext, c: CurveConfig) -> Fraction:
    """Blache correction term chi(s_{[Z_K + l'_C]}); zero for Cartier
    configurations."""
    require_rational(ctx, "the Blache correction term")
    return delta(ctx, c).blache_a


def mumford_pairing(ctx: LatticeContext, c1: CurveConfig,
                    c2: CurveConfig) -> Fraction:
    """-(l'_{C1}, l'_{C2}).  Arrow data cannot express common components;
    the caller is responsible for the curves having none."""
    value = -pairing(ctx, curve_cycle(ctx, c1), curve_cycle(ctx, c2))
    if value <= 0:
        raise InternalCheckError("Mumford pairing not positive")
    return value


def sum_config(c1: CurveConfig, c2: CurveConfig) -> CurveConfig:
    return CurveConfig(
        name=f"{c1.name}+{c2.name}",
        arrows=tuple(a + b for a, b in zip(c1.arrows, c2.arrows)),
    )


def hironaka_mult(ctx: LatticeContext, c1: CurveConfig,
                  c2: CurveConfig) -> Fraction:
    """(C1,C2)_Hir = (C1,C2)_X + A(C1) + A(C2) - A(C1+C2)."""
    require_rational(ctx, "the Hironaka multiplicity")
    return (mumford_pairing(ctx, c1, c2)
            + blache_A(ctx, c1)
            + blache_A(ctx, c2)
            - blache_A(ctx, sum_config(c1, c2)))


def verify_duality(ctx: LatticeContext, cap: int = 10000):
    """Check chi(s_{-h}) = chi(s_{[Z_K]+h}) over all of H.

    Returns the list of failures (h, chi(s_{-h}), chi(s_{[Z_K]+h})); empty
    on every rational graph, possibly nonempty otherwise.
    """
    zk_class = class_of(ctx, ctx.zk)
    failures = []
    for h in enumerate_classes(ctx, cap=cap):
        lhs = chi(ctx, minimal_class_cycle(ctx, negate_class(ctx, h)))
        rhs = chi(ctx, minimal_class_cycle(ctx, add_classes(ctx, zk_class, h)))
        if lhs != rhs:
            failures.append((h, lhs, rhs))
    return failures


def kulikov_check(ctx: LatticeContext) -> tuple[bool, tuple[int, ...]]:
    """Kulikov property of this resolution: wherever Z_min pairs strictly
    negatively, its coefficient is 1.  Also returns r_v = -(Z_min, E_v)."""
    zmin = fundamental_cycle(ctx)
    pv = pairing_vector(ctx, zmin)
    rv = tuple(int(-p) for p in pv)
    ok = all(zmin[v] == 1 for v in range(ctx.n) if rv[v] > 0)
    return ok, rv
