"""Cyclic quotient singularities 1/d(1,q): Hirzebruch-Jung bamboos and
the closed forms that cross-check the general lattice machinery."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError, InternalCheckError
from .graph import ResolutionGraph
from .lattice import LatticeContext, chi, class_of, neg, negate_class, \
    pairing_vector
from .laufer import minimal_class_cycle


@dataclass(frozen=True)
class CyclicType:
    d: int
    q: int
    q_prime: int                 # q * q_prime == 1 (mod d)
    hj_digits: tuple[int, ...]   # d/q = b1 - 1/(b2 - 1/(...)), all >= 2


def hj_expansion(d: int, q: int) -> list[int]:
    """Negative (Hirzebruch-Jung) continued fraction digits of d/q."""
    _check_dq(d, q)
    digits = []
    a, b = d, q
    while b > 0:
        bi = -(-a // b)  # ceil
        digits.append(bi)
        a, b = b, bi * b - a
    _verify_hj(d, q, digits)
    return digits


def _check_dq(d, q):
    if d < 2 or not (0 < q < d):
        raise InputError("need d >= 2 and 0 < q < d")
    if gcd(d, q) != 1:
        raise InputError(f"gcd({d}, {q}) != 1")


def _verify_hj(d, q, digits):
    num, den = 1, 0  # evaluate the continued fraction back to front
    for b in reversed(digits):
        num, den = b * num - den, num
    if (num, den) != (d, q):
        raise InternalCheckError("HJ digits do not reconstruct d/q")
    if any(b < 2 for b in digits):
        raise InternalCheckError("HJ digit below 2")


def cyclic_type(d: int, q: int) -> CyclicType:
    _check_dq(d, q)
    return CyclicType(d=d, q=q, q_prime=pow(q, -1, d),
                      hj_digits=tuple(hj_expansion(d, q)))


def build_cyclic_graph(d: int, q: int) -> ResolutionGraph:
    """Minimal resolution of 1/d(1,q): a bamboo with weights -b_i."""
    digits = hj_expansion(d, q)
    s = len(digits)
    labels = tuple(f"v{i + 1}" for i in range(s))
    return ResolutionGraph(
        labels=labels,
        euler=tuple(-b for b in digits),
        genus=(0,) * s,
        edges=tuple((i, i + 1) for i in range(s - 1)),
    )


def chi_sh_closed_form(ct: CyclicType, a: int) -> Fraction:
    """chi(s_h) for h = [a * E*_s]:  a(1-d)/2d + sum_{i=1..a} {i q'/d}."""
    if not (0 < a < ct.d):
        raise InputError("need 0 < a < d")
    frac_sum = sum(i * ct.q_prime % ct.d for i in range(1, a + 1))
    return Fraction(a * (1 - ct.d), 2 * ct.d) + Fraction(frac_sum, ct.d)


def reciprocity_check(ctx: LatticeContext, ct: CyclicType,
                      a: int) -> tuple[Fraction, int, bool]:
    """Exp = chi(-s_h) - chi(s_{-h}) against r - 1, where s_h = sum r_v E*_v
    and r = sum r_v; ctx must be the lattice of build_cyclic_graph(ct)."""
    if not (0 < a < ct.d):
        raise InputError("need 0 < a < d")
    last = ctx.dual_basis_vector(ctx.n - 1)
    h = class_of(ctx, tuple(a * x for x in last))
    s_h = minimal_class_cycle(ctx, h)
    s_neg = minimal_class_cycle(ctx, negate_class(ctx, h))
    exp = chi(ctx, neg(s_h)) - chi(ctx, s_neg)
    r = int(-sum(pairing_vector(ctx, s_h)))
    return exp, r, exp == r - 1
