"""Rendering and parsing of exact rationals and cycle vectors.

Rationals travel as strings: "p/q", or just "p" for integers.  Cycle
vectors are comma-separated rationals in the exceptional basis, or
"dual:a1,...,an" meaning sum_i a_i E*_i.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .lattice import Cycle, LatticeContext


def fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_cycle(x) -> str:
    return ",".join(fmt_q(c) for c in x)


def parse_q(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}") from None


def parse_cycle(ctx: LatticeContext, text: str) -> Cycle:
    """Parse a VEC argument against a lattice context."""
    text = text.strip()
    if text.startswith("dual:"):
        coeffs = [parse_q(t) for t in text[len("dual:"):].split(",")]
        if len(coeffs) != ctx.n:
            raise InputError(
                f"expected {ctx.n} dual coordinates, got {len(coeffs)}")
        out = [Fraction(0)] * ctx.n
        for v, a in enumerate(coeffs):
            ev = ctx.dual_basis_vector(v)
            for i in range(ctx.n):
                out[i] += a * ev[i]
        return tuple(out)
    coeffs = [parse_q(t) for t in text.split(",")]
    if len(coeffs) != ctx.n:
        raise InputError(
            f"expected {ctx.n} coordinates, got {len(coeffs)}")
    return tuple(coeffs)
