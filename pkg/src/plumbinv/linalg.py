"""Exact linear algebra over Python integers and fractions.

Everything here is exact; there is no floating-point path.  Determinants
and leading principal minors come from fraction-free Bareiss elimination
(dense) or, on the large-but-sparse tree matrices the package mostly
meets, from a sparsity-skipping exact Gaussian pass whose pivots multiply
up to the same minors.  The Smith normal form tracks its unimodular
transforms (and the inverse of the row transform) and re-verifies
U*M*V == D before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalCheckError

Vector = list[Fraction]
Matrix = list[list[int]]


def det_bareiss(m) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m) -> list[int]:
    """Determinants of the k x k top-left blocks, k = 1..n.

    A pivoting-free exact elimination yields all minors in one pass as
    running pivot products (skipping zero entries, so tree matrices cost
    O(n^2) instead of O(n^4)).  A zero pivot makes that block's minor 0;
    from there on each remaining minor is expanded densely.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    minors: list[int] = []
    product = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # minor k is genuinely zero only if no completion helps; fall
            # back to dense evaluation for this and all later blocks
            for kk in range(k, n):
                minors.append(det_bareiss(
                    [row[:kk + 1] for row in m[:kk + 1]]))
            return minors
        product *= a[k][k]
        if product.denominator != 1:
            raise InternalCheckError("minor product not integral")
        minors.append(product.numerator)
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            for j in range(k, n):
                if a[k][j]:
                    a[i][j] -= factor * a[k][j]
    return minors


def is_negative_definite(m) -> bool:
    """True iff (-1)^k * (k-th leading minor) > 0 for all k."""
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise InputError("matrix is not symmetric")
    sign = -1
    for mk in leading_principal_minors(m):
        if sign * mk <= 0:
            return False
        sign = -sign
    return True


def solve_exact(m, b) -> Vector:
    """Solve M x = b exactly for integer M and rational b.

    Plain exact Gaussian elimination with first-nonzero pivoting and
    zero-skipping, so sparse (tree) systems stay cheap.
    """
    n = len(m)
    if len(b) != n:
        raise InputError("dimension mismatch in solve_exact")
    a = [[Fraction(x) for x in row] + [Fraction(bi)]
         for row, bi in zip(m, b)]
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise InputError("singular matrix")
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            for j in range(k, n + 1):
                if a[k][j]:
                    a[i][j] -= factor * a[k][j]
    x: Vector = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = a[i][n]
        for j in range(i + 1, n):
            if a[i][j]:
                acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def neg_inverse(m) -> list[Vector]:
    """-M^{-1} for negative definite M; all entries strictly positive."""
    if not is_negative_definite(m):
        raise InputError("matrix is not negative definite")
    n = len(m)
    cols = [solve_exact(m, [Fraction(-(i == j)) for i in range(n)])
            for j in range(n)]
    inv = [[cols[j][i] for j in range(n)] for i in range(n)]
    for row in inv:
        for x in row:
            if x <= 0:
                raise InternalCheckError("-M^{-1} has a nonpositive entry")
    return inv


@dataclass(frozen=True)
class SnfDecomposition:
    """U * M * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...),
    invariant factors positive for invertible M.  u_inv is U^{-1},
    tracked alongside the elimination."""

    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    u_inv: tuple[tuple[int, ...], ...]

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(x for x in self.d if x != 1)

    def group_order(self) -> int:
        order = 1
        for x in self.d:
            order *= abs(x)
        return order


def smith_normal_form(m) -> SnfDecomposition:
    """Smith normal form of a square integer matrix."""
    n = len(m)
    a = [list(row) for row in m]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    uinv = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        for j in range(n):
            a[dst][j] += q * a[src][j]
            u[dst][j] += q * u[src][j]
        for row in uinv:      # uinv: column src -= q * column dst
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for row in uinv:
            row[i] = -row[i]

    for t in range(n):
        # move a nonzero pivot of minimal absolute value into (t, t)
        while True:
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            done = True
            for i in range(t + 1, n):
                if a[i][t] % a[t][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    done = False
            for j in range(t + 1, n):
                if a[t][j] % a[t][t] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    done = False
            if not done:
                continue
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            # pivot must also divide the remaining block
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)

    d = [a[i][i] for i in range(n)]
    _verify_snf(m, u, v, d, uinv)
    return SnfDecomposition(
        u=tuple(tuple(r) for r in u),
        v=tuple(tuple(r) for r in v),
        d=tuple(d),
        u_inv=tuple(tuple(r) for r in uinv),
    )


def _verify_snf(m, u, v, d, uinv):
    n = len(m)
    for i in range(n - 1):
        if d[i] and d[i + 1] % d[i] != 0:
            raise InternalCheckError("SNF divisibility chain broken")
        if d[i] == 0 and d[i + 1] != 0:
            raise InternalCheckError("SNF zero ordering broken")
    uui = mat_mul(u, uinv)
    for i in range(n):
        for j in range(n):
            if uui[i][j] != int(i == j):
                raise InternalCheckError("tracked U^{-1} is wrong")
    umv = mat_mul(mat_mul(u, m), v)
    for i in range(n):
        for j in range(n):
            expect = d[i] if i == j else 0
            if umv[i][j] != expect:
                raise InternalCheckError("U*M*V != D")


def mat_mul(a, b):
    n, k, mcols = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(mcols)]
            for i in range(n)]
