"""Exact rational helpers, residues mod r and Hirzebruch-Jung chains.

Rational numbers are :class:`fractions.Fraction`; Python integers are
unbounded so no overflow checks are needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InvalidInput

Rational = Fraction


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def units(r: int) -> list[int]:
    return [t for t in range(1, r) if gcd(t, r) == 1] if r > 1 else [0]


def inverse_mod(a: int, r: int) -> int:
    if gcd(a, r) != 1:
        raise InvalidInput(f"{a} is not a unit mod {r}")
    return pow(a, -1, r)


def frac_part(num: int, den: int) -> Fraction:
    return Fraction(num % den, den)


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square system exactly by Gaussian elimination with Fractions."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise InvalidInput("singular linear system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def solve_tridiagonal(lower: Sequence, diag: Sequence, upper: Sequence, rhs: Sequence) -> list[Fraction]:
    """Exact Thomas algorithm; lower[i] sits below diag[i + 1], upper[i] beside diag[i]."""
    n = len(diag)
    c = [Fraction(0)] * n
    d = [Fraction(0)] * n
    for i in range(n):
        den = Fraction(diag[i]) - (lower[i - 1] * c[i - 1] if i else 0)
        if den == 0:
            return solve_linear(_tridiagonal_dense(lower, diag, upper), rhs)
        c[i] = Fraction(upper[i]) / den if i < n - 1 else Fraction(0)
        d[i] = (rhs[i] - (lower[i - 1] * d[i - 1] if i else 0)) / den
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        x[i] = d[i] - (c[i] * x[i + 1] if i < n - 1 else 0)
    return x


def _tridiagonal_dense(lower, diag, upper):
    n = len(diag)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
        if i < n - 1:
            m[i][i + 1] = upper[i]
            m[i + 1][i] = lower[i]
    return m


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [p * x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a, b):
    a = [Fraction(x) for x in a]
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _poly_trim(a)
    return a


def is_squarefree(coeffs) -> bool:
    """Whether sum coeffs[i] t^i has no repeated root (Euclid on p, p')."""
    p = _poly_trim([Fraction(c) for c in coeffs])
    dp = _poly_trim([i * c for i, c in enumerate(p)][1:])
    if not dp:
        return True
    a, b = p, dp
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) == 1


@dataclass(frozen=True)
class HJChain:
    """Minimal resolution data of the surface quotient 1/r(1, q)."""

    r: int
    q: int
    entries: tuple[int, ...]
    discrepancies: tuple[Fraction, ...] = field(default=())

    @property
    def curve_self_intersections(self) -> tuple[int, ...]:
        return tuple(-b for b in self.entries)

    @property
    def is_du_val(self) -> bool:
        return all(b == 2 for b in self.entries)

    def intersection_matrix(self) -> list[list[int]]:
        k = len(self.entries)
        return [[-self.entries[i] if i == j else (1 if abs(i - j) == 1 else 0)
                 for j in range(k)] for i in range(k)]

    def reconstruct(self) -> Fraction:
        """Evaluate b_1 - 1/(b_2 - 1/(...))."""
        value = None
        for b in reversed(self.entries):
            value = Fraction(b) if value is None else b - 1 / value
        return value

    def k2_correction(self) -> Fraction:
        """(sum d_i C_i)^2, the change of K^2 under the minimal resolution."""
        d = self.discrepancies
        total = sum((-b * x * x for b, x in zip(self.entries, d)), Fraction(0))
        return total + 2 * sum((x * y for x, y in zip(d, d[1:])), Fraction(0))

    def end_correction(self) -> Fraction:
        """Drop of self-intersection for a smooth curve meeting the first chain curve.

        If pi^*l = l' + sum m_j C_j then l'^2 = l^2 - m_1, with m solving
        sum_j m_j C_j.C_i = -delta_{i1}.
        """
        k = len(self.entries)
        if k == 0:
            return Fraction(0)
        rhs = [-1] + [0] * (k - 1)
        return self._solve(rhs)[0]

    def _solve(self, rhs) -> list[Fraction]:
        """Solve (intersection matrix) m = rhs; the matrix is tridiagonal."""
        k = len(self.entries)
        ones = [1] * (k - 1)
        return solve_tridiagonal(ones, [-b for b in self.entries], ones, rhs)

    def label(self) -> str:
        if not self.entries:
            return "smooth"
        if self.is_du_val:
            return f"A_{len(self.entries)}"
        return f"1/{self.r}(1,{self.q})"


def hj_expand(r: int, q: int) -> HJChain:
    """Hirzebruch-Jung continued fraction of r/q plus chain discrepancies.

    >>> hj_expand(5, 3).entries
    (2, 3)
    """
    if r < 2:
        return HJChain(r, q, ())
    if not 1 <= q < r:
        raise InvalidInput(f"need 1 <= q < r, got q={q}, r={r}")
    if gcd(q, r) != 1:
        raise InvalidInput(f"gcd({q}, {r}) != 1")
    entries = []
    num, den = r, q
    while den:
        b = -(-num // den)  # ceiling
        entries.append(b)
        num, den = den, b * den - num
    chain = HJChain(r, q, tuple(entries))
    d = chain._solve([b - 2 for b in entries])
    return HJChain(r, q, tuple(entries), tuple(d))
