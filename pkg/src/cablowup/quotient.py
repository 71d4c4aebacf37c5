"""Cyclic quotient and hyperquotient singularities 1/r(w_1, ..., w_k)."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import GermParseError, InvalidInput
from .exact import HJChain, hj_expand, inverse_mod, units


@dataclass(frozen=True)
class CyclicQuotient:
    order: int
    weights: tuple[int, ...]
    equation_weight: Optional[int] = None

    def __post_init__(self):
        r = int(self.order)
        if r < 1:
            raise InvalidInput("group order must be positive")
        if not 1 <= len(self.weights) <= 4:
            raise InvalidInput("between 1 and 4 weights expected")
        object.__setattr__(self, "weights", tuple(int(w) % r for w in self.weights))
        if self.equation_weight is not None:
            object.__setattr__(self, "equation_weight", int(self.equation_weight) % r)

    @property
    def is_hyper(self) -> bool:
        return self.equation_weight is not None

    def scaled(self, t: int) -> "CyclicQuotient":
        e = None if self.equation_weight is None else t * self.equation_weight
        return CyclicQuotient(self.order, tuple(t * w for w in self.weights), e)

    def canonical(self) -> "CyclicQuotient":
        """Lexicographically least weight sequence over unit multiples and permutations."""
        r = self.order
        best = None
        for t in units(r) if r > 1 else [1]:
            q = self.scaled(t)
            key = (tuple(sorted(q.weights)), q.equation_weight if q.is_hyper else -1)
            if best is None or key < best:
                best = key
        e = best[1] if self.is_hyper else None
        return CyclicQuotient(r, best[0], e)

    def render(self, signed: bool = False) -> str:
        r = self.order
        ws = [_signed(w, r) if signed else w for w in self.weights]
        body = ",".join(str(w) for w in ws)
        if self.is_hyper:
            e = _signed(self.equation_weight, r) if signed else self.equation_weight
            body += f";{e}"
        return f"1/{r}({body})"

    def __str__(self):
        return self.render()


def _signed(w, r):
    return w - r if w > r // 2 else w


_LITERAL = re.compile(r"^\s*1\s*/\s*(\d+)\s*\(([^;)]*)(?:;([^)]*))?\)\s*$")


def parse_quotient(text: str) -> CyclicQuotient:
    """Parse ``1/r(w1,w2,...)`` or ``1/r(w1,...,w4;e)``; negative residues allowed."""
    m = _LITERAL.match(text)
    if not m:
        raise GermParseError("expected a literal of the form 1/r(w1,w2,...)", text, 0)
    try:
        weights = tuple(int(x) for x in m.group(2).split(","))
        e = int(m.group(3)) if m.group(3) is not None else None
    except ValueError:
        raise GermParseError("weights must be integers", text, m.start(2)) from None
    r = int(m.group(1))
    if r < 1:
        raise GermParseError("group order must be positive", text, m.start(1))
    return CyclicQuotient(r, weights, e)


def is_isolated_action(q: CyclicQuotient) -> bool:
    if q.is_hyper:
        raise InvalidInput("isolatedness test is for pure quotients")
    return all(gcd(w, q.order) == 1 for w in q.weights)


def reid_tai_quotient(q: CyclicQuotient) -> bool:
    """Reid-Tai: sum_i {k w_i / r} > 1 for all k, plus an isolated action."""
    r = q.order
    if r == 1:
        return True
    if not is_isolated_action(q):
        return False
    return all(sum(k * w % r for w in q.weights) > r for k in range(1, r))


def is_terminal_quotient(q: CyclicQuotient) -> bool:
    """Morrison-Stevens rule: 1/r(a, -a, b) with a, b units, up to units and order."""
    if q.is_hyper or len(q.weights) != 3:
        raise InvalidInput("expected a 3-weight quotient without equation weight")
    r = q.order
    if r == 1:
        return True
    ws = q.weights
    if any(gcd(w, r) != 1 for w in ws):
        return False
    # with every weight a unit, t = w_i^{-1} is the only scaling that can hit 1
    return (ws[0] + ws[1]) % r == 0 or (ws[0] + ws[2]) % r == 0 or (ws[1] + ws[2]) % r == 0


def is_terminal_hyperquotient(q: CyclicQuotient, monomials=None) -> bool:
    """Weighted Reid-Tai test for a hyperquotient {F = 0} / Z_r, F of weight e.

    For each k the toric valuation v_k = ({k w_i / r}) must have discrepancy
    sum_i v_k,i - 1 - v_k(F) > 0.  Without ``monomials`` v_k(F) is taken to be
    {k e / r}, its least possible value; with the exponent vectors of F it is
    the true minimum over the monomials, which can only be larger.

    Isolatedness of the singular locus is the caller's job.
    """
    if not q.is_hyper or len(q.weights) != 4:
        raise InvalidInput("expected 4 weights and an equation weight")
    r, ws, e = q.order, q.weights, q.equation_weight
    if r == 1:
        return True
    for k in range(1, r):
        v = [k * w % r for w in ws]  # numerators over r
        if monomials is None:
            vf = k * e % r
        else:
            vf = min(sum(m * x for m, x in zip(mono, v)) for mono in monomials)
        if sum(v) - vf <= r:
            return False
    return True


@dataclass(frozen=True)
class SurfaceQuotientType:
    label: str
    chain: HJChain

    @property
    def is_du_val(self):
        return self.chain.is_du_val


def duval_of_surface_quotient(q: CyclicQuotient) -> SurfaceQuotientType:
    if q.is_hyper or len(q.weights) != 2:
        raise InvalidInput("expected a 2-weight surface quotient")
    r = q.order
    if r > 1 and not all(gcd(w, r) == 1 for w in q.weights):
        raise InvalidInput(f"{q} is not an isolated action")
    if r == 1:
        return SurfaceQuotientType("smooth", hj_expand(1, 0))
    qn = q.weights[1] * inverse_mod(q.weights[0], r) % r
    chain = hj_expand(r, qn)
    if qn == r - 1:
        return SurfaceQuotientType(f"A_{r - 1}", chain)
    return SurfaceQuotientType("non-Du-Val cyclic", chain)
