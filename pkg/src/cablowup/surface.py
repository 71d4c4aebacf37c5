"""Invariants of the exceptional surface E of a weighted blow-up.

E sits in P(a, b, c, d) as the zero locus of the lowest-weight part of
xy + f.  Its singular points are read off the blow-up charts restricted to
the chart coordinate = 0; each point is reported once, in the chart of the
smallest coordinate that is nonzero there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .blowup import VARS, XY, exceptional_part, make_charts
from .errors import Inconsistency, InvalidInput, UnsupportedShape
from .exact import HJChain, gcd_all, hj_expand
from .germ import GermModel, weighted_mult
from .locus import analyze, poly_from_terms
from .quotient import CyclicQuotient, duval_of_surface_quotient


@dataclass(frozen=True)
class SurfacePoint:
    label: str
    chain: HJChain
    support: tuple[int, ...]  # coordinates of P(a,b,c,d) that are nonzero at the point
    chart: int
    origin: str = "quotient"  # or "hypersurface"
    count: int = 1

    @property
    def location(self) -> str:
        return "{" + ",".join(VARS[j] for j in self.support) + "} != 0"

    def to_dict(self):
        return {"label": self.label, "chain": list(self.chain.entries),
                "discrepancies": [str(d) for d in self.chain.discrepancies],
                "chart": self.chart, "location": [VARS[j] for j in self.support],
                "origin": self.origin, "count": self.count}


@dataclass(frozen=True)
class CurveSection:
    component_count: int
    multiplicity: int
    pairwise_intersection: Fraction
    self_intersection: Fraction
    resolved_self_intersection: Fraction
    total: Fraction
    section: str = "x"

    def identity_holds(self) -> bool:
        n = self.component_count
        lhs = n * self.self_intersection + n * (n - 1) * self.pairwise_intersection
        return lhs * self.multiplicity ** 2 == self.total

    def to_dict(self):
        return {"section": self.section, "component_count": self.component_count,
                "multiplicity": self.multiplicity,
                "pairwise_intersection": str(self.pairwise_intersection),
                "self_intersection": str(self.self_intersection),
                "resolved_self_intersection": str(self.resolved_self_intersection),
                "total": str(self.total)}


@dataclass
class SurfaceReport:
    k2: Fraction
    singular_points: list
    k2_resolution: Fraction
    euler_resolution: int
    b2_resolution: int
    picard: int
    curve_data: Optional[CurveSection] = None
    exceptional_curves: int = 0

    def to_dict(self):
        return {"k2": str(self.k2),
                "singular_points": [p.to_dict() for p in self.singular_points],
                "k2_resolution": str(self.k2_resolution),
                "euler_resolution": self.euler_resolution,
                "b2_resolution": self.b2_resolution,
                "picard": self.picard,
                "curve_data": self.curve_data.to_dict() if self.curve_data else None}


def _require_good_exceptional(g, w):
    exc = exceptional_part(g, w)
    if not exc.ok:
        raise InvalidInput(f"exceptional divisor of {tuple(w)} is reducible or non-reduced")
    return exc


def surface_k2(g: GermModel, w) -> Fraction:
    """K_E^2 by adjunction: K_E = O(m - a - b - c - d) on a degree-m hypersurface."""
    _require_good_exceptional(g, w)
    a, b, c, d = w
    m = weighted_mult(g, w)
    return Fraction((m - (a + b + c + d)) ** 2 * m, a * b * c * d)


def _du_val_hypersurface(poly) -> int:
    """k for a germ of the shape x x' + x''^k (A_{k-1}); 0 if not of that shape."""
    if len(poly) != 2:
        return 0
    mixed = [e for e in poly if sorted(e) == [0, 1, 1]]
    power = [e for e in poly if sorted(e)[:2] == [0, 0] and max(e) >= 2]
    if len(mixed) == 1 and len(power) == 1:
        m, p = mixed[0], power[0]
        if all(not (m[j] and p[j]) for j in range(3)):
            return max(p)
    return 0


def surface_singularities(g: GermModel, w) -> list[SurfacePoint]:
    _require_good_exceptional(g, w)
    points = []
    for ch in make_charts(g, w):
        i = ch.index - 1
        others = [j for j in range(4) if j != i]
        poly = poly_from_terms(tuple(t[j] for j in others) for t in ch.terms if t[i] == 0)
        weights = [ch.group.weights[j] for j in others]
        r = ch.order

        def keep(support, others=others, i=i):
            return all(others[j] > i for j in support)

        for p in analyze(poly, r, weights, keep=keep):
            support = tuple(sorted({i, *(others[j] for j in p.stratum)}))
            if p.kind == "positive-dimensional":
                raise UnsupportedShape(
                    f"exceptional surface has a positive-dimensional special locus in U{ch.index}")
            if p.kind == "quotient":
                kind = duval_of_surface_quotient(CyclicQuotient(p.stabilizer, p.tangent_weights))
                label = kind.label if kind.is_du_val else kind.chain.label()
                points.append(SurfacePoint(label, kind.chain, support, ch.index, "quotient",
                                           p.count))
                continue
            k = _du_val_hypersurface(poly) if r == 1 else 0
            if not k:
                raise UnsupportedShape(
                    f"singular point of E in U{ch.index} outside the A_k catalogue")
            chain = hj_expand(k, k - 1)
            points.append(SurfacePoint(f"A_{k - 1}", chain, support, ch.index, "hypersurface"))
    return points


def resolve_invariants(k2: Fraction, points, curve_data=None) -> SurfaceReport:
    """K^2, Euler number, b_2 and Picard number of E and its minimal resolution.

    Uses Noether's formula with chi(O) = 1, so E is assumed rational.
    """
    k2_res = Fraction(k2)
    curves = 0
    for p in points:
        k2_res += p.count * p.chain.k2_correction()
        curves += p.count * len(p.chain.entries)
    if k2_res.denominator != 1:
        raise Inconsistency(f"resolved K^2 = {k2_res} is not an integer")
    euler = 12 - int(k2_res)
    b2 = euler - 2
    return SurfaceReport(Fraction(k2), list(points), k2_res, euler, b2, b2 - curves,
                         curve_data, curves)


def _chain_end_correction(chain: HJChain) -> Fraction:
    if chain.entries != tuple(reversed(chain.entries)):
        raise UnsupportedShape("curve through a quotient point with an asymmetric chain")
    return chain.end_correction()


def x_section_curves(g: GermModel, w, section: Optional[str] = None) -> CurveSection:
    """The curves cut on E by the lighter of x = 0 and y = 0.

    Their number, pairwise intersection and self-intersection on E, and the
    self-intersection after the minimal resolution of E.
    """
    exc = _require_good_exceptional(g, w)
    a, b, c, d = w
    if section is None:
        section = "x" if a <= b else "y"
    s_idx, o_idx = (0, 1) if section == "x" else (1, 0)
    m = weighted_mult(g, w)
    zu = [(t[2], t[3]) for t in exc.lowest_part if t != XY]
    if not zu:
        raise UnsupportedShape("section contains no curve of E")
    pmin = min(p for p, _ in zu)
    qmin = min(q for _, q in zu)
    total = Fraction(w[s_idx] ** 2 * m, a * b * c * d)
    if len(zu) == 1 and (pmin == 0 or qmin == 0):
        # a pure power: one curve {s = 0, z = 0} (or u = 0) with multiplicity
        mult = pmin + qmin
        count, pair = 1, Fraction(0)
        on_curve = {o_idx, 3} if qmin == 0 else {o_idx, 2}
    elif pmin == 0 and qmin == 0:
        big_p = max(p for p, _ in zu)
        big_q = max(q for _, q in zu)
        count = gcd_all((big_p, big_q))
        mult = 1
        if XY not in exc.lowest_part:
            raise UnsupportedShape("section components meet at a point of unknown type")
        # distinct branches z^P' = l u^Q' meet only at the vertex of the other coordinate
        pair = Fraction((big_p // count) * (big_q // count), w[o_idx]) if count > 1 else Fraction(0)
        on_curve = {o_idx}
        if (big_p // count, big_q // count) != (1, 1):
            vertex_singular = w[o_idx] > 1
            if vertex_singular:
                raise UnsupportedShape("singular branches through a quotient point")
    else:
        raise UnsupportedShape("section of mixed monomial type")
    self_int = (total / mult ** 2 - count * (count - 1) * pair) / count
    correction = Fraction(0)
    for p in surface_singularities(g, w):
        support = set(p.support)
        if s_idx in support:
            continue
        if support <= on_curve:
            correction += p.count * _chain_end_correction(p.chain)
        elif {2, 3} <= support:
            raise UnsupportedShape("singular point of E off the coordinate vertices on the section")
    return CurveSection(count, mult, pair, self_int, self_int - correction, total, section)


def surface_report(g: GermModel, w, with_curves: bool = True) -> SurfaceReport:
    k2 = surface_k2(g, w)
    points = surface_singularities(g, w)
    curves = None
    if with_curves:
        try:
            curves = x_section_curves(g, w)
        except UnsupportedShape:
            curves = None
    return resolve_invariants(k2, points, curves)
