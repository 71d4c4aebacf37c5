"""Singular points of each chart and the terminality verdict of a weighted blow-up."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .blowup import VARS, XY, Chart, WeightVector, discrepancy, exceptional_part, make_charts
from .errors import UnsupportedShape
from .germ import GermModel
from .locus import analyze, poly_from_terms
from .quotient import CyclicQuotient, is_terminal_hyperquotient, is_terminal_quotient

SMOOTH = "smooth"
CA = "cA"
QUOTIENT = "quotient"
HYPERQUOTIENT = "hyperquotient"
POSITIVE_DIM = "positive-dimensional"


@dataclass(frozen=True)
class SingularPoint:
    chart_index: int
    kind: str
    terminal: bool
    quotient: Optional[CyclicQuotient] = None
    location: tuple[str, ...] = ()
    count: int = 1
    description: str = ""

    def to_dict(self):
        d = {"chart": self.chart_index, "kind": self.kind, "terminal": self.terminal,
             "location": list(self.location), "count": self.count}
        if self.quotient is not None:
            d["type"] = self.quotient.render(signed=True)
        if self.description:
            d["description"] = self.description
        return d

    def render(self) -> str:
        where = "origin" if not self.location else "{" + ",".join(self.location) + "} != 0"
        body = self.quotient.render(signed=True) if self.quotient is not None else self.description
        tail = f" x{self.count}" if self.count > 1 else ""
        verdict = "terminal" if self.terminal else "NOT terminal"
        return f"U{self.chart_index}: {self.kind} {body} at {where}{tail} ({verdict})".replace("  ", " ")


def _chart_names(chart: Chart):
    return [v + "'" for v in VARS[: chart.nvars]]


def chart_singularities(ch: Chart) -> list[SingularPoint]:
    """Singular points of one chart; points on E are reported in the lowest-index chart seeing them."""
    poly = poly_from_terms(ch.terms)
    group = ch.group
    r, weights = group.order, group.weights
    i = ch.index - 1
    found = analyze(poly, r, weights)
    names = _chart_names(ch)
    out = []
    has_locus = any(p.kind == "positive-dimensional" for p in found)
    for p in found:
        location = tuple(names[j] for j in p.stratum)
        if p.kind == "positive-dimensional":
            out.append(SingularPoint(ch.index, POSITIVE_DIM, False, location=location,
                                     description=p.description))
            continue
        # a point on E belongs to the chart of the smallest nonzero coordinate index
        if i in p.stratum or any(j < i for j in p.stratum):
            continue
        if p.kind == "quotient":
            q = CyclicQuotient(p.stabilizer, p.tangent_weights)
            out.append(SingularPoint(ch.index, QUOTIENT, is_terminal_quotient(q), q,
                                     location, p.count))
        elif p.kind == "singular":
            if XY in poly:
                if r == 1:
                    out.append(SingularPoint(ch.index, CA, True, location=location,
                                             description="x'y' + ..."))
                else:
                    q = CyclicQuotient(r, weights, ch.equation_weight)
                    terminal = is_terminal_hyperquotient(q, list(poly))
                    note = ""
                    if not terminal and is_terminal_hyperquotient(q):
                        note = ("weighted Reid-Tai inequality holds, but the equation has no "
                                "monomial of the minimal weight; a toric valuation has "
                                "discrepancy <= 0")
                    out.append(SingularPoint(ch.index, HYPERQUOTIENT, terminal, q,
                                             location, description=note))
            elif not has_locus:
                raise UnsupportedShape(
                    f"chart U{ch.index}: singular origin without an x'y' term: {ch.render()}")
    if not out:
        out.append(SingularPoint(ch.index, SMOOTH, True, description="smooth"))
    return out


@dataclass
class BlowupVerdict:
    weights: WeightVector
    discrepancy: int
    irreducible: bool
    reduced: bool
    terminal: bool
    singular_points: list = field(default_factory=list)
    rejection_reason: Optional[str] = None

    @property
    def exceptional_ok(self) -> bool:
        return self.irreducible and self.reduced

    @property
    def accepted(self) -> bool:
        return self.terminal and self.exceptional_ok and self.discrepancy >= 1

    def to_dict(self):
        return {
            "weights": list(self.weights),
            "discrepancy": self.discrepancy,
            "exceptional": {"irreducible": self.irreducible, "reduced": self.reduced},
            "terminal": self.terminal,
            "singular_points": [p.to_dict() for p in self.singular_points],
            "rejection_reason": self.rejection_reason,
        }


def blowup_verdict(g: GermModel, w, stop_at_failure: bool = False) -> BlowupVerdict:
    """Full verdict; with ``stop_at_failure`` charts after the first failing one are skipped."""
    w = w if isinstance(w, WeightVector) else WeightVector(*w)
    disc = discrepancy(g, w)
    exc = exceptional_part(g, w)
    verdict = BlowupVerdict(w, disc, exc.irreducible, exc.reduced, False)
    if disc <= 0:
        verdict.rejection_reason = "not an extraction with positive discrepancy"
        return verdict
    if not exc.irreducible:
        verdict.rejection_reason = "reducible exceptional divisor"
        return verdict
    if not exc.reduced:
        verdict.rejection_reason = "non-reduced exceptional divisor"
        return verdict
    reason = None
    for ch in make_charts(g, w):
        pts = chart_singularities(ch)
        verdict.singular_points.extend(p for p in pts if p.kind != SMOOTH)
        if reason is None:
            if any(p.kind == POSITIVE_DIM for p in pts):
                reason = f"positive-dimensional singular locus in chart {ch.index}"
            elif not all(p.terminal for p in pts):
                reason = f"non-terminal point in chart {ch.index}"
            if reason is not None and stop_at_failure:
                break
    verdict.terminal = reason is None
    verdict.rejection_reason = reason
    return verdict
