"""Weighted blow-ups of xy + f(z, u) = 0: charts, discrepancy, exceptional divisor."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InvalidInput
from .exact import gcd_all, is_squarefree
from .germ import GermModel, weighted_mult
from .quotient import CyclicQuotient

VARS = ("x", "y", "z", "u")
XY = (1, 1, 0, 0)


@dataclass(frozen=True, order=True)
class WeightVector:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        w = (self.a, self.b, self.c, self.d)
        if min(w) < 1:
            raise InvalidInput(f"weights must be positive, got {w}")
        if gcd(*w) != 1:
            raise InvalidInput(f"weights {tuple(self)} are not coprime")

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __getitem__(self, i):
        return (self.a, self.b, self.c, self.d)[i]

    def __len__(self):
        return 4

    def __str__(self):
        return ",".join(str(v) for v in self)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise InvalidInput(f"weights must be comma-separated integers: {text!r}") from None
        if len(parts) != 4:
            raise InvalidInput(f"expected 4 weights a,b,c,d: {text!r}")
        return cls(*parts)

    def swap_xy(self):
        return WeightVector(self.b, self.a, self.c, self.d)

    def swap_zu(self):
        return WeightVector(self.a, self.b, self.d, self.c)


def germ_monomials(g: GermModel) -> list[tuple[int, int, int, int]]:
    """Exponent 4-vectors of xy + f in the order x y first, then f."""
    return [XY] + [(0, 0, p, q) for p, q in g.terms]


def _weight(exps, w):
    return sum(e * wi for e, wi in zip(exps, w))


@dataclass(frozen=True)
class Chart:
    index: int
    terms: tuple[tuple[int, ...], ...]
    order: int
    raw_weights: tuple[int, ...]

    @property
    def group(self) -> CyclicQuotient:
        return CyclicQuotient(self.order, self.raw_weights)

    @property
    def nvars(self):
        return len(self.raw_weights)

    @property
    def equation_weight(self) -> int:
        return _weight(self.terms[0], self.raw_weights) % self.order

    @property
    def origin_in_exceptional(self) -> bool:
        """The chart origin sits on E exactly when it lies on the hypersurface."""
        return all(any(t) for t in self.terms)

    def is_semi_invariant(self) -> bool:
        e = self.equation_weight
        return all(_weight(t, self.raw_weights) % self.order == e for t in self.terms)

    def shape(self) -> str:
        """First matching of: linear, constant, mixed-quadric; otherwise other."""
        if any(sum(t) == 1 for t in self.terms):
            return "linear"
        if any(not any(t) for t in self.terms):
            return "constant"
        if any(t == XY for t in self.terms):
            return "mixed-quadric"
        return "other"

    def render(self) -> str:
        eq = " + ".join(render_monomial(t) for t in self.terms)
        ws = ",".join(str(v) for v in self.raw_weights)
        return f"U{self.index} = {{ {eq} }} / Z_{self.order}({ws})"


def render_monomial(exps, names=VARS) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
    return "".join(parts) or "1"


def make_charts(g: GermModel, w) -> list[Chart]:
    """The four affine charts of the weighted blow-up restricted to the germ.

    Chart i substitutes x_j -> x_j x_i^{w_j}, x_i -> x_i^{w_i} and divides by
    x_i^{weighted_mult}; the group is Z_{w_i} with weights -w_j and 1 at i.
    """
    w = tuple(w)
    m = weighted_mult(g, w)
    charts = []
    for i in range(4):
        terms = []
        for alpha in germ_monomials(g):
            beta = list(alpha)
            beta[i] = _weight(alpha, w) - m
            terms.append(tuple(beta))
        raw = tuple(1 if j == i else -w[j] for j in range(4))
        charts.append(Chart(i + 1, tuple(terms), w[i], raw))
    return charts


def pullback_exponents(chart: Chart, w, mult: int) -> list[tuple[Fraction, ...]]:
    """Chart terms rewritten on the torus of the original coordinates.

    With x_i = t^{w_i} the chart coordinate is t = x_i^{1/w_i} and
    y_j = x_j x_i^{-w_j/w_i}; exponents become rational.
    """
    i = chart.index - 1
    out = []
    for beta in chart.terms:
        vec = [Fraction(e) for e in beta]
        vec[i] = Fraction(0)
        shift = Fraction(beta[i], w[i])
        for j in range(4):
            if j != i:
                shift -= Fraction(beta[j] * w[j], w[i])
        vec[i] = shift
        out.append(tuple(vec))
    return out


def discrepancy(g: GermModel, w) -> int:
    return sum(w) - 1 - weighted_mult(g, w)


@dataclass(frozen=True)
class ExceptionalDivisor:
    ambient: tuple[int, int, int, int]
    lowest_part: tuple[tuple[int, int, int, int], ...]
    irreducible: bool
    reduced: bool

    @property
    def ok(self) -> bool:
        return self.irreducible and self.reduced

    def render(self) -> str:
        eq = " + ".join(render_monomial(t) for t in self.lowest_part)
        return f"{{ {eq} = 0 }} in P({','.join(map(str, self.ambient))})"


def exceptional_part(g: GermModel, w) -> ExceptionalDivisor:
    w = tuple(w)
    m = weighted_mult(g, w)
    lowest = tuple(t for t in germ_monomials(g) if _weight(t, w) == m)
    irreducible, reduced = lowest_part_type(lowest)
    return ExceptionalDivisor(w, lowest, irreducible, reduced)


def lowest_part_type(lowest: Sequence[tuple[int, ...]]) -> tuple[bool, bool]:
    """(irreducible, reduced) of a weighted-homogeneous lowest part."""
    zu = [(t[2], t[3]) for t in lowest if t != XY]
    if XY in lowest:
        # xy + g(z,u) with g != 0: a factor free of x divides both y and g
        return (bool(zu), True)
    return zu_form_type(zu)


def zu_form_type(zu: Sequence[tuple[int, int]]) -> tuple[bool, bool]:
    """(irreducible, reduced) of a weighted-homogeneous sum of z^p u^q, unit coefficients."""
    pmin = min(p for p, _ in zu)
    qmin = min(q for _, q in zu)
    h = sorted((p - pmin, q - qmin) for p, q in zu)
    monomial_reduced = pmin <= 1 and qmin <= 1
    if len(h) == 1:
        # a single monomial z^p u^q: one component iff only one variable occurs
        return ((pmin == 0) != (qmin == 0), monomial_reduced)
    big_p = max(p for p, _ in h)
    big_q = max(q for _, q in h)
    g = gcd_all((big_p, big_q))
    p_step = big_p // g
    # h = Phi(z^{P/g}, u^{Q/g}); Phi(t, 1) is a degree-g polynomial
    coeffs = [0] * (g + 1)
    for p, _ in h:
        coeffs[p // p_step] = 1
    squarefree = is_squarefree(coeffs)
    has_monomial = pmin + qmin > 0
    irreducible = g == 1 and not has_monomial
    return (irreducible, monomial_reduced and squarefree)


@dataclass(frozen=True)
class AmbientChart:
    index: int
    order: int
    weights: tuple[int, ...]

    def render(self) -> str:
        n = len(self.weights)
        return f"U{self.index} = C^{n} / Z_{self.order}({','.join(map(str, self.weights))})"

    def coordinate_change(self, m: int, names=None) -> str:
        n = len(self.weights)
        names = names or [f"{i + 1}" for i in range(n)]
        i = self.index - 1
        parts = []
        for j in range(n):
            if j == i:
                parts.append(f"x{names[j]} = y{names[j]}^({self.order}/{m})")
        for j in range(n):
            if j != i:
                a_j = -self.weights[j]
                parts.append(f"x{names[j]} = y{names[j]} y{names[i]}^({a_j}/{m})")
        return ", ".join(parts)


def quotient_blowup_charts(m: int, weights: Sequence[int]) -> list[AmbientChart]:
    """Charts of the weighted blow-up of C^n / Z_m(a_1, ..., a_n).

    The a_i are genuine positive integers, not residues: the blow-up depends
    on them and not only on their classes mod m.
    """
    if m < 1:
        raise InvalidInput("m must be positive")
    ws = [int(a) for a in weights]
    if len(ws) < 2 or min(ws) < 1:
        raise InvalidInput("need at least two positive weights")
    if gcd_all(ws) != 1:
        raise InvalidInput("weights must be coprime")
    return [AmbientChart(i + 1, ws[i], tuple(m if j == i else -ws[j] for j in range(len(ws))))
            for i in range(len(ws))]
