"""The base germ xy + f(z, u) = 0 with unit coefficients."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GermParseError, InvalidInput


def _term_key(term):
    # z-heavy monomials first: "z^3 + u^4", "z^n + u^n"
    return (-term[0], term[1])


@dataclass(frozen=True)
class GermModel:
    """f is stored as its exponent pairs (p, q) for z^p u^q."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        terms = tuple(sorted((tuple(int(e) for e in t) for t in self.terms), key=_term_key))
        if not terms:
            raise InvalidInput("f must have at least one monomial")
        if len(set(terms)) != len(terms):
            raise InvalidInput("duplicate monomials in f")
        for p, q in terms:
            if p < 0 or q < 0 or p + q < 2:
                raise InvalidInput(f"monomial z^{p} u^{q} has degree < 2")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_terms(cls, terms) -> "GermModel":
        return cls(tuple(terms))

    @property
    def is_zu_symmetric(self) -> bool:
        return set(self.terms) == {(q, p) for p, q in self.terms}

    def swap_zu(self) -> "GermModel":
        return GermModel(tuple((q, p) for p, q in self.terms))

    def render(self) -> str:
        return "xy + " + " + ".join(_monomial(p, q) for p, q in self.terms)

    def __str__(self):
        return self.render()


def _power(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _monomial(p, q):
    z, u = _power("z", p), _power("u", q)
    return f"{z} {u}" if z and u else z or u


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.pos = start
            self.fail("exponent must be positive")
        return value

    def fail(self, message):
        raise GermParseError(message, self.text, self.pos)


def parse_germ(text: str) -> GermModel:
    """Parse ``"xy + z^3 + u^4"``-style input; whitespace is ignored."""
    s = _Scanner(text)
    s.expect("x")
    s.expect("y")
    terms = []
    seen_at = {}
    if s.peek() != "+":
        s.fail("expected '+' followed by at least one monomial of f")
    while s.peek() == "+":
        s.pos += 1
        s.skip()
        start = s.pos
        exps = {"z": 0, "u": 0}
        while s.peek() in ("z", "u"):
            var = s.peek()
            if exps[var] or (var == "z" and exps["u"]):
                s.fail(f"variable {var!r} repeated or out of order")
            s.pos += 1
            exps[var] = 1
            if s.peek() == "^":
                s.pos += 1
                exps[var] = s.integer()
        term = (exps["z"], exps["u"])
        if term == (0, 0):
            s.fail("expected a monomial in z and u")
        if term[0] + term[1] < 2:
            raise GermParseError("monomial of degree < 2 (f must lie in m^2)", text, start)
        if term in seen_at:
            raise GermParseError("duplicate monomial", text, start)
        seen_at[term] = start
        terms.append(term)
    if s.peek():
        s.fail("unexpected trailing input")
    return GermModel(tuple(terms))


def deg_min(g: GermModel) -> int:
    return min(p + q for p, q in g.terms)


def weighted_mult(g: GermModel, w) -> int:
    """Weight of the lowest-weight part of xy + f under weights (a, b, c, d)."""
    a, b, c, d = w
    return min(a + b, min(p * c + q * d for p, q in g.terms))
