"""Enumerate weight vectors and collect the terminal weighted blow-ups."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Optional

from .blowup import WeightVector, lowest_part_type
from .errors import InvalidInput
from .germ import GermModel, deg_min
from .terminality import BlowupVerdict, blowup_verdict


def _raw_weights(g: GermModel, bound: int):
    if bound < 1:
        raise InvalidInput("bound must be >= 1")
    symmetric = g.is_zu_symmetric
    rng = range(1, bound + 1)
    for w in product(rng, repeat=4):
        if symmetric and w[2] > w[3]:
            continue
        if gcd(*w) == 1:
            yield w


def enumerate_weights(g: GermModel, bound: int) -> Iterator[WeightVector]:
    """Every coprime (a, b, c, d) in [1, bound]^4; c <= d only when f is z<->u symmetric."""
    for w in _raw_weights(g, bound):
        yield WeightVector(*w)


def orbit(g: GermModel, w: WeightVector) -> list[WeightVector]:
    """Images of w under x<->y and, for symmetric f, z<->u."""
    images = {w, w.swap_xy()}
    if g.is_zu_symmetric:
        images |= {v.swap_zu() for v in images}
    return sorted(images)


@lru_cache(maxsize=4096)
def _lowest_type(lowest) -> tuple[bool, bool]:
    return lowest_part_type(lowest)


def _quick_reason(terms, w) -> Optional[str]:
    """Cheap exceptional-divisor gate; None means the full verdict is needed."""
    a, b, c, d = w
    fw = [p * c + q * d for p, q in terms]
    m = min(a + b, min(fw))
    if a + b == m:
        if m not in fw:
            return "reducible exceptional divisor"
        return None
    lowest = tuple((0, 0, p, q) for (p, q), wt in zip(terms, fw) if wt == m)
    irreducible, reduced = _lowest_type(lowest)
    if not irreducible:
        return "reducible exceptional divisor"
    if not reduced:
        return "non-reduced exceptional divisor"
    return None


@dataclass
class ClassificationReport:
    germ: GermModel
    bound: int
    accepted: list = field(default_factory=list)  # (WeightVector, discrepancy)
    rejected_summary: dict = field(default_factory=dict)
    orbits: list = field(default_factory=list)

    @property
    def discrepancy_one_count(self) -> int:
        return sum(1 for _, disc in self.accepted if disc == 1)

    @property
    def isomorphism_classes(self):
        return self.orbits

    def filtered(self, min_discrepancy=None, max_discrepancy=None) -> "ClassificationReport":
        def keep(disc):
            return ((min_discrepancy is None or disc >= min_discrepancy)
                    and (max_discrepancy is None or disc <= max_discrepancy))
        accepted = [(w, disc) for w, disc in self.accepted if keep(disc)]
        kept = {w for w, _ in accepted}
        orbits = [o for o in self.orbits if any(w in kept for w in o)]
        return ClassificationReport(self.germ, self.bound, accepted,
                                    dict(self.rejected_summary), orbits)

    def to_dict(self):
        return {
            "germ": self.germ.render(),
            "bound": self.bound,
            "accepted": [{"weights": list(w), "discrepancy": disc} for w, disc in self.accepted],
            "discrepancy_one_count": self.discrepancy_one_count,
            "rejected_summary": dict(sorted(self.rejected_summary.items())),
            "orbits": [[list(w) for w in o] for o in self.orbits],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_tsv(self) -> str:
        lines = ["a\tb\tc\td\tdiscrepancy"]
        lines += ["\t".join(str(v) for v in (*w, disc)) for w, disc in self.accepted]
        return "\n".join(lines) + "\n"


def _scan(g: GermModel, ws) -> tuple[list, Counter]:
    accepted, rejected = [], Counter()
    for w in ws:
        reason = _quick_reason(g.terms, w)
        if reason is None:
            w = WeightVector(*w)
            verdict: BlowupVerdict = blowup_verdict(g, w, stop_at_failure=True)
            if verdict.accepted:
                accepted.append((w, verdict.discrepancy))
                continue
            reason = verdict.rejection_reason
        rejected[reason] += 1
    return accepted, rejected


def classify_extractions(g: GermModel, bound: int = 30,
                         workers: Optional[int] = None) -> ClassificationReport:
    """All accepted weight vectors up to ``bound``, in enumeration order.

    With ``workers > 1`` the vectors are split by their first entry and
    checked in a process pool; the merge keeps enumeration order.
    """
    report = ClassificationReport(g, bound)
    rejected: Counter = Counter()
    if workers and workers > 1:
        chunks = [[] for _ in range(bound)]
        for w in _raw_weights(g, bound):
            chunks[w[0] - 1].append(w)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan, [g] * bound, chunks))
    else:
        results = [_scan(g, _raw_weights(g, bound))]
    for accepted, counts in results:
        report.accepted.extend(accepted)
        rejected.update(counts)
    report.rejected_summary = dict(rejected)
    seen = set()
    for w, _ in report.accepted:
        o = tuple(orbit(g, w))
        if o not in seen:
            seen.add(o)
            report.orbits.append(list(o))
    return report


def count_discrepancy_one(g: GermModel, bound: int = 30,
                          report: Optional[ClassificationReport] = None) -> int:
    """Number of accepted weight vectors with discrepancy 1, orbits included.

    A precomputed ``report`` for the same germ and bound may be passed in.
    """
    if bound < deg_min(g):
        raise InvalidInput(f"bound {bound} is below deg_min = {deg_min(g)}")
    if report is None:
        report = classify_extractions(g, bound)
    vectors = set()
    for w, disc in report.accepted:
        if disc == 1:
            vectors.update(orbit(g, w) if g.is_zu_symmetric else [w])
    return len(vectors)
