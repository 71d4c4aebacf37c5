"""Singular and non-free points of {F = 0} / Z_r for sparse unit-coefficient F.

C^n is cut into torus strata T_S = {x_j != 0 iff j in S}.  On each stratum
the stabilizer is Z_s with s = gcd(r, w_j : j in S) and F restricts to the
monomials supported on S.  Everything below is decided from exponent data:

* a restriction with one monomial has no zeros on T_S; with two or more
  distinct monomials its zero set has pure dimension |S| - 1;
* a point of T_S is singular on {F = 0} iff the values y_k = c_k x^{v_k}
  lie in the kernel of [1; v_k^T] (Euler relations); when the v_k are
  affinely independent that kernel is zero and the stratum is smooth.

Configurations not settled by these rules raise UnsupportedShape.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Callable, Iterable, Optional

from .errors import UnsupportedShape
from .exact import is_squarefree, prime_factors, rank

Poly = dict  # exponent tuple -> integer coefficient


def poly_from_terms(terms: Iterable[tuple[int, ...]]) -> Poly:
    out: Poly = {}
    for t in terms:
        out[tuple(t)] = out.get(tuple(t), 0) + 1
    return out


def _mask(exps) -> int:
    m = 0
    for j, v in enumerate(exps):
        if v:
            m |= 1 << j
    return m


def restrict(poly: Poly, support) -> Poly:
    """Monomials whose variables all lie in ``support`` (others set to zero)."""
    if isinstance(support, int):
        allowed = support
    else:
        allowed = 0
        for j in support:
            allowed |= 1 << j
    return {e: c for e, c in poly.items() if not _mask(e) & ~allowed}


def partial(poly: Poly, j: int) -> Poly:
    out: Poly = {}
    for e, c in poly.items():
        if e[j]:
            f = list(e)
            f[j] -= 1
            out[tuple(f)] = out.get(tuple(f), 0) + c * e[j]
    return out


@lru_cache(maxsize=65536)
def _affinely_independent(vectors) -> bool:
    return rank([(1,) + v for v in vectors]) == len(vectors)


def affinely_independent(vectors) -> bool:
    return _affinely_independent(tuple(sorted(tuple(v) for v in vectors)))


@dataclass
class LocalPoint:
    """One family of special points found on a stratum."""

    stratum: tuple[int, ...]
    kind: str  # "quotient" | "singular" | "positive-dimensional"
    stabilizer: int = 1
    tangent_weights: tuple[int, ...] = ()
    count: int = 1
    dimension: int = 0
    description: str = ""
    removed_index: Optional[int] = None
    notes: list = field(default_factory=list)


def _singular_dimension(poly, fs, support, n):
    """Dimension of Sing{F=0} on T_S (None if empty)."""
    k = len(fs)
    if k >= 2:
        vecs = [tuple(e[j] for j in support) for e in fs]
        if affinely_independent(vecs):
            return None
        phi = _collinear_profile(fs, support)
        if phi is not None and is_squarefree(phi):
            return None
        if any(len(restrict(partial(poly, j), support)) == 1 for j in range(n)):
            return None  # some partial is a unit on T_S
        raise UnsupportedShape(
            f"affinely dependent restriction on stratum {support}: {sorted(fs)}")
    # k == 0: the whole stratum lies on F = 0
    nonzero = []
    for j in range(n):
        if j in support:
            continue
        pj = restrict(partial(poly, j), support)
        if len(pj) == 1:
            return None
        if pj:
            nonzero.append(pj)
    if not nonzero:
        return len(support)
    if len(nonzero) == 1:
        return len(support) - 1
    raise UnsupportedShape(f"several partials to solve on stratum {support}")


def _collinear_profile(fs, support):
    """Coefficients of Phi when F|_S = x^v0 Phi(x^delta) for one primitive delta, else None.

    On the torus the zero set is then {x^delta = root of Phi}, smooth exactly
    when Phi has no repeated root.
    """
    vecs = [(tuple(e[j] for j in support), c) for e, c in fs.items()]
    v0 = vecs[0][0]
    diffs = [tuple(a - b for a, b in zip(v, v0)) for v, _ in vecs]
    step = 0
    for d in diffs:
        step = gcd(step, *d)
    ref = next(d for d in diffs if any(d))
    ref = tuple(x // gcd(*ref) for x in ref)
    k = next(i for i, x in enumerate(ref) if x)
    ts = []
    for d in diffs:
        t, rem = divmod(d[k], ref[k])
        if rem or tuple(t * x for x in ref) != d:
            return None
        ts.append(t)
    low = min(ts)
    coeffs = [0] * (max(ts) - low + 1)
    for t, (_, c) in zip(ts, vecs):
        coeffs[t - low] += c
    return coeffs


def _tangent_weights(poly, support, weights, s, e):
    n = len(weights)
    candidates = [j for j in range(n) if (weights[j] - e) % s == 0]
    if not candidates:
        raise UnsupportedShape("no coordinate carries the equation weight")
    preferred = [j for j in candidates if restrict(partial(poly, j), support)]
    j = (preferred or candidates)[0]
    return j, tuple(weights[i] % s for i in range(n) if i != j)


def analyze(poly: Poly, order: int, weights, keep: Optional[Callable] = None) -> list[LocalPoint]:
    """Special points of {poly = 0} / Z_order(weights), one record per stratum family."""
    n = len(weights)
    e = None
    if poly:
        first = next(iter(poly))
        e = sum(a * w for a, w in zip(first, weights)) % order
    out = []
    masked = [(e, c, _mask(e)) for e, c in poly.items()]
    for size in range(n + 1):
        for support in combinations(range(n), size):
            if keep is not None and not keep(support):
                continue
            allowed = 0
            for j in support:
                allowed |= 1 << j
            fs = {e: c for e, c, m in masked if not m & ~allowed}
            if len(fs) == 1:
                continue
            pts_dim = size if not fs else size - 1
            sing = _singular_dimension(poly, fs, support, n)
            if sing is not None:
                if sing >= 1:
                    out.append(LocalPoint(support, "positive-dimensional", dimension=sing,
                                          description=f"singular locus of dimension {sing}"))
                    continue
                if size:
                    raise UnsupportedShape(f"isolated singular points off the origin on {support}")
                s = order
                out.append(LocalPoint(support, "singular", stabilizer=s))
                continue
            s = order
            for j in support:
                s = gcd(s, weights[j])
            if s == 1:
                continue
            removed, tangent = _tangent_weights(poly, support, weights, s, e)
            fixed = max((sum(1 for t in tangent if t % p == 0) for p in prime_factors(s)),
                        default=0)
            if fixed >= n - 2:
                raise UnsupportedShape(
                    f"stabilizer Z_{s} acts as a reflection on stratum {support}")
            if fixed or pts_dim:
                out.append(LocalPoint(support, "positive-dimensional", stabilizer=s,
                                      tangent_weights=tangent, removed_index=removed,
                                      dimension=max(pts_dim, 1),
                                      description=f"curve with nontrivial stabilizer Z_{s}"))
                continue
            out.append(LocalPoint(support, "quotient", stabilizer=s, tangent_weights=tangent,
                                  count=_orbit_count(fs, support, order, s),
                                  removed_index=removed))
    return out


def _orbit_count(fs, support, order, s):
    if not support:
        return 1
    (j,) = support
    exps = sorted(e[j] for e in fs)
    profile = [0] * (exps[-1] - exps[0] + 1)
    for e, c in fs.items():
        profile[e[j] - exps[0]] += c
    if not is_squarefree(profile):
        raise UnsupportedShape("univariate restriction has a repeated root")
    roots = exps[-1] - exps[0]
    orbit = order // s
    if roots % orbit:
        raise UnsupportedShape("root set is not a union of free orbits")
    return roots // orbit
