"""Hilbert-series numerators of a numerical semigroup.

Two numerators are used throughout::

    H(S; z) = p(z) / (1 - z) = k(z) / prod_i (1 - z**d_i)

``p`` comes from the gap structure below the conductor, ``k`` from the Apéry
set; :func:`consistency_check` ties them together.
"""

from __future__ import annotations

import math
from itertools import accumulate
from dataclasses import dataclass

from .errors import ConsistencyFailure, InexactDivision
from .polynomial import IntPolynomial, poly_div_exact
from .semigroup import SemigroupProfile, apery_set, profile


@dataclass(frozen=True)
class HilbertData:
    p_poly: IntPolynomial
    k_poly: IntPolynomial
    profile: SemigroupProfile
    truncated_series: IntPolynomial
    series_bound: int


def mul_one_minus_zpow(p, d):
    """``p * (1 - z**d)`` without a general product."""
    return p - IntPolynomial({e + d: c for e, c in p.terms})


def mul_geometric(p, d):
    """``p * (1 + z + ... + z**(d-1))`` as the prefix sum of ``p * (1 - z**d)``."""
    if p.is_zero():
        return p
    diff = p.to_dense() + [0] * d
    for i in range(len(diff) - 1, d - 1, -1):
        diff[i] -= diff[i - d]
    return IntPolynomial(list(accumulate(diff[:-1])))


def _times_den(p, S):
    for d in S.generators:
        p = mul_one_minus_zpow(p, d)
    return p


def denominator(S):
    """``prod_i (1 - z**d_i)``."""
    return _times_den(IntPolynomial({0: 1}), S)


def p_polynomial(S, limits=None):
    """``(1 - z) * sum_{s in S, s < g} z**s + z**c``, read off the gap list."""
    prof = profile(S, limits)
    gaps = set(prof.gaps)
    terms = {}
    for s in range(max(prof.frobenius, 0)):
        if s not in gaps:
            terms[s] = terms.get(s, 0) + 1
            terms[s + 1] = terms.get(s + 1, 0) - 1
    terms[prof.conductor] = terms.get(prof.conductor, 0) + 1
    return IntPolynomial(terms)


def k_polynomial(S, limits=None):
    """``sum_{w in Ap(S, d_1)} z**w * prod_{i >= 2} (1 - z**d_i)``."""
    ap = apery_set(S, limits)
    k = IntPolynomial({w: 1 for w in ap.elements})
    for d in S.generators[1:]:
        k = mul_one_minus_zpow(k, d)
    return k


def truncated_hilbert(S, bound):
    """``sum_{s in S, s <= bound} z**s`` by membership tests."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    ap = apery_set(S)
    w, mod = ap.elements, ap.modulus
    return IntPolynomial({s: 1 for s in range(bound + 1) if s >= w[s % mod]})


def rational_series(numerator, den, bound):
    """Coefficients 0..bound of ``numerator / den`` as a power series.

    Uses h_n = (a_n - sum_{t >= 1} den_t * h_{n-t}) / den_0 with ``den_0 = +-1``.
    """
    d0 = den.coeff(0)
    if d0 not in (1, -1):
        raise ValueError("denominator must have constant term +-1")
    tail = [(t, c) for t, c in den.terms if t > 0]
    h = [0] * (bound + 1)
    for n in range(bound + 1):
        acc = numerator.coeff(n)
        for t, c in tail:
            if t > n:
                break
            acc -= c * h[n - t]
        h[n] = acc * d0
    return IntPolynomial(h)


def _fail(S, relation):
    raise ConsistencyFailure(f"{S}: {relation}")


def consistency_check(S, limits=None):
    """Compute ``p`` and ``k`` independently and verify every structural relation.

    Raises :class:`ConsistencyFailure` naming the first violated relation.
    """
    prof = profile(S, limits)
    p = p_polynomial(S, limits)
    k = k_polynomial(S, limits)
    m = S.m

    if mul_one_minus_zpow(k, 1) != _times_den(p, S):
        _fail(S, "k*(1-z) != p*prod(1-z^d_i)")
    if p(1) != 1:
        _fail(S, f"p(1) = {p(1)}, expected 1")
    if p.degree() != prof.conductor:
        _fail(S, f"deg p = {p.degree()}, expected conductor {prof.conductor}")
    if k.degree() != prof.frobenius + sum(S.generators):
        _fail(S, f"deg k = {k.degree()}, expected g + sum(d_i) = {prof.frobenius + sum(S.generators)}")
    if m >= 2 and k(1) != 0:
        _fail(S, f"k(1) = {k(1)}, expected 0")

    cofactor = k
    try:
        for _ in range(m - 1):
            cofactor = poly_div_exact(cofactor, IntPolynomial({0: 1, 1: -1}))
    except InexactDivision:
        _fail(S, f"(1-z)^{m - 1} does not divide k")
    if cofactor(1) != math.prod(S.generators):
        _fail(S, f"(k/(1-z)^(m-1))(1) = {cofactor(1)}, expected prod(d_i)")

    rebuilt = p
    for _ in range(m - 1):
        rebuilt = mul_one_minus_zpow(rebuilt, 1)
    for d in S.generators:
        rebuilt = mul_geometric(rebuilt, d)
    if rebuilt != k:
        _fail(S, "k != prod(1+...+z^(d_i-1)) * (1-z)^(m-1) * p")

    bound = prof.conductor + sum(S.generators)
    series = truncated_hilbert(S, bound)
    return HilbertData(p_poly=p, k_poly=k, profile=prof, truncated_series=series, series_bound=bound)

