"""Deliberately naive reference computations for cross-checking.

Nothing here touches the Apéry set: membership comes from a forward
dynamic-programming sweep, the Frobenius number from a self-certifying scan,
and the k-polynomial from multiplying the enumerated series by the
denominator.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .errors import ConsistencyFailure, ResourceLimit
from .limits import resolve


@dataclass(frozen=True)
class EnumeratedSemigroup:
    bound: int
    membership: bytes

    def __contains__(self, x):
        return 0 <= x <= self.bound and bool(self.membership[x])

    @property
    def members(self):
        return [x for x in range(self.bound + 1) if self.membership[x]]


def enumerate(S, bound, limits=None):
    """Membership on ``[0, bound]``: ``x`` is in iff some ``x - d_i`` is."""
    limits = resolve(limits)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > limits.max_enumerate:
        raise ResourceLimit(f"enumeration bound {bound} exceeds cap {limits.max_enumerate}")
    return EnumeratedSemigroup(bound, bytes(_backend.enumerate_members(S.generators, bound)))


def oracle_gaps(S, bound, limits=None):
    table = enumerate(S, bound, limits)
    return [x for x in range(bound + 1) if not table.membership[x]]


def _certified_frobenius(table, run):
    last_gap = -1
    for x in range(table.bound, -1, -1):
        if not table.membership[x]:
            last_gap = x
            break
    # a run of d_1 consecutive members right after the last gap
    if last_gap + run > table.bound:
        return None
    return last_gap


def oracle_frobenius(S, limits=None):
    """Largest gap, certified by ``d_1`` consecutive members after it."""
    d1, dm = S.generators[0], S.generators[-1]
    bound = max(d1 * dm, 1)
    while True:
        g = _certified_frobenius(enumerate(S, bound, limits), d1)
        if g is not None:
            return g
        bound *= 2


def oracle_k_terms(S, limits=None):
    """k(S; z) coefficients from the enumerated series times prod (1 - z**d_i)."""
    g = oracle_frobenius(S, limits)
    top = g + sum(S.generators)
    bound = top + S.generators[-1]
    series = list(enumerate(S, bound, limits).membership)
    for d in S.generators:
        # series *= (1 - z**d), truncated at bound
        for x in range(bound, d - 1, -1):
            series[x] -= series[x - d]
    tail = [x for x in range(top + 1, bound + 1) if series[x]]
    if tail:
        raise ConsistencyFailure(f"{S}: truncated product has nonzero terms above degree {top}: {tail[:5]}")
    return [(j, c) for j, c in zip(range(top + 1), series) if c]


def oracle_moment(S, r, limits=None):
    return sum(c * j**r for j, c in oracle_k_terms(S, limits))
