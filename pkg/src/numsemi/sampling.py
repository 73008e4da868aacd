"""Seeded random minimal semigroups for sweeps and property suites."""

import math
import random

from .errors import InputError
from .semigroup import NumericalSemigroup, minimize


def random_semigroup(rng, m_range=(2, 6), dmax=300):
    """Rejection sampling: draw m distinct generators in [2, dmax], minimize,
    retry on gcd != 1 or when minimization leaves fewer than ``m_range[0]``."""
    m_lo, m_hi = m_range
    if m_lo < 1 or m_hi < m_lo:
        raise InputError(f"bad m range {m_lo}..{m_hi}")
    if m_lo >= 2 and dmax < 3:
        raise InputError(f"no minimal semigroup with m >= 2 has generators <= {dmax}")
    pool = range(2 if m_lo >= 2 else 1, dmax + 1)
    m_hi = min(m_hi, len(pool))
    for _ in range(100_000):
        m = rng.randint(m_lo, m_hi)
        raw = rng.sample(pool, m)
        if math.gcd(*raw) != 1:
            continue
        kept, _ = minimize(raw)
        if len(kept) >= m_lo:
            return NumericalSemigroup(kept)
    raise InputError(f"could not sample a semigroup with m in {m_range}, dmax {dmax}")


def random_semigroups(count, seed, m_range=(2, 6), dmax=300):
    rng = random.Random(seed)
    return [random_semigroup(rng, m_range, dmax) for _ in range(count)]
