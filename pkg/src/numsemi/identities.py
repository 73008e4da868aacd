"""Exact verification of the syzygy-degree moment identities.

The signed degree sequence ``c_j = sum_i (-1)**i * beta_{i,j}`` is exactly the
coefficient list of the k-polynomial, so every check below runs either from
``k(S; z)`` or from a user-supplied Betti table collapsed to those sums.

Real identities: ``sum_j c_j j**r`` vanishes for ``0 <= r <= m-2`` and equals
``(-1)**(m-1) (m-1)! prod d_i`` at ``r = m-1``.

Cyclotomic identities: for ``2 <= q <= d_m`` with ``w_q > 0`` generators
divisible by ``q`` and ``gcd(n, q) = 1``, ``sum_j c_j j**r zeta**(n j) = 0`` for
``0 <= r < w_q`` where ``zeta`` is a primitive q-th root of unity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BettiMismatch, IdentityViolation, InvalidQ, NotCoprime, ZeroWq
from .hilbert import k_polynomial
from .polynomial import CyclotomicElement, cyclotomic_sum


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers as ``(i, j, beta_ij)`` triples."""

    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        entries = tuple(sorted(tuple(e) for e in self.entries))
        seen = set()
        for i, j, b in entries:
            if i < 0 or j < 0 or b < 1:
                raise BettiMismatch(f"malformed Betti entry {(i, j, b)}")
            if (i, j) in seen:
                raise BettiMismatch(f"duplicate Betti entry at (i, j) = {(i, j)}")
            seen.add((i, j))
        if (0, 0, 1) not in entries:
            raise BettiMismatch("beta_{0,0} = 1 is required")
        object.__setattr__(self, "entries", entries)

    @property
    def max_index(self):
        return max(i for i, _, _ in self.entries)


@dataclass(frozen=True)
class SignedDegreeSequence:
    terms: tuple[tuple[int, int], ...]

    def as_dict(self):
        return dict(self.terms)


@dataclass(frozen=True)
class IdentityCheck:
    kind: str  # "real" or "cyclotomic"
    r: int
    q: int | None
    n: int | None
    expected: int | tuple[int, ...]
    computed: int | tuple[int, ...]
    passed: bool

    def to_dict(self):
        def fmt(v):
            return str(v) if isinstance(v, int) else [str(c) for c in v]

        return {
            "kind": self.kind,
            "r": self.r,
            "q": self.q,
            "n": self.n,
            "expected": fmt(self.expected),
            "computed": fmt(self.computed),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class IdentityReport:
    generators: tuple[int, ...]
    checks: tuple[IdentityCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __len__(self):
        return len(self.checks)

    def __add__(self, other):
        return IdentityReport(self.generators, _sorted_checks(self.checks + other.checks))


def _sorted_checks(checks):
    order = {"real": 0, "cyclotomic": 1}
    return tuple(sorted(checks, key=lambda c: (order[c.kind], c.q or 0, c.n or 0, c.r)))


def collapse(table):
    """Signed sums ``sum_i (-1)**i beta_{i,j}`` per degree, zeros dropped."""
    acc = {}
    for i, j, b in table.entries:
        acc[j] = acc.get(j, 0) + (-b if i % 2 else b)
    return SignedDegreeSequence(tuple((j, c) for j, c in sorted(acc.items()) if c))


def signed_sequence(source, table=None, limits=None):
    """Degree-indexed signed Betti sums from a semigroup, a Betti table, or both.

    With both, the collapsed table must match ``k(S; z)`` at every degree.
    """
    if isinstance(source, BettiTable):
        return collapse(source)
    seq = SignedDegreeSequence(tuple(k_polynomial(source, limits).terms))
    if table is not None:
        if table.max_index > source.m - 1:
            raise BettiMismatch(f"homological index {table.max_index} exceeds m - 1 = {source.m - 1}")
        other = collapse(table)
        if other != seq:
            a, b = seq.as_dict(), other.as_dict()
            bad = sorted(j for j in set(a) | set(b) if a.get(j, 0) != b.get(j, 0))
            raise BettiMismatch(
                f"Betti table disagrees with k(S;z) at degree {bad[0]}: "
                f"table {b.get(bad[0], 0)}, k-polynomial {a.get(bad[0], 0)}"
            )
    return seq


def moment(seq, r):
    """``sum_j c_j * j**r`` (``0**0 == 1``)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return sum(c * j**r for j, c in seq.terms)


def stirling2(r, k):
    """Stirling numbers of the second kind (exact)."""
    return sum((-1) ** (k - i) * math.comb(k, i) * i**r for i in range(k + 1)) // math.factorial(k)


def moment_from_derivatives(k_poly, r):
    """The same moment rebuilt from ``k^{(t)}(1)``, ``t <= r``.

    ``j**r = sum_t S(r, t) * j(j-1)...(j-t+1)`` and the falling-factorial sums
    are the derivatives of ``k`` at 1.
    """
    return sum(stirling2(r, t) * k_poly.derivative(t)(1) for t in range(r + 1))


def theorem1_value(S):
    m = S.m
    return (-1) ** (m - 1) * math.factorial(m - 1) * math.prod(S.generators)


def _seq_for(S, seq, limits):
    return signed_sequence(S, limits=limits) if seq is None else seq


def _raise_on_failure(S, seq, report):
    for c in report.checks:
        if not c.passed:
            raise IdentityViolation(
                f"{S}: {c.kind} identity failed at r={c.r}, q={c.q}, n={c.n}",
                dump={
                    "semigroup": list(S.generators),
                    "sequence": [[j, str(cj)] for j, cj in seq.terms],
                    **c.to_dict(),
                },
            )


def verify_theorem1(S, seq=None, strict=True, limits=None):
    """Check the vanishing moments ``r <= m-2`` and the value at ``r = m-1``."""
    seq = _seq_for(S, seq, limits)
    m = S.m
    checks = []
    for r in range(m):
        expected = 0 if r < m - 1 else theorem1_value(S)
        got = moment(seq, r)
        checks.append(IdentityCheck("real", r, None, None, expected, got, got == expected))
    report = IdentityReport(S.generators, tuple(checks))
    if strict:
        _raise_on_failure(S, seq, report)
    return report


def w_count(S, q):
    if q < 1:
        raise ValueError("q must be positive")
    return sum(1 for d in S.generators if d % q == 0)


def _check_q(S, q, n=None):
    if q == 1:
        raise InvalidQ("q = 1 is excluded: zeta = 1 contradicts the nonzero real moment at r = m-1")
    if not 2 <= q <= S.largest:
        raise InvalidQ(f"q must satisfy 2 <= q <= d_m = {S.largest}, got {q}")
    if n is not None and math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd(n, q) = gcd({n}, {q}) = {math.gcd(n, q)}, expected 1")
    w = w_count(S, q)
    if w == 0:
        raise ZeroWq(f"w_q = 0 for q = {q}: no generator is divisible by q")
    return w


def _cyclotomic_checks(seq, q, ns, w):
    checks = []
    zero = (0,) * len(CyclotomicElement.zero(q).coeffs)
    for r in range(w):
        # one pass over the sequence per (q, r); n only permutes residues
        buckets = [0] * q
        for j, c in seq.terms:
            buckets[j % q] += c * j**r
        for n in ns:
            elem = cyclotomic_sum(q, ((n * t, b) for t, b in enumerate(buckets) if b))
            checks.append(IdentityCheck("cyclotomic", r, q, n, zero, elem.coeffs, elem.is_zero()))
    return checks


def cyclotomic_moment(seq, r, q, n):
    """``sum_j c_j j**r zeta**(n j)`` as an exact element of Z[zeta_q]."""
    return cyclotomic_sum(q, ((n * j, c * j**r) for j, c in seq.terms))


def verify_theorem2(S, q, n, seq=None, strict=True, limits=None):
    """Cyclotomic identities at one ``(q, n)`` for ``r = 0 .. w_q - 1``."""
    w = _check_q(S, q, n)
    seq = _seq_for(S, seq, limits)
    report = IdentityReport(S.generators, _sorted_checks(_cyclotomic_checks(seq, q, [n % q], w)))
    if strict:
        _raise_on_failure(S, seq, report)
    return report


def admissible_moduli(S):
    return [q for q in range(2, S.largest + 1) if w_count(S, q) > 0]


def verify_theorem2_all(S, seq=None, strict=True, limits=None):
    """Every admissible ``q`` and every ``1 <= n < q`` coprime to ``q``."""
    seq = _seq_for(S, seq, limits)
    checks = []
    for q in admissible_moduli(S):
        ns = [n for n in range(1, q) if math.gcd(n, q) == 1]
        checks.extend(_cyclotomic_checks(seq, q, ns, w_count(S, q)))
    report = IdentityReport(S.generators, _sorted_checks(checks))
    if strict:
        _raise_on_failure(S, seq, report)
    return report
