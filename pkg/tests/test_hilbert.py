import math

import pytest
from hypothesis import given, settings

from numsemi import (
    ConsistencyFailure,
    IntPolynomial,
    consistency_check,
    k_polynomial,
    new_semigroup,
    p_polynomial,
    poly_div_exact,
    profile,
    rational_series,
    truncated_hilbert,
)
from numsemi import hilbert
from numsemi.hilbert import denominator, mul_geometric, mul_one_minus_zpow

from conftest import brute_members
from test_semigroup import semigroups


def P(*coeffs):
    return IntPolynomial(list(coeffs))


def test_p_polynomial_fixtures():
    assert p_polynomial(new_semigroup([2, 3])) == P(1, -1, 1)
    assert p_polynomial(new_semigroup([1])) == P(1)
    # members of <4,7,9> below g = 10: {0, 4, 7, 8, 9}
    below = sorted(x for x in brute_members((4, 7, 9), 9))
    expected = IntPolynomial({11: 1})
    for s in below:
        expected = expected + P(1, -1) * IntPolynomial({s: 1})
    p = p_polynomial(new_semigroup([4, 7, 9]))
    assert p == expected
    assert p.degree() == 11
    assert p(1) == 1


def test_k_polynomial_fixtures():
    assert k_polynomial(new_semigroup([4, 7, 9])) == IntPolynomial({0: 1, 16: -1, 18: -1, 21: -1, 25: 1, 30: 1})
    # (1 - z + z^2)(1 - z^2)(1 - z^3) / (1 - z) by exact division
    k23 = poly_div_exact(P(1, -1, 1) * P(1, 0, -1) * P(1, 0, 0, -1), P(1, -1))
    assert k23 == IntPolynomial({0: 1, 6: -1})
    assert k_polynomial(new_semigroup([2, 3])) == k23
    assert k_polynomial(new_semigroup([1])) == P(1)


def test_truncated_hilbert_fixtures():
    assert truncated_hilbert(new_semigroup([2, 3]), 5) == P(1, 0, 1, 1, 1, 1)
    assert truncated_hilbert(new_semigroup([5, 8]), 0) == P(1)
    expected = IntPolynomial({s: 1 for s in brute_members((4, 7, 9), 12)})
    assert truncated_hilbert(new_semigroup([4, 7, 9]), 12) == expected
    assert expected == IntPolynomial({0: 1, 4: 1, 7: 1, 8: 1, 9: 1, 11: 1, 12: 1})
    with pytest.raises(ValueError):
        truncated_hilbert(new_semigroup([2, 3]), -1)


@pytest.mark.parametrize(
    "gens, deg_p, deg_k",
    [((2, 3), 2, 6), ((4, 7, 9), 11, 30), ((1,), 0, 0)],
)
def test_consistency_fixtures(gens, deg_p, deg_k):
    data = consistency_check(new_semigroup(gens))
    assert data.p_poly.degree() == deg_p
    assert data.k_poly.degree() == deg_k
    assert data.p_poly(1) == 1


def test_consistency_detects_corruption(monkeypatch):
    S = new_semigroup([4, 7, 9])
    real = hilbert.k_polynomial
    monkeypatch.setattr(hilbert, "k_polynomial", lambda S, limits=None: real(S) + IntPolynomial({3: 1}))
    with pytest.raises(ConsistencyFailure, match="k\\*\\(1-z\\)"):
        consistency_check(S)


def test_rational_series_geometric():
    assert rational_series(P(1), P(1, -1), 4) == P(1, 1, 1, 1, 1)
    assert rational_series(P(1), P(1, 1), 3) == P(1, -1, 1, -1)
    with pytest.raises(ValueError):
        rational_series(P(1), P(2, 1), 3)


def test_helpers():
    p = P(3, 0, -1, 5)
    assert mul_one_minus_zpow(p, 4) == p * IntPolynomial({0: 1, 4: -1})
    assert mul_geometric(p, 5) == p * P(1, 1, 1, 1, 1)
    assert mul_geometric(p, 1) == p
    assert denominator(new_semigroup([2, 3])) == P(1, 0, -1, -1, 0, 1)


@settings(max_examples=60, deadline=None)
@given(semigroups(max_m=6))
def test_series_expansion_equals_enumeration(S):
    prof = profile(S)
    bound = prof.conductor + sum(S.generators)
    expanded = rational_series(k_polynomial(S), denominator(S), bound)
    assert expanded == truncated_hilbert(S, bound)
    assert expanded == IntPolynomial({s: 1 for s in brute_members(S.generators, bound)})


@settings(max_examples=60, deadline=None)
@given(semigroups(max_m=6))
def test_structure(S):
    data = consistency_check(S)
    k, p = data.k_poly, data.p_poly
    assert p(1) == 1
    assert k(1) == 0
    cof = k
    for _ in range(S.m - 1):
        cof = poly_div_exact(cof, P(1, -1))
    assert cof(1) == math.prod(S.generators)
    assert sum(abs(c) for _, c in k.terms) % 2 == 0
