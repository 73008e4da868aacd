"""Exit criteria. Every comparison is exact; runtime bounds are as stated.

Each test records a one-line verdict shown in the "acceptance criteria"
section of the pytest summary.
"""

import json
import math
import time

import pytest

from numsemi import (
    GcdNotOne,
    IntPolynomial,
    InvalidQ,
    NonMinimalBasis,
    ZeroWq,
    consistency_check,
    k_polynomial,
    moment,
    new_semigroup,
    p_polynomial,
    poly_div_exact,
    profile,
    rational_series,
    signed_sequence,
    truncated_hilbert,
    verify_theorem1,
    verify_theorem2,
    verify_theorem2_all,
    w_count,
)
from numsemi import oracle
from numsemi.cli import main
from numsemi.hilbert import denominator


def test_ac1_fixture_479(accept):
    start = time.perf_counter()
    S = new_semigroup([4, 7, 9])
    k = k_polynomial(S)
    seq = signed_sequence(S)
    moments = [moment(seq, r) for r in range(3)]
    report = verify_theorem1(S)
    elapsed = time.perf_counter() - start
    ok = (
        k == IntPolynomial({0: 1, 16: -1, 18: -1, 21: -1, 25: 1, 30: 1})
        and moments == [0, 0, 504]
        and 504 == math.factorial(2) * 4 * 7 * 9
        and report.passed
        and elapsed < 0.1
    )
    accept("AC1", ok, f"<4,7,9> k={k} moments={moments} t={elapsed * 1e3:.2f}ms")
    assert ok


def test_ac2_fixture_23(accept):
    start = time.perf_counter()
    S = new_semigroup([2, 3])
    p = p_polynomial(S)
    prof = profile(S)
    k = k_polynomial(S)
    m1 = moment(signed_sequence(S), 1)
    elapsed = time.perf_counter() - start
    ok = (
        p == IntPolynomial([1, -1, 1])
        and (prof.frobenius, prof.conductor, prof.gaps) == (1, 2, (1,))
        and k == IntPolynomial({0: 1, 6: -1})
        and m1 == -6 == (-1) ** 1 * math.factorial(1) * 2 * 3
        and elapsed < 0.1
    )
    accept("AC2", ok, f"<2,3> p={p} g={prof.frobenius} k={k} moment1={m1} t={elapsed * 1e3:.2f}ms")
    assert ok


def test_ac3_theorem1_suite(instances500, accept):
    assert len(instances500) == 500
    assert {S.m for S in instances500} == {2, 3, 4, 5, 6}
    assert all(S.largest <= 300 for S in instances500)
    start = time.perf_counter()
    failures = [S for S in instances500 if not verify_theorem1(S, strict=False).passed]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    accept("AC3", ok, f"{500 - len(failures)}/500 pass, t={elapsed:.2f}s (limit 60s)")
    assert ok, failures[:5]


def test_ac4_theorem2_suite(instances500, accept):
    start = time.perf_counter()
    failures, total = [], 0
    for S in instances500:
        rep = verify_theorem2_all(S, strict=False)
        total += len(rep)
        expected_pairs = {
            (q, n)
            for q in range(2, S.largest + 1)
            if w_count(S, q) > 0
            for n in range(1, q)
            if math.gcd(n, q) == 1
        }
        got = {(c.q, c.n) for c in rep.checks}
        rs_ok = all({c.r for c in rep.checks if c.q == q and c.n == n} == set(range(w_count(S, q)))
                    for q, n in expected_pairs)
        if not (rep.passed and got == expected_pairs and rs_ok
                and all(not any(c.computed) for c in rep.checks)):
            failures.append(S)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    accept("AC4", ok, f"{500 - len(failures)}/500 pass, {total} cyclotomic checks, t={elapsed:.2f}s (limit 300s)")
    assert ok, failures[:5]


def _structure_ok(S):
    data = consistency_check(S)
    p, k, prof = data.p_poly, data.k_poly, data.profile
    conds = [
        p(1) == 1,
        S.m < 2 or k(1) == 0,
        p.degree() == prof.conductor,
        k.degree() == prof.frobenius + sum(S.generators),
    ]
    lhs = k * IntPolynomial([1, -1])
    rhs = p * denominator(S)
    conds.append(lhs == rhs)
    cof = k
    for _ in range(S.m - 1):
        cof = poly_div_exact(cof, IntPolynomial([1, -1]))
    conds.append(cof(1) == math.prod(S.generators))
    return all(conds)


def test_ac5_structure_suite(instances500, accept):
    fixtures = [new_semigroup(g) for g in ([2, 3], [4, 7, 9], [1])]
    start = time.perf_counter()
    failures = [S for S in fixtures + instances500 if not _structure_ok(S)]
    elapsed = time.perf_counter() - start
    ok = not failures
    accept("AC5", ok, f"{503 - len(failures)}/503 pass (3 fixtures + 500 random), t={elapsed:.2f}s")
    assert ok, failures[:5]


def test_ac6_oracle_equivalence(instances500, accept):
    chosen = [S for S in instances500 if S.multiplicity * S.largest <= 10**6][:100]
    assert len(chosen) == 100
    failures = []
    for S in chosen:
        prof = profile(S)
        bound = prof.conductor + sum(S.generators)
        expanded = rational_series(k_polynomial(S), denominator(S), bound)
        brute = IntPolynomial([int(b) for b in oracle.enumerate(S, bound).membership])
        seq = signed_sequence(S)
        ok = (
            oracle.oracle_frobenius(S) == prof.frobenius
            and expanded == brute == truncated_hilbert(S, bound)
            and all(oracle.oracle_moment(S, r) == moment(seq, r) for r in range(S.m))
        )
        if not ok:
            failures.append(S)
    ok = not failures
    accept("AC6", ok, f"{100 - len(failures)}/100 oracle agreements")
    assert ok, failures[:5]


def test_ac7_negative_edge_contract(accept):
    results = {}
    with pytest.raises(GcdNotOne):
        new_semigroup([2, 4])
    results["gcd"] = True
    with pytest.raises(NonMinimalBasis):
        new_semigroup([2, 3, 4])
    results["nonminimal"] = new_semigroup([2, 3, 4], auto_minimize=True).generators == (2, 3)
    S479 = new_semigroup([4, 7, 9])
    with pytest.raises(InvalidQ):
        verify_theorem2(S479, 1, 1)
    results["q=1"] = True
    with pytest.raises(ZeroWq):
        verify_theorem2(S479, 5, 1)
    results["w_q=0"] = True
    N = new_semigroup([1])
    prof = profile(N)
    t1 = verify_theorem1(N)
    results["<1>"] = (
        (prof.frobenius, prof.conductor, prof.gaps) == (-1, 0, ())
        and p_polynomial(N) == 1 == k_polynomial(N)
        and [(c.r, c.computed, c.expected) for c in t1.checks] == [(0, 1, 1)]
        and len(verify_theorem2_all(N)) == 0
    )
    ok = all(results.values())
    accept("AC7", ok, " ".join(f"{k}={'ok' if v else 'BAD'}" for k, v in results.items()))
    assert ok


def test_ac8_determinism(capsys, accept):
    argv = ["sweep", "--seed", "7", "--count", "500", "--format", "json"]
    code1 = main(argv)
    out1 = capsys.readouterr().out
    code2 = main(argv)
    out2 = capsys.readouterr().out
    data = json.loads(out1)
    ok = code1 == code2 == 0 and out1 == out2 and data["passed"] == 500
    accept("AC8", ok, f"byte-identical={out1 == out2} ({len(out1)} bytes), {data['passed']}/500 pass")
    assert ok
