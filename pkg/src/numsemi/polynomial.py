"""Exact sparse integer polynomials in one variable and cyclotomic residues.

``IntPolynomial`` keeps a degree -> coefficient map with zeros pruned.
``CyclotomicElement`` is a residue of Z[x] modulo the q-th cyclotomic
polynomial; the class of ``x`` stands for a primitive q-th root of unity.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .errors import InexactDivision, OrderMismatch

NEG_INF = -math.inf


class IntPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(enumerate(terms))
        for d in terms:
            if d < 0:
                raise ValueError(f"negative degree {d}")
        self._terms = {d: c for d, c in terms.items() if c}

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls({degree: coeff})

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @property
    def terms(self):
        """Sorted ``(degree, coefficient)`` pairs."""
        return sorted(self._terms.items())

    def coeff(self, degree):
        return self._terms.get(degree, 0)

    def degree(self):
        return max(self._terms) if self._terms else NEG_INF

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"IntPolynomial({dict(self.terms)!r})"

    def __str__(self):
        return render(self)

    def __neg__(self):
        return IntPolynomial._raw({d: -c for d, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        out = dict(self._terms)
        for d, c in other._terms.items():
            v = out.get(d, 0) + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return IntPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({d: c * other for d, c in self._terms.items()})
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for db, cb in b.items():
            for da, ca in a.items():
                k = da + db
                out[k] = out.get(k, 0) + ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial({0: 1}), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        return poly_eval_int(self, x)

    def derivative(self, times=1):
        out = {}
        for d, c in self._terms.items():
            if d >= times:
                out[d - times] = c * math.perm(d, times)
        return IntPolynomial._raw(out)

    def truncate(self, bound):
        """Terms of degree <= ``bound``."""
        return IntPolynomial._raw({d: c for d, c in self._terms.items() if d <= bound})

    def to_dense(self):
        if not self._terms:
            return []
        out = [0] * (max(self._terms) + 1)
        for d, c in self._terms.items():
            out[d] = c
        return out


def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_mul(a, b):
    return a * b


def one_minus_zpow(d):
    """The binomial ``1 - z**d``."""
    return IntPolynomial({0: 1, d: -1})


def poly_div_exact(a, b):
    """Quotient of ``a`` by ``b``; raises :class:`InexactDivision` on remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return IntPolynomial()
    db = b.degree()
    lead = b.coeff(db)
    rest = [(db - d, c) for d, c in b._terms.items() if d != db]
    work = a.to_dense()
    if len(work) - 1 < db:
        raise InexactDivision("divisor has larger degree than dividend")
    quotient = {}
    for i in range(len(work) - 1, db - 1, -1):
        c = work[i]
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise InexactDivision(f"non-integral quotient coefficient at degree {i - db}")
        quotient[i - db] = qc
        work[i] = 0
        for off, bc in rest:
            work[i - off] -= qc * bc
    if any(work[:db]):
        raise InexactDivision("nonzero remainder")
    return IntPolynomial._raw(quotient)


def poly_eval_int(p, x):
    """Exact Horner evaluation over the sorted degrees."""
    terms = p.terms
    if not terms:
        return 0
    acc = 0
    prev = terms[-1][0]
    for d, c in reversed(terms):
        acc = acc * x ** (prev - d) + c
        prev = d
    return acc * x**prev


def render(p, var="z"):
    if p.is_zero():
        return "0"
    parts = []
    for d, c in p.terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if d == 0:
            body = str(a)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(q):
    """Phi_q via (x^q - 1) / prod_{d | q, d < q} Phi_d."""
    if q < 1:
        raise ValueError("q must be positive")
    num = IntPolynomial({q: 1, 0: -1})
    for d in range(1, q):
        if q % d == 0:
            num = poly_div_exact(num, cyclotomic_poly(d))
    return num


def euler_phi(q):
    return int(cyclotomic_poly(q).degree())


@lru_cache(maxsize=None)
def _reduction_rule(q):
    """(phi, [(k, c)]) with x^phi = sum c * x^k modulo Phi_q, k < phi."""
    phi_q = cyclotomic_poly(q)
    n = int(phi_q.degree())
    return n, tuple((d, -c) for d, c in phi_q.terms if d < n)


def _reduce_dense(q, coeffs):
    """Reduce a dense coefficient list modulo Phi_q (monic), in place."""
    n, rule = _reduction_rule(q)
    for i in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            shift = i - n
            for k, rc in rule:
                coeffs[shift + k] += c * rc
    del coeffs[n:]
    if len(coeffs) < n:
        coeffs.extend([0] * (n - len(coeffs)))
    return coeffs


class CyclotomicElement:
    """Element of Z[x]/(Phi_q) stored as ``phi(q)`` reduced coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 2:
            raise ValueError("order must be at least 2")
        self.order = order
        self.coeffs = tuple(_reduce_dense(order, list(coeffs)))

    @classmethod
    def zero(cls, q):
        return cls(q)

    @classmethod
    def one(cls, q):
        return cls(q, [1])

    def _check(self, other):
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatch(f"cannot combine orders {self.order} and {other.order}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return CyclotomicElement(self.order, [k * a for a in self.coeffs])

    def mul_x(self):
        """Multiply by the root ``x`` and reduce immediately."""
        return CyclotomicElement(self.order, [0, *self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        p = IntPolynomial(dict(enumerate(self.coeffs)))
        return render(p, var="x")

    def embed(self, k):
        """Complex value under x -> exp(2*pi*i*k/q), as a float (diagnostics only)."""
        w = cmath.exp(2j * cmath.pi * k / self.order)
        return sum(c * w**e for e, c in enumerate(self.coeffs))


def cyc_add(a, b):
    return a + b


def cyc_scale(a, k):
    return a.scale(k)


def cyc_is_zero(a):
    return a.is_zero()


def root_power(q, e):
    """The class of ``x**(e mod q)``, i.e. zeta**e for a primitive q-th root zeta."""
    if q < 2:
        raise ValueError("q must be at least 2")
    e %= q
    coeffs = [0] * (e + 1)
    coeffs[e] = 1
    return CyclotomicElement(q, coeffs)


def cyclotomic_sum(q, weights):
    """Sum of ``w * zeta**e`` over ``weights`` items ``(e, w)``, reduced mod Phi_q."""
    dense = [0] * q
    for e, w in weights:
        dense[e % q] += w
    return CyclotomicElement(q, dense)
