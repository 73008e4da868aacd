"""Numerical semigroups: construction, Apéry sets, Frobenius number, gaps."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import EmptyInput, GcdNotOne, InvalidGenerator, NonMinimalBasis, ResourceLimit
from .limits import resolve


@dataclass(frozen=True)
class AperySet:
    """Smallest semigroup element in each residue class modulo ``modulus``."""

    modulus: int
    elements: tuple[int, ...]

    def __getitem__(self, residue):
        return self.elements[residue]

    def __len__(self):
        return len(self.elements)

    def as_dict(self):
        return dict(enumerate(self.elements))


@dataclass(frozen=True)
class SemigroupProfile:
    frobenius: int
    conductor: int
    genus: int
    gaps: tuple[int, ...]


@dataclass(frozen=True, eq=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators ``d_1 < ... < d_m``.

    Build instances through :func:`new_semigroup`; the constructor itself does
    not validate.
    """

    generators: tuple[int, ...]

    @property
    def m(self):
        return len(self.generators)

    @property
    def multiplicity(self):
        return self.generators[0]

    @property
    def largest(self):
        return self.generators[-1]

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def contains(self, x):
        return contains(self, x)


def _in_span(x, gens, limits):
    """Whether ``x`` is a nonnegative combination of ``gens`` (gens sorted)."""
    if x == 0:
        return True
    if not gens:
        return False
    g = math.gcd(*gens)
    if x % g:
        return False
    reduced = [d // g for d in gens]
    x //= g
    mod = reduced[0]
    if mod > limits.max_apery_nodes:
        raise ResourceLimit(f"Apéry modulus {mod} exceeds cap {limits.max_apery_nodes}")
    dist = _backend.apery_distances(mod, reduced[1:])
    w = dist[x % mod]
    return w >= 0 and x >= w


def minimize(raw, limits=None):
    """Sort, deduplicate and drop redundant generators.

    Returns ``(kept, removed)``. Does not check the gcd.
    """
    limits = resolve(limits)
    kept, removed = [], []
    for d in sorted(set(raw)):
        if _in_span(d, kept, limits):
            removed.append(d)
        else:
            kept.append(d)
    return tuple(kept), tuple(removed)


def new_semigroup(raw, auto_minimize=False, limits=None):
    """Validate ``raw`` generators and return a :class:`NumericalSemigroup`.

    Non-minimal input raises :class:`NonMinimalBasis` unless ``auto_minimize``
    is set, in which case redundant generators are dropped (see
    :func:`minimize` to learn which).
    """
    raw = list(raw)
    if not raw:
        raise EmptyInput("at least one generator is required")
    for d in raw:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InvalidGenerator(f"generators must be positive integers, got {d!r}")
    if math.gcd(*raw) != 1:
        raise GcdNotOne(f"gcd must be 1, got gcd{tuple(sorted(set(raw)))} = {math.gcd(*raw)}")
    kept, removed = minimize(raw, limits)
    if removed and not auto_minimize:
        raise NonMinimalBasis(
            f"basis is not minimal: {removed[0]} lies in the semigroup of the other generators",
            redundant=removed,
        )
    return NumericalSemigroup(kept)


def apery_set(S, limits=None):
    """Apéry set of ``S`` with respect to its multiplicity ``d_1``.

    Dijkstra on the residue graph mod ``d_1`` (edge r -> r + d_i of weight d_i).
    """
    limits = resolve(limits)
    mod = S.generators[0]
    if mod > limits.max_apery_nodes:
        raise ResourceLimit(f"multiplicity {mod} exceeds Apéry node cap {limits.max_apery_nodes}")
    cached = S.__dict__.get("_apery_cache")
    if cached is None:
        cached = AperySet(mod, tuple(_backend.apery_distances(mod, S.generators[1:])))
        # frozen dataclass: cache outside the field set, not part of equality
        object.__setattr__(S, "_apery_cache", cached)
    return cached


def contains(S, x):
    if x < 0:
        return False
    ap = S.__dict__.get("_apery_cache") or apery_set(S)
    return x >= ap.elements[x % ap.modulus]


def frobenius_number(S):
    ap = apery_set(S)
    return max(ap.elements) - ap.modulus


def profile(S, limits=None):
    limits = resolve(limits)
    ap = apery_set(S, limits)
    mod = ap.modulus
    g = max(ap.elements) - mod
    if g + 1 > limits.max_enumerate:
        raise ResourceLimit(f"conductor {g + 1} exceeds enumeration cap {limits.max_enumerate}")
    gaps = []
    for w in ap.elements:
        gaps.extend(range(w - mod, -1, -mod))
    gaps.sort()
    return SemigroupProfile(frobenius=g, conductor=g + 1, genus=len(gaps), gaps=tuple(gaps))
