"""Hilbert functions of involutive spans.

The span of an involutively head autoreduced set F decomposes into the
direct sum of the cones f * k[multiplicative variables of f], so the
dimension of its degree-s complement has the closed form

    C(n+s-1, s) - sum_f C(s - deg f + k_f - 1, s - deg f)

with k_f the number of multiplicative variables of f. A brute-force
monomial enumeration is kept alongside as an independent oracle.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

from .divisions import is_head_autoreduced
from .poly import mono_divides


def binomial(a, b):
    """C(a, b) with the conventions C(a, b<0) = 0 and C(a, 0) = 1."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0:
        return 0
    return comb(a, b)


class HilbertFunction:
    """Degree-wise evaluator built from a (degree, multiplicative-count) snapshot.

    The snapshot, not the basis itself, is stored: the evaluator stays valid
    after the originating set has been transformed or discarded.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n, gens):
        self.n = n
        self.gens = tuple(gens)

    @classmethod
    def from_basis(cls, polys, division):
        polys = list(polys)
        if not polys:
            raise ValueError("need at least one polynomial to snapshot")
        n = polys[0].ring.n
        lms = [f.lm for f in polys]
        part = division.multiplicative(lms, n)
        return cls(n, [(f.degree(), len(part[f.lm])) for f in polys])

    def __call__(self, s):
        value = binomial(self.n + s - 1, s)
        for d, k in self.gens:
            value -= binomial(s - d + k - 1, s - d)
        return value

    def __eq__(self, other):
        return (
            isinstance(other, HilbertFunction)
            and self.n == other.n
            and sorted(self.gens) == sorted(other.gens)
        )

    def __repr__(self):
        return f"HilbertFunction(n={self.n}, gens={list(self.gens)})"


def involutive_hf(polys, division, s, *, n=None):
    """Closed-form Hilbert function value at degree s.

    The set must be involutively head autoreduced (checked); pass `n` for an
    empty set, whose span is the zero ideal.
    """
    polys = list(polys)
    if not polys:
        if n is None:
            raise ValueError("empty set needs an explicit variable count")
        return binomial(n + s - 1, s)
    if not is_head_autoreduced(polys, division):
        raise ValueError("set is not involutively head autoreduced")
    return HilbertFunction.from_basis(polys, division)(s)


def monomials_of_degree(n, s):
    """All exponent tuples of total degree s in n variables."""
    if s == 0:
        yield (0,) * n
        return
    for bars in combinations(range(s + n - 1), n - 1):
        prev = -1
        m = []
        for b in bars:
            m.append(b - prev - 1)
            prev = b
        m.append(s + n - 2 - prev)
        yield tuple(m)


def brute_force_hf(lms, n, s):
    """Number of degree-s monomials outside the monomial ideal <lms>."""
    lms = list(lms)
    count = 0
    for m in monomials_of_degree(n, s):
        if not any(mono_divides(u, m) for u in lms):
            count += 1
    return count


def hf_equal_at(polys, division, target, d):
    """Whether the involutive Hilbert function of the set matches `target` at d."""
    return involutive_hf(polys, division, d, n=target.n) == target(d)


def standard_monomials(lms, n, s):
    """Degree-s monomials outside <lms>; enumeration helper for tests."""
    return [
        m
        for m in monomials_of_degree(n, s)
        if not any(mono_divides(u, m) for u in lms)
    ]


__all__ = [
    "HilbertFunction",
    "binomial",
    "brute_force_hf",
    "hf_equal_at",
    "involutive_hf",
    "monomials_of_degree",
    "standard_monomials",
]
