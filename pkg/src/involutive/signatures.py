"""Module-monomial signatures and the Schreyer ordering.

A signature m*e_i labels a polynomial with its provenance from the i-th
registered generator. Signatures are compared through the leading monomial
the registry recorded for their index: m*e_i against m'*e_j compares
m*lm_i against m'*lm_j in the ring ordering, and on ties the signature
with the smaller index is the larger one.
"""
from __future__ import annotations

from typing import NamedTuple

from .poly import mono_divides, mono_mul


class Signature(NamedTuple):
    index: int
    mono: tuple


class SigRegistry:
    """Append-only map from signature index to a frozen leading monomial.

    Indices are dense from 1 and a recorded monomial never changes; new
    basis elements whose head differs from every registered one are given
    the next free index.
    """

    __slots__ = ("_lms",)

    def __init__(self):
        self._lms = [None]

    def add(self, lm):
        self._lms.append(tuple(lm))
        return len(self._lms) - 1

    def lm(self, index):
        if not 1 <= index < len(self._lms):
            raise KeyError(f"unregistered signature index {index}")
        return self._lms[index]

    def __len__(self):
        return len(self._lms) - 1


def sig_mul(mono, sig):
    return Signature(sig.index, mono_mul(mono, sig.mono))


def sig_divides(s, t, nonconstant=False):
    """s | t: same index and monomial divisibility, optionally proper."""
    if s.index != t.index or not mono_divides(s.mono, t.mono):
        return False
    return not (nonconstant and s.mono == t.mono)


def schreyer_key(sig, registry, order):
    """Sort key realizing the Schreyer ordering (ties favour small indices)."""
    return (order.key(mono_mul(sig.mono, registry.lm(sig.index))), -sig.index)


def schreyer_compare(a, b, registry, order):
    """-1, 0 or 1 as a <, =, > b in the Schreyer ordering.

    Equality only happens for identical signatures: equal keys force equal
    indices, and with the same registered monomial equal products force
    equal cofactors.
    """
    ka = schreyer_key(a, registry, order)
    kb = schreyer_key(b, registry, order)
    return (ka > kb) - (ka < kb)


class SyzygySet:
    """Signatures known to be lead terms of syzygies, bucketed by index."""

    __slots__ = ("_by_index", "_count")

    def __init__(self):
        self._by_index = {}
        self._count = 0

    def add(self, sig):
        bucket = self._by_index.setdefault(sig.index, set())
        if sig.mono not in bucket:
            bucket.add(sig.mono)
            self._count += 1

    def prunes(self, sig, *, nonconstant):
        """Whether some recorded signature divides `sig`."""
        bucket = self._by_index.get(sig.index)
        if not bucket:
            return False
        for u in bucket:
            if mono_divides(u, sig.mono) and not (nonconstant and u == sig.mono):
                return True
        return False

    def __len__(self):
        return self._count

    def __iter__(self):
        for index in sorted(self._by_index):
            for mono in sorted(self._by_index[index]):
                yield Signature(index, mono)
