"""Involutive divisions: Janet and Pommaret.

A division assigns to each monomial u of a finite set U a partition of the
variables into multiplicative and non-multiplicative ones. u involutively
divides m when u | m and the quotient uses only u's multiplicative
variables.
"""
from __future__ import annotations


class EmptySetError(ValueError):
    """A multiplicative partition of the empty set was requested."""


def mono_class(u):
    """0-based position of the smallest variable dividing u; None for u = 1."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return None


def pommaret_multiplicative(u, n=None):
    """Pommaret multiplicative variables: x_cls(u)..x_n, everything for u = 1."""
    if n is None:
        n = len(u)
    k = mono_class(u)
    if k is None:
        return frozenset(range(n))
    return frozenset(range(k, n))


def janet_multiplicative(monos, n):
    """Janet multiplicative variables of every monomial of a finite set.

    x1 is multiplicative for u iff deg_1(u) is maximal over the set; for
    i > 1, x_i is multiplicative for u iff deg_i(u) is maximal among the
    monomials sharing u's exponents on x1..x_{i-1}.
    """
    monos = list(dict.fromkeys(monos))
    if not monos:
        raise EmptySetError("Janet partition of an empty monomial set")
    mult = {u: [] for u in monos}
    groups = [monos]
    for i in range(n):
        next_groups = []
        for group in groups:
            dmax = max(u[i] for u in group)
            buckets = {}
            for u in group:
                if u[i] == dmax:
                    mult[u].append(i)
                buckets.setdefault(u[i], []).append(u)
            next_groups.extend(buckets.values())
        groups = next_groups
    return {u: frozenset(v) for u, v in mult.items()}


class _Janet:
    name = "janet"
    is_global = False

    def multiplicative(self, monos, n):
        return janet_multiplicative(monos, n)

    def __repr__(self):
        return "JANET"


class _Pommaret:
    name = "pommaret"
    is_global = True

    def multiplicative(self, monos, n):
        monos = list(dict.fromkeys(monos))
        if not monos:
            raise EmptySetError("Pommaret partition of an empty monomial set")
        return {u: pommaret_multiplicative(u, n) for u in monos}

    def __repr__(self):
        return "POMMARET"


JANET = _Janet()
POMMARET = _Pommaret()


def division_by_name(name):
    try:
        return {"janet": JANET, "pommaret": POMMARET}[name.lower()]
    except KeyError:
        raise ValueError(f"unknown involutive division {name!r}") from None


def involutive_divides(u, m, mult):
    """True when u | m and the quotient lies in the multiplicative monoid."""
    for i, (x, y) in enumerate(zip(u, m)):
        if x > y:
            return False
        if x < y and i not in mult:
            return False
    return True


def involutive_divisor(m, monos, division, order):
    """An involutive divisor of m among `monos`, or None.

    For sets that are not head autoreduced several divisors may exist; the
    largest one in the given ordering is returned, keeping runs reproducible.
    """
    part = division.multiplicative(list(monos), len(m))
    best = None
    for u, mu in part.items():
        if involutive_divides(u, m, mu):
            if best is None or order.compare(u, best) > 0:
                best = u
    return best


def is_head_autoreduced(polys, division):
    """No leading monomial involutively divides another one of the set."""
    polys = list(polys)
    if not polys:
        return True
    lms = [f.lm for f in polys]
    if len(set(lms)) != len(lms):
        return False
    n = polys[0].ring.n
    part = division.multiplicative(lms, n)
    for u in lms:
        for v in lms:
            if u is not v and involutive_divides(v, u, part[v]):
                return False
    return True
