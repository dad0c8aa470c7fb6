"""Groebner bases with syzygy-signature pruning, plus a textbook oracle.

The main routine is a Buchberger variant in the style of Moller, Mora and
Traverso: every processed signature is recorded as a syzygy lead term, new
pairs are queued as prolongations of the freshly inserted element, and a
pair whose signature is divisible by a recorded syzygy signature is
skipped. `plain_buchberger` is the criterion-free reference used by the
test suite.
"""
from __future__ import annotations

import heapq
from math import gcd
from typing import NamedTuple

from .poly import (
    Polynomial,
    mono_coprime,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    ratio,
)
from .signatures import Signature, SigRegistry, SyzygySet
from .stats import RunStats


class LabeledPoly(NamedTuple):
    poly: Polynomial
    sig: Signature


class IndexedPoly(NamedTuple):
    poly: Polynomial
    index: int


def _neg_key(key):
    return tuple(-v for v in key)


class _Reducer(NamedTuple):
    lm: tuple
    lc: int
    terms: dict
    index: int


def _prepare_reducers(basis):
    reducers = []
    for entry in basis:
        if isinstance(entry, IndexedPoly):
            poly, index = entry
        else:
            poly, index = entry, 0
        prim = poly.primitive()
        reducers.append(_Reducer(prim.lm, prim.lc, prim.terms, index))
    return reducers


def normal_form(p, basis, *, select=None):
    """Fully reduce a polynomial modulo `basis`.

    `p` may be a LabeledPoly, in which case the first performed reduction
    step never uses a basis element carrying the same index as p's
    signature; reduction of that monomial is retried once another step has
    been taken. `basis` elements may be IndexedPoly pairs or bare
    polynomials. `select` overrides the reducer choice (reducers list ->
    one of them) and exists for cross-checking strategies in tests.

    The remainder is exact: scaling the reducers does not change it.
    """
    if isinstance(p, LabeledPoly):
        f, ban = p.poly, p.sig.index
    else:
        f, ban = p, None
    ring = f.ring
    order = ring.order
    if f.is_zero():
        return f
    reducers = _prepare_reducers(basis)
    if select is None:
        select = lambda options: options[0]

    scale = 1
    h = {}
    for m, c in f.terms.items():
        scale_c = c.denominator if hasattr(c, "denominator") else 1
        if scale_c != 1:
            scale = scale * scale_c // gcd(scale, scale_c)
    for m, c in f.terms.items():
        h[m] = int(c * scale)
    scale = ratio(scale, 1)

    heap = [(_neg_key(order.key(m)), m) for m in h]
    heapq.heapify(heap)
    irreducible = set()
    deferred = []
    stepped = False
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        if m in irreducible:
            continue
        c = h.get(m)
        if not c:
            continue
        options = [r for r in reducers if mono_divides(r.lm, m)]
        if not options:
            irreducible.add(m)
            continue
        if not stepped and ban is not None:
            allowed = [r for r in options if r.index != ban]
            if not allowed:
                deferred.append(m)
                continue
            options = allowed
        red = select(options)
        u = mono_div(m, red.lm)
        g0 = gcd(c, red.lc)
        a = red.lc // g0
        b = c // g0
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in h:
                h[k] *= a
            scale = scale * a
        for gm, gc in red.terms.items():
            key = mono_mul(u, gm)
            v = h.get(key, 0) - b * gc
            if v:
                h[key] = v
                if key not in irreducible:
                    heapq.heappush(heap, (_neg_key(order.key(key)), key))
            elif key in h:
                del h[key]
        if not stepped:
            stepped = True
            for d in deferred:
                if d in h:
                    heapq.heappush(heap, (_neg_key(order.key(d)), d))
            deferred.clear()
        steps += 1
        if steps % 16 == 0 and h:
            content = 0
            for v in h.values():
                content = gcd(content, v)
            if content > 1:
                for k in h:
                    h[k] //= content
                scale = ratio(scale, content)
    terms = {}
    for m, c in h.items():
        w = ratio(c, 1) / scale
        terms[m] = w.numerator if w.denominator == 1 else w
    return Polynomial(ring, terms)


def _clean_input(polys):
    seen = []
    for f in polys:
        if f.is_zero():
            continue
        g = f.primitive()
        if g not in seen:
            seen.append(g)
    return seen


def _pair_key(poly, order, seq):
    lm = poly.lm
    return (mono_deg(lm), order.key(lm), seq)


def groebner_basis(polys, *, syzygy_pruning=True):
    """Groebner basis of the input ideal with run statistics.

    Pair selection follows the normal strategy: increasing degree of the
    pair's leading monomial (which for queued pairs is the lcm of the two
    parents' heads), ties by the ordering and then first-in-first-out.
    With `syzygy_pruning` off, the syzygy set is still maintained but never
    used to skip work; the resulting basis generates the same leading-term
    ideal.
    """
    polys = _clean_input(polys)
    stats = RunStats(algorithm="groebner")
    if not polys:
        return [], stats
    ring = polys[0].ring
    order = ring.order

    registry = SigRegistry()
    syz = SyzygySet()
    pending = []
    seq = 0
    for f in polys:
        idx = registry.add(f.lm)
        heapq.heappush(pending, (_pair_key(f, order, seq), seq, LabeledPoly(f, Signature(idx, (0,) * ring.n))))
        seq += 1

    basis = []
    while pending:
        _, _, item = heapq.heappop(pending)
        if syzygy_pruning and syz.prunes(item.sig, nonconstant=False):
            stats.syz += 1
            continue
        h = normal_form(item, basis)
        syz.add(item.sig)
        if h.is_zero():
            stats.redz += 1
            continue
        h = h.primitive()
        j = registry.add(h.lm)
        for entry in basis:
            big = mono_lcm(entry.poly.lm, h.lm)
            r = mono_div(big, h.lm)
            pair = LabeledPoly(h.mul_mono(r), Signature(j, r))
            heapq.heappush(pending, (_pair_key(pair.poly, order, seq), seq, pair))
            seq += 1
            if mono_coprime(entry.poly.lm, h.lm):
                syz.add(Signature(j, entry.poly.lm))
        basis.append(IndexedPoly(h, j))

    out = sorted((e.poly.monic() for e in basis), key=lambda f: order.key(f.lm))
    stats.basis_size = len(out)
    stats.max_deg = max((f.degree() for f in out), default=0)
    return out, stats


def spoly(f, g):
    """S-polynomial lcm/lt(f)*f - lcm/lt(g)*g."""
    big = mono_lcm(f.lm, g.lm)
    a = f.mul_term(mono_div(big, f.lm), ratio(1, f.lc))
    b = g.mul_term(mono_div(big, g.lm), ratio(1, g.lc))
    return a - b


def plain_buchberger(polys):
    """Textbook Buchberger with no pair criteria; test oracle only."""
    basis = _clean_input(polys)
    if not basis:
        return []
    order = basis[0].ring.order
    pending = []
    seq = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            big = mono_lcm(basis[i].lm, basis[j].lm)
            heapq.heappush(pending, ((mono_deg(big), order.key(big), seq), i, j))
            seq += 1
    while pending:
        _, i, j = heapq.heappop(pending)
        h = normal_form(spoly(basis[i], basis[j]), basis)
        if h.is_zero():
            continue
        h = h.primitive()
        basis.append(h)
        k = len(basis) - 1
        for i2 in range(k):
            big = mono_lcm(basis[i2].lm, h.lm)
            heapq.heappush(pending, ((mono_deg(big), order.key(big), seq), i2, k))
            seq += 1
    return [f.monic() for f in basis]


def reduces_to_zero(f, basis):
    return normal_form(f, basis).is_zero()


def is_groebner_basis(basis):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not reduces_to_zero(spoly(basis[i], basis[j]), basis):
                return False
    return True


def lm_ideal_equal(basis_a, basis_b):
    """Whether two sets generate the same leading-term ideal."""
    lms_a = [f.lm for f in basis_a]
    lms_b = [f.lm for f in basis_b]
    return all(any(mono_divides(v, u) for v in lms_b) for u in lms_a) and all(
        any(mono_divides(u, v) for u in lms_a) for v in lms_b
    )


def ideal_equal(gens_a, gens_b):
    """Ideal equality through mutual reduction by plain Buchberger bases."""
    gb_a = plain_buchberger(gens_a)
    gb_b = plain_buchberger(gens_b)
    return all(reduces_to_zero(f, gb_b) for f in gens_a) and all(
        reduces_to_zero(g, gb_a) for g in gens_b
    )
