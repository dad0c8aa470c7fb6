"""Completion to minimal involutive bases.

The completion loop keeps an intermediate basis T (always involutively head
autoreduced) and a queue Q of prolongations ordered by the Schreyer
ordering of their signatures. Each round the minimal element is either
discarded by the syzygy-signature criterion, reduced to zero (possibly
detected early by the two ancestor criteria), or inserted; afterwards every
element of T queues its not-yet-processed non-multiplicative prolongations.

An optional Hilbert function target enables degree pruning: whenever the
intermediate basis already spans everything the target allows in the
current degree, all queued work of that degree is dropped.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .divisions import JANET, POMMARET, is_head_autoreduced
from .hilbert import binomial
from .poly import (
    Polynomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    unit_mono,
)
from .signatures import Signature, SigRegistry, SyzygySet, schreyer_key, sig_mul
from .stats import RunStats

AUTO_CAP = "auto"


class DegreeCapExceeded(RuntimeError):
    """The completion hit the degree guard (non-Noetherian division case)."""

    def __init__(self, cap, partial):
        super().__init__(
            f"completion exceeded degree cap {cap}; the ideal most likely has "
            f"no finite basis for this division in these coordinates"
        )
        self.cap = cap
        self.partial = partial


@dataclass
class WorkItem:
    """Queue/basis entry: a polynomial with ancestry and signature data.

    `anc` is the self-ancestored element the polynomial descends from by
    prolongations; `processed` records which non-multiplicative variables
    have already been queued.
    """

    poly: Polynomial
    anc: Polynomial
    processed: set
    sig: Signature
    seq: int


class _Reducer(NamedTuple):
    lm: tuple
    mult: frozenset
    lc: int
    terms: dict
    anc_lm: tuple
    sig: Signature


def criterion(p_anc_lm, g_anc_lm, head):
    """Which ancestor criterion eliminates a work item, if any.

    'c1' when the product of the ancestor heads equals the item's head,
    else 'c2' when their lcm properly divides it, else None.
    """
    if mono_mul(p_anc_lm, g_anc_lm) == head:
        return "c1"
    big = mono_lcm(p_anc_lm, g_anc_lm)
    if big != head and mono_divides(big, head):
        return "c2"
    return None


def _neg_key(key):
    return tuple(-v for v in key)


class _Queue:
    """Min-queue over work items with lazy deletion."""

    def __init__(self):
        self._heap = []
        self._dead = set()
        self._live = 0

    def push(self, key, item):
        heapq.heappush(self._heap, (key, item.seq, item))
        self._live += 1

    def _settle(self):
        while self._heap and self._heap[0][2].seq in self._dead:
            heapq.heappop(self._heap)

    def peek(self):
        self._settle()
        return self._heap[0][2]

    def pop(self):
        self._settle()
        item = heapq.heappop(self._heap)[2]
        self._live -= 1
        return item

    def discard_where(self, pred):
        removed = 0
        for _, seq, item in self._heap:
            if seq not in self._dead and pred(item):
                self._dead.add(seq)
                removed += 1
        self._live -= removed
        return removed

    def __len__(self):
        return self._live


def _involutive_nf(item, reducers, order, registry, *, use_criteria):
    """Involutive normal form of a work item modulo the reducer snapshot.

    Returns (terms, certificate, kill). `terms` is None when the item was
    eliminated by a criterion before any arithmetic, otherwise the (possibly
    empty) reduced term dict. `certificate` is the item's signature when the
    head was reduced by a smaller-signature element, marking the signature
    as a syzygy lead term. `kill` is one of None, 'sig', 'c1', 'c2'.
    """
    h = dict(item.poly.terms)
    head = item.poly.lm
    item_key = schreyer_key(item.sig, registry, order)
    anc_lm = item.anc.lm
    cert = None

    heap = [(_neg_key(order.key(m)), m) for m in h]
    heapq.heapify(heap)
    irreducible = set()
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        if m in irreducible:
            continue
        c = h.get(m)
        if not c:
            continue
        red = None
        for r in reducers:
            ok = True
            for i, (x, y) in enumerate(zip(r.lm, m)):
                if x > y or (x < y and i not in r.mult):
                    ok = False
                    break
            if ok and (red is None or order.key(r.lm) > order.key(red.lm)):
                red = r
        if red is None:
            irreducible.add(m)
            continue
        u = mono_div(m, red.lm)
        if m == head:
            red_sig = sig_mul(u, red.sig)
            if red_sig == item.sig:
                return None, None, "sig"
            if use_criteria:
                kill = criterion(anc_lm, red.anc_lm, head)
                if kill is not None:
                    return None, None, kill
            if schreyer_key(red_sig, registry, order) < item_key:
                cert = item.sig
        g0 = gcd(c, red.lc)
        a = red.lc // g0
        b = c // g0
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in h:
                h[k] *= a
        for gm, gc in red.terms.items():
            key = mono_mul(u, gm)
            v = h.get(key, 0) - b * gc
            if v:
                h[key] = v
                if key not in irreducible:
                    heapq.heappush(heap, (_neg_key(order.key(key)), key))
            elif key in h:
                del h[key]
        steps += 1
        if steps % 16 == 0 and h:
            content = 0
            for v in h.values():
                content = gcd(content, v)
            if content > 1:
                for k in h:
                    h[k] //= content
    return h, cert, None


def _clean_input(polys):
    seen = []
    for f in polys:
        if f.is_zero():
            continue
        g = f.primitive()
        if g not in seen:
            seen.append(g)
    return seen


def _poly_sort_key(f, order):
    return (
        order.key(f.lm),
        tuple(sorted((order.key(m), c) for m, c in f.terms.items())),
    )


def involutive_basis(
    polys,
    division=JANET,
    *,
    hilbert_target=None,
    degree_cap=AUTO_CAP,
    use_syzygy_criterion=True,
    use_criteria=True,
    nf_observer=None,
):
    """Minimal involutive basis of the input ideal with run statistics.

    With `hilbert_target` (a HilbertFunction of the same ideal, typically
    computed from an earlier basis of a linearly equivalent one) queued work
    is discarded degree-wise once the intermediate basis matches the target.

    `degree_cap` guards Pommaret runs on ideals that are not quasi stable
    and therefore have no finite Pommaret basis: 'auto' caps at twice the
    maximum input degree plus two, None disables the guard, an int caps
    explicitly. Exceeding the cap raises DegreeCapExceeded with the partial
    basis attached.

    `use_syzygy_criterion` and `use_criteria` disable the pruning rules for
    soundness experiments; `nf_observer(poly, basis_polys, remainder)` is
    called after every completed (non-criterion) normal form.
    """
    stats = RunStats(algorithm=division.name)
    cleaned = _clean_input(polys)
    if not cleaned:
        return [], stats
    ring = cleaned[0].ring
    order = ring.order
    n = ring.n

    if degree_cap == AUTO_CAP:
        cap = (
            2 + 2 * max(f.degree() for f in cleaned)
            if division is POMMARET
            else None
        )
    else:
        cap = degree_cap

    cleaned.sort(key=lambda f: _poly_sort_key(f, order))
    registry = SigRegistry()
    syz = SyzygySet()
    one = (0,) * n
    seq = 0

    def item_key(item):
        lm = item.poly.lm
        return (
            schreyer_key(item.sig, registry, order),
            mono_deg(lm),
            order.key(lm),
        )

    items = []
    for f in cleaned:
        idx = registry.add(f.lm)
        items.append(WorkItem(f, f, set(), Signature(idx, one), seq))
        seq += 1
    T = [items[0]]
    Q = _Queue()
    for it in items[1:]:
        Q.push(item_key(it), it)

    reducers = []
    partition = {}

    def refresh():
        nonlocal reducers, partition
        lms = [it.poly.lm for it in T]
        partition = division.multiplicative(lms, n)
        reducers = [
            _Reducer(
                it.poly.lm,
                partition[it.poly.lm],
                it.poly.lc,
                it.poly.terms,
                it.anc.lm,
                it.sig,
            )
            for it in T
        ]

    def current_hf(s):
        value = binomial(n + s - 1, s)
        for it in T:
            d = it.poly.degree()
            k = len(partition[it.poly.lm])
            value -= binomial(s - d + k - 1, s - d)
        return value

    def generate_prolongations():
        nonlocal seq
        for it in T:
            nonmult = set(range(n)) - partition[it.poly.lm]
            for x in sorted(nonmult - it.processed):
                new = WorkItem(
                    it.poly.mul_mono(unit_mono(n, x)),
                    it.anc,
                    set(),
                    sig_mul(unit_mono(n, x), it.sig),
                    seq,
                )
                seq += 1
                Q.push(item_key(new), new)
            it.processed |= nonmult

    def finalize():
        basis = sorted((it.poly.monic() for it in T), key=lambda f: order.key(f.lm))
        stats.basis_size = len(basis)
        stats.max_deg = max(f.degree() for f in basis)
        return basis, stats

    refresh()
    if not len(Q):
        generate_prolongations()

    while len(Q):
        if hilbert_target is not None:
            while True:
                p = Q.peek()
                d = p.poly.degree()
                if hilbert_target(d) != current_hf(d):
                    break
                stats.hd += Q.discard_where(
                    lambda q, _d=d: q.poly.degree() == _d
                )
                if not len(Q):
                    return finalize()
        p = Q.pop()
        if cap is not None and p.poly.degree() > cap:
            raise DegreeCapExceeded(cap, [it.poly.monic() for it in T])
        if use_syzygy_criterion and syz.prunes(p.sig, nonconstant=True):
            stats.syz += 1
            continue
        terms, cert, kill = _involutive_nf(
            p, reducers, order, registry, use_criteria=use_criteria
        )
        if cert is not None:
            syz.add(cert)
        if kill == "sig":
            stats.syz += 1
        elif kill == "c1":
            stats.c1 += 1
        elif kill == "c2":
            stats.c2 += 1
        if terms is not None and nf_observer is not None:
            nf_observer(p.poly, [it.poly for it in T], Polynomial(ring, dict(terms)))
        if not terms:
            if kill is None:
                stats.redz += 1
            if p.poly.lm == p.anc.lm:
                Q.discard_where(lambda q, _p=p.poly: q.anc == _p)
        else:
            h = Polynomial(ring, terms).primitive()
            if h.lm != p.poly.lm:
                keep = []
                for it in T:
                    if mono_divides(h.lm, it.poly.lm) and it.poly.lm != h.lm:
                        it.seq = seq
                        seq += 1
                        Q.push(item_key(it), it)
                    else:
                        keep.append(it)
                T[:] = keep
                j = registry.add(h.lm)
                T.append(WorkItem(h, h, set(), Signature(j, one), seq))
                seq += 1
            else:
                T.append(WorkItem(h, p.anc, p.processed, p.sig, seq))
                seq += 1
            refresh()
        generate_prolongations()
    return finalize()


def hilbert_driven_basis(polys, division, target, **kwargs):
    """Involutive basis with degree pruning against a known Hilbert function."""
    return involutive_basis(polys, division, hilbert_target=target, **kwargs)


def involutive_reduce(f, basis, division):
    """Signature-free full involutive normal form of f modulo `basis`.

    Independent of the completion loop; used as oracle and for the local
    involutivity checks.
    """
    basis = list(basis)
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    order = ring.order
    lms = [g.lm for g in basis]
    part = division.multiplicative(lms, ring.n)
    h = f
    while not h.is_zero():
        target_m = None
        red = None
        for m in h.monomials():
            for g in basis:
                ok = True
                for i, (x, y) in enumerate(zip(g.lm, m)):
                    if x > y or (x < y and i not in part[g.lm]):
                        ok = False
                        break
                if ok and (red is None or order.compare(g.lm, red.lm) > 0):
                    red = g
            if red is not None:
                target_m = m
                break
        if red is None:
            return h
        h = h.reduce_step(target_m, red)
    return h


def _vanishes_involutively(f, reducers, order):
    """Fraction-free zero test for the involutive normal form of f."""
    f = f.primitive()
    if f.is_zero():
        return True
    h = dict(f.terms)
    heap = [(_neg_key(order.key(m)), m) for m in h]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = h.get(m)
        if not c:
            continue
        red = None
        for r in reducers:
            ok = True
            for i, (x, y) in enumerate(zip(r.lm, m)):
                if x > y or (x < y and i not in r.mult):
                    ok = False
                    break
            if ok and (red is None or order.key(r.lm) > order.key(red.lm)):
                red = r
        if red is None:
            return False
        u = mono_div(m, red.lm)
        g0 = gcd(c, red.lc)
        a = red.lc // g0
        b = c // g0
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in h:
                h[k] *= a
        for gm, gc in red.terms.items():
            key = mono_mul(u, gm)
            v = h.get(key, 0) - b * gc
            if v:
                h[key] = v
                heapq.heappush(heap, (_neg_key(order.key(key)), key))
            elif key in h:
                del h[key]
        steps += 1
        if steps % 16 == 0 and h:
            content = 0
            for v in h.values():
                content = gcd(content, v)
            if content > 1:
                for k in h:
                    h[k] //= content
    return not h


def is_involutive_basis(basis, division):
    """Local involutivity: every non-multiplicative prolongation reduces to zero."""
    basis = list(basis)
    if not basis:
        return True
    n = basis[0].ring.n
    order = basis[0].ring.order
    lms = [f.lm for f in basis]
    part = division.multiplicative(lms, n)
    if not is_head_autoreduced(basis, division):
        return False
    prim = [f.primitive() for f in basis]
    reducers = [
        _Reducer(f.lm, part[f.lm], f.lc, f.terms, f.lm, Signature(0, ()))
        for f in prim
    ]
    for f in prim:
        for x in sorted(set(range(n)) - part[f.lm]):
            prol = f.mul_mono(unit_mono(n, x))
            if not _vanishes_involutively(prol, reducers, order):
                return False
    return True


def is_minimal_basis(basis, division):
    """No element's head is involutively divisible by the other heads."""
    basis = list(basis)
    if len(basis) <= 1:
        return True
    n = basis[0].ring.n
    for i, f in enumerate(basis):
        rest = [g.lm for j, g in enumerate(basis) if j != i]
        part = division.multiplicative(rest, n)
        for u in rest:
            ok = True
            for k, (x, y) in enumerate(zip(u, f.lm)):
                if x > y or (x < y and k not in part[u]):
                    ok = False
                    break
            if ok:
                return False
    return True
