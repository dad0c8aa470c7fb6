"""Quasi-stable position: detection and search for a coordinate change.

An ideal has a finite Pommaret basis exactly when its leading-term ideal is
quasi stable. `check_position` detects failure on the heads of a minimal
Janet basis by comparing Janet and Pommaret multiplicative variables; the
search loop applies random elementary linear changes suggested by the
witness until the test passes, recomputing Janet bases with Hilbert-driven
pruning against the Hilbert function of the original ideal (which linear
changes leave untouched).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .divisions import (
    EmptySetError,
    JANET,
    POMMARET,
    janet_multiplicative,
    mono_class,
    pommaret_multiplicative,
)
from .engine import AUTO_CAP, involutive_basis
from .hilbert import HilbertFunction
from .stats import RunStats


@dataclass(frozen=True)
class LinearChange:
    """Elementary change x_target -> x_target + scalar * x_addend."""

    target: int
    addend: int
    scalar: Fraction

    def __post_init__(self):
        if self.target == self.addend:
            raise ValueError("target and addend variables must differ")
        if not self.scalar:
            raise ValueError("zero scalar makes no change")

    def as_dict(self, names):
        return {
            "target": names[self.target],
            "addend": names[self.addend],
            "scalar": str(Fraction(self.scalar)),
        }

    @classmethod
    def from_dict(cls, data, names):
        return cls(
            names.index(data["target"]),
            names.index(data["addend"]),
            Fraction(data["scalar"]),
        )


@dataclass(frozen=True)
class PositionVerdict:
    """Outcome of the position test.

    On failure, `witness` is the smallest-position variable that is Janet
    but not Pommaret multiplicative for the offending head, and `cls_var`
    the class variable of that head; the suggested change is
    cls_var -> cls_var + c * witness.
    """

    ok: bool
    witness: int | None = None
    cls_var: int | None = None


class PositionSearchError(RuntimeError):
    def __init__(self, verdict, retries):
        super().__init__(
            f"no accepted coordinate change after {retries} draws for "
            f"obstruction (witness={verdict.witness}, class={verdict.cls_var})"
        )
        self.verdict = verdict
        self.retries = retries


def check_position(lms, order):
    """Compare Janet against Pommaret multiplicative variables head by head.

    Heads are scanned in ascending order; the first one whose two
    multiplicative sets differ produces the failure verdict. Passing heads
    of a minimal Janet basis certifies a finite Pommaret basis.
    """
    lms = list(dict.fromkeys(lms))
    if not lms:
        raise EmptySetError("position test on an empty head set")
    n = len(lms[0])
    jpart = janet_multiplicative(lms, n)
    for u in sorted(lms, key=order.key):
        jm = jpart[u]
        pm = pommaret_multiplicative(u, n)
        if jm != pm:
            extra = sorted(jm - pm)
            if not extra:
                # Pommaret strictly larger than Janet cannot suggest a change;
                # keep scanning for a usable witness.
                continue
            return PositionVerdict(False, extra[0], mono_class(u))
    return PositionVerdict(True)


def is_quasi_stable(lms):
    """Definition-level quasi-stability test for a monomial ideal.

    For every generator m with full x_i-power s and every j < i there must
    be a t with x_j^t * m / x_i^s in the ideal. Membership of a monomial is
    divisibility by some generator, and the i-th exponent of a candidate
    divisor must vanish while the j-th is absorbed by t, so the check is
    exact without searching t.
    """
    lms = list(dict.fromkeys(lms))
    if not lms:
        return False
    n = len(lms[0])
    for m in lms:
        for i in range(n):
            if not m[i]:
                continue
            quot = m[:i] + (0,) + m[i + 1 :]
            for j in range(i):
                witnessed = False
                for u in lms:
                    if all(u[l] <= quot[l] for l in range(n) if l != j):
                        witnessed = True
                        break
                if not witnessed:
                    return False
    return True


def apply_change(polys, change):
    """Substitute x_target -> x_target + scalar * x_addend in every polynomial."""
    if not polys:
        return []
    ring = polys[0].ring
    image = ring.variable(change.target) + ring.variable(change.addend) * change.scalar
    return [f.substitute(change.target, image) for f in polys]


def replay_changes(changes, polys):
    """Apply a recorded change sequence, in order, to fresh generators."""
    out = list(polys)
    for change in changes:
        out = apply_change(out, change)
    return out


@dataclass
class ChangeLog:
    """Accepted changes, per-step run statistics, and the final Janet basis."""

    changes: list
    steps: list
    final_basis: list

    @property
    def verdicts(self):
        return len(self.changes)


def find_quasi_stable_position(
    polys,
    *,
    seed=0,
    max_retries=25,
    hilbert_driven=True,
    on_step=None,
):
    """Search a linear change of coordinates giving a finite Pommaret basis.

    The input must be homogeneous. Returns (ChangeLog, aggregated RunStats);
    the aggregate sums the counters of every Janet basis computed along the
    way, accepted or rejected, and `chen` counts accepted changes.

    Scalars are drawn from a seeded generator, uniformly from {1..101} and
    doubling the range on every retry for the same obstruction. A draw is
    accepted only when it changes the test verdict; `max_retries` draws per
    obstruction are attempted before giving up.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise ValueError("empty generating set")
    for f in polys:
        if any(sum(m) != f.degree() for m in f.terms):
            raise ValueError("the position search needs homogeneous generators")
    ring = polys[0].ring
    order = ring.order

    total = RunStats(algorithm="quasistable")
    basis, st = involutive_basis(polys, JANET)
    total.absorb(st)
    steps = [st]
    target = HilbertFunction.from_basis(basis, JANET)
    verdict = check_position([f.lm for f in basis], order)
    changes = []
    rng = random.Random(seed)

    while not verdict.ok:
        accepted = False
        for attempt in range(max_retries):
            scalar = Fraction(rng.randint(1, 101 << attempt))
            change = LinearChange(verdict.cls_var, verdict.witness, scalar)
            moved = [f.primitive() for f in apply_change(basis, change)]
            trial, st = involutive_basis(
                moved,
                JANET,
                hilbert_target=target if hilbert_driven else None,
            )
            total.absorb(st)
            steps.append(st)
            if on_step is not None:
                on_step(change, st)
            new_verdict = check_position([f.lm for f in trial], order)
            if new_verdict != verdict:
                changes.append(change)
                basis = trial
                verdict = new_verdict
                accepted = True
                total.chen += 1
                break
        if not accepted:
            raise PositionSearchError(verdict, max_retries)

    total.basis_size = len(basis)
    total.max_deg = max(f.degree() for f in basis)
    return ChangeLog(changes, steps, basis), total


def pommaret_basis(polys, *, degree_cap=AUTO_CAP):
    """Pommaret basis via the completion engine.

    Finite only for ideals in quasi-stable position; elsewhere the degree
    guard aborts with a diagnostic carrying the partial basis.
    """
    return involutive_basis(polys, POMMARET, degree_cap=degree_cap)
