"""Exact sparse multivariate polynomial arithmetic over Q.

Variables are written in descending order: position 0 of an exponent tuple
belongs to x1, the largest variable, and position n-1 to xn, the smallest.
Monomials are plain tuples of non-negative ints shared by every polynomial
of a ring; coefficients are ints or fractions.Fraction values (both exact).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class PolyError(Exception):
    """Base class for polynomial-layer errors."""


class DimensionError(PolyError):
    """Monomials or polynomials over different variable sets were mixed."""


class ZeroPolynomialError(PolyError):
    """Leading data of the zero polynomial was requested."""


class DivisionError(PolyError):
    """A reduction step was attempted with a non-dividing leading monomial."""


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Componentwise quotient a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        q.append(d)
    return tuple(q)


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(m):
    return sum(m)


def mono_is_one(m):
    return not any(m)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def unit_mono(n, i):
    """The exponent tuple of the variable at position i."""
    m = [0] * n
    m[i] = 1
    return tuple(m)


def ratio(a, b):
    """Exact quotient of two rationals; never falls back to floats."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return Fraction(a) / Fraction(b)


DEGREVLEX = "degrevlex"
LEX = "lex"


class Ordering:
    """A total monomial ordering, either degrevlex or lex.

    Orderings expose `key`, mapping a monomial to a tuple that compares the
    way the monomials do; all sorting in the package goes through it.
    Degrevlex compares total degree first and breaks ties so that the
    monomial with the smaller exponent on the smallest variable wins.
    """

    __slots__ = ("kind",)

    def __init__(self, kind):
        if kind not in (DEGREVLEX, LEX):
            raise ValueError(f"unknown monomial ordering {kind!r}")
        self.kind = kind

    def key(self, m):
        if self.kind == DEGREVLEX:
            k = [sum(m)]
            k.extend(-e for e in reversed(m))
            return tuple(k)
        return tuple(m)

    def compare(self, a, b):
        """-1, 0 or 1 as a <, =, > b in this ordering."""
        if len(a) != len(b):
            raise DimensionError(
                f"cannot compare monomials of lengths {len(a)} and {len(b)}"
            )
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, Ordering) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"Ordering({self.kind!r})"


class PolyRing:
    """Q[x1..xn] with a fixed variable order (descending) and monomial ordering."""

    __slots__ = ("names", "n", "order")

    def __init__(self, names, order=DEGREVLEX):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.n = len(names)
        self.order = order if isinstance(order, Ordering) else Ordering(order)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.n: c})

    def variable(self, i):
        return Polynomial(self, {unit_mono(self.n, i): 1})

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def mono(self, **powers):
        """Exponent tuple from keyword powers, e.g. ring.mono(x1=2, x3=1)."""
        m = [0] * self.n
        for name, e in powers.items():
            m[self.index(name)] = e
        return tuple(m)

    def poly(self, terms):
        """Polynomial from a monomial -> coefficient mapping; drops zeros."""
        clean = {}
        for m, c in terms.items():
            if len(m) != self.n:
                raise DimensionError(
                    f"exponent tuple of length {len(m)} in a ring of {self.n} variables"
                )
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def extend(self, name):
        """Same ring with one extra, smallest variable appended."""
        if name in self.names:
            raise ValueError(f"variable {name!r} already present")
        return PolyRing(self.names + (name,), self.order)

    def lift(self, f):
        """Re-interpret a polynomial of a prefix ring inside this ring."""
        if f.ring.names == self.names:
            return f
        if f.ring.names != self.names[: f.ring.n]:
            raise DimensionError("ring is not an extension of the polynomial's ring")
        pad = (0,) * (self.n - f.ring.n)
        return Polynomial(self, {m + pad: c for m, c in f.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, {self.order.kind!r})"


def _check_same_ring(a, b):
    if a.ring.n != b.ring.n:
        raise DimensionError("polynomials over different variable sets")


class Polynomial:
    """Immutable sparse polynomial.

    `terms` maps exponent tuples to nonzero exact rationals. Term iteration
    for printing and leading-term queries is always resolved through the
    ring ordering, so equal polynomials behave identically everywhere.
    """

    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lm = None
        self._hash = None

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    @property
    def lm(self):
        if self._lm is None:
            if not self.terms:
                raise ZeroPolynomialError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    @property
    def lt(self):
        m = self.lm
        return m, self.terms[m]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def monomials(self):
        """Monomials in descending ring order."""
        return sorted(self.terms, key=self.ring.order.key, reverse=True)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_same_ring(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_same_ring(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) - c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_same_ring(self, other)
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = terms.get(m, 0) + ca * cb
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def mul_term(self, mono, coeff):
        """Product with the single term coeff * mono."""
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        )

    def mul_mono(self, mono):
        return Polynomial(
            self.ring, {mono_mul(m, mono): c for m, c in self.terms.items()}
        )

    # -- normalisation ------------------------------------------------

    def monic(self):
        if not self.terms:
            return self
        c = self.lc
        if c == 1:
            return self
        return Polynomial(
            self.ring, {m: ratio(v, c) for m, v in self.terms.items()}
        )

    def content(self):
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Content-free scaling with integer coefficients and positive lc."""
        if not self.terms:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        if c == 1:
            return self
        terms = {}
        for m, v in self.terms.items():
            w = ratio(v, c)
            terms[m] = w.numerator if w.denominator == 1 else w
        return Polynomial(self.ring, terms)

    # -- reduction and substitution ------------------------------------

    def reduce_step(self, m, g):
        """One division step: self - (c*m / lt(g)) * g, eliminating monomial m.

        m must occur in self and lm(g) must divide m.
        """
        c = self.terms.get(m)
        if not c:
            raise DivisionError("monomial does not occur in the polynomial")
        u = mono_div(m, g.lm)
        if u is None:
            raise DivisionError("leading monomial of the reducer does not divide m")
        return self - g.mul_term(u, ratio(c, g.lc))

    def substitute(self, i, value):
        """Replace the variable at position i by `value` (polynomial or rational)."""
        if not isinstance(value, Polynomial):
            value = self.ring.constant(value)
        _check_same_ring(self, value)
        powers = {0: self.ring.one()}
        out = self.ring.zero()
        for m, c in self.terms.items():
            e = m[i]
            if e not in powers:
                p = powers[max(powers)]
                for k in range(max(powers) + 1, e + 1):
                    p = p * value
                    powers[k] = p
            rest = m[:i] + (0,) + m[i + 1 :]
            out = out + powers[e].mul_term(rest, c)
        return out

    # -- comparisons and printing --------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.n == other.ring.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            neg = c < 0
            body = _term_text(m, -c if neg else c, self.ring.names)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"<poly {self}>"


def _coeff_text(c):
    n, d = c.numerator, c.denominator
    return f"{n}/{d}" if d != 1 else f"{n}"


def _term_text(m, c, names):
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return _coeff_text(c)
    if c != 1:
        factors.insert(0, _coeff_text(c))
    return "*".join(factors)


def homogenize(polys, name=None):
    """Homogenize with a fresh smallest variable; returns (ring, polynomials).

    Already-homogeneous inputs come back unchanged apart from the extended
    variable set. Zero polynomials stay zero.
    """
    if not polys:
        raise ValueError("nothing to homogenize")
    ring = polys[0].ring
    if name is None:
        name = "h"
        k = 0
        while name in ring.names:
            name = f"h{k}"
            k += 1
    new_ring = ring.extend(name)
    out = []
    for f in polys:
        if f.is_zero():
            out.append(new_ring.zero())
            continue
        d = f.degree()
        out.append(
            Polynomial(
                new_ring, {m + (d - mono_deg(m),): c for m, c in f.terms.items()}
            )
        )
    return new_ring, out
