"""Exact coefficient rings.

Three rings cover everything downstream:

  * ``RationalField``   -- arbitrary-precision rationals (gmpy2.mpq),
  * ``CyclotomicField(n)`` -- Q(zeta_n), elements reduced modulo the n-th
    cyclotomic polynomial, so the ring is a field,
  * ``PhaseRing``       -- the Laurent ring Q[q, q^-1] whose generator q
    stands for a formal unit-modulus phase.  Only monomials are units.

Elements are plain immutable Python data (mpq, tuples); the ring object
carries the operations.  Complex conjugation is the Q-linear involution
zeta |-> zeta^(n-1), q |-> q^(-1).
"""

from __future__ import annotations

import re

from gmpy2 import mpq

Q0 = mpq(0)
Q1 = mpq(1)


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    out = [Q0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact division with remainder in Q[x]."""
    a = list(a)
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Q0] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c == 0:
            continue
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    return _poly_trim(q), _poly_trim(a)


def cyclotomic_polynomial(n):
    """Coefficient list (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [-Q1] + [Q0] * (n - 1) + [Q1]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not r
            num = q
    return num


class RingError(Exception):
    pass


class NotAUnitError(RingError):
    pass


class MixedRingError(RingError):
    pass


class Ring:
    """Common interface; subclasses define the element representation."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def from_int(self, n):
        return self.from_rational(mpq(n))

    def is_unit(self, a):
        try:
            self.inv(a)
            return True
        except NotAUnitError:
            return False

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def sum(self, items):
        out = self.zero
        for x in items:
            out = self.add(out, x)
        return out

    def parse(self, text):
        return parse_scalar(self, text)

    def __ne__(self, other):
        return not self.__eq__(other)


class RationalField(Ring):
    name = "rational"

    zero = Q0
    one = Q1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise NotAUnitError("0 has no inverse")
        return 1 / a

    def conj(self, a):
        return a

    def eq(self, a, b):
        return a == b

    def from_rational(self, r):
        return mpq(r)

    def format(self, a):
        return format_rational(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class CyclotomicField(Ring):
    """Q(zeta_n); elements are tuples of mpq of length phi(n)."""

    name = "cyclotomic"

    def __init__(self, order):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        phi = cyclotomic_polynomial(order)
        self.modulus = phi
        self.degree = len(phi) - 1
        self.zero = (Q0,) * self.degree if self.degree else ()
        one = [Q0] * self.degree
        if self.degree:
            one[0] = Q1
        self.one = tuple(one)
        # x^k reduced mod Phi_n, for k up to 2*(deg-1); used by mul.
        self._powers = self._power_table()
        self._conj_table = [self._reduce_power((self.order - 1) * k)
                            for k in range(self.degree)]

    def _power_table(self):
        d = self.degree
        table = []
        for k in range(2 * d - 1 if d else 0):
            table.append(self._reduce_power(k))
        return table

    def _reduce_power(self, k):
        poly = [Q0] * k + [Q1]
        _, r = _poly_divmod(poly, self.modulus)
        r = list(r) + [Q0] * (self.degree - len(r))
        return tuple(r)

    def generator(self):
        if self.degree < 2:
            # zeta_1 = 1, zeta_2 = -1
            return self.from_rational(mpq(1) if self.order == 1 else mpq(-1))
        g = [Q0] * self.degree
        g[1] = Q1
        return tuple(g)

    def reduce(self, coeffs):
        """Reduce an arbitrary coefficient vector in zeta modulo Phi_n."""
        out = [Q0] * self.degree
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            c = mpq(c)
            for i, p in enumerate(self._reduce_power(k) if k >= len(self._powers)
                                  else self._powers[k]):
                if p:
                    out[i] += c * p
        return tuple(out)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        raw = [Q0] * (2 * d - 1 if d else 0)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    raw[i + j] += x * y
        out = [Q0] * d
        for k, c in enumerate(raw):
            if c == 0:
                continue
            if k < d:
                out[k] += c
            else:
                for i, p in enumerate(self._powers[k]):
                    if p:
                        out[i] += c * p
        return tuple(out)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise NotAUnitError("0 has no inverse")
        # extended Euclid in Q[x] against the (irreducible) modulus
        r0, r1 = list(self.modulus), _poly_trim(a)
        s0, s1 = [], [Q1]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_trim(
                [x - y for x, y in
                 zip(s0 + [Q0] * max(0, len(_poly_mul(q, s1)) - len(s0)),
                     _poly_mul(q, s1) + [Q0] * max(0, len(s0) - len(_poly_mul(q, s1))))])
        # r0 is the gcd, a nonzero constant since Phi_n is irreducible
        c = r0[0]
        inv = [x / c for x in s0]
        inv += [Q0] * (self.degree - len(inv))
        return tuple(inv[:self.degree])

    def conj(self, a):
        out = [Q0] * self.degree
        for k, c in enumerate(a):
            if c == 0:
                continue
            for i, p in enumerate(self._conj_table[k]):
                if p:
                    out[i] += c * p
        return tuple(out)

    def eq(self, a, b):
        return a == b

    def from_rational(self, r):
        out = [Q0] * self.degree
        if self.degree:
            out[0] = mpq(r)
        return tuple(out)

    def format(self, a):
        terms = []
        for k, c in enumerate(a):
            if c == 0:
                continue
            terms.append(_format_term(c, "z", k, first=not terms))
        return "".join(terms) if terms else "0"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


class PhaseRing(Ring):
    """Laurent ring Q[q, q^-1] of formal phases.

    Elements are tuples of (exponent, mpq) pairs sorted by exponent, no
    zero coefficients.  Units are exactly the single-term elements.
    """

    name = "phase"

    zero = ()
    one = ((0, Q1),)

    def monomial(self, k, c=Q1):
        c = mpq(c)
        return ((k, c),) if c != 0 else ()

    def add(self, a, b):
        d = dict(a)
        for k, c in b:
            v = d.get(k, Q0) + c
            if v == 0:
                d.pop(k, None)
            else:
                d[k] = v
        return tuple(sorted(d.items()))

    def neg(self, a):
        return tuple((k, -c) for k, c in a)

    def mul(self, a, b):
        d = {}
        for k1, c1 in a:
            for k2, c2 in b:
                k = k1 + k2
                v = d.get(k, Q0) + c1 * c2
                if v == 0:
                    d.pop(k, None)
                else:
                    d[k] = v
        return tuple(sorted(d.items()))

    def inv(self, a):
        if len(a) != 1:
            raise NotAUnitError("only monomials are units in the phase ring")
        k, c = a[0]
        return ((-k, 1 / c),)

    def conj(self, a):
        return tuple(sorted((-k, c) for k, c in a))

    def eq(self, a, b):
        return a == b

    def from_rational(self, r):
        r = mpq(r)
        return ((0, r),) if r != 0 else ()

    def divide_exact(self, a, b):
        """Exact division in the Laurent ring; raises if b does not divide a."""
        if not b:
            raise ZeroDivisionError("phase division by zero")
        if not a:
            return ()
        shift_a, shift_b = a[0][0], b[0][0]
        pa = [Q0] * (a[-1][0] - shift_a + 1)
        for k, c in a:
            pa[k - shift_a] = c
        pb = [Q0] * (b[-1][0] - shift_b + 1)
        for k, c in b:
            pb[k - shift_b] = c
        q, r = _poly_divmod(pa, pb)
        if r:
            raise NotAUnitError("not divisible in the Laurent ring")
        shift = shift_a - shift_b
        return tuple((i + shift, c) for i, c in enumerate(q) if c != 0)

    def format(self, a):
        terms = []
        for k, c in a:
            terms.append(_format_term(c, "q", k, first=not terms))
        return "".join(terms) if terms else "0"

    def __eq__(self, other):
        return isinstance(other, PhaseRing)

    def __hash__(self):
        return hash("phase")

    def __repr__(self):
        return "PhaseRing()"


class PhaseFractionField(Ring):
    """Fraction field of the phase ring, used internally by linear solves.

    Elements are (numerator, denominator) pairs of PhaseRing elements with
    nonzero denominator.  No gcd reduction is attempted beyond catching
    exact divisibility on demand; ``to_phase`` certifies that a solve
    result is genuinely Laurent.
    """

    name = "phase-fraction"

    def __init__(self, base=None):
        self.base = base or PhaseRing()
        self.zero = (self.base.zero, self.base.one)
        self.one = (self.base.one, self.base.one)

    def lift(self, a):
        return (a, self.base.one)

    def add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        n = self.base.add(self.base.mul(n1, d2), self.base.mul(n2, d1))
        return self._norm(n, self.base.mul(d1, d2))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def mul(self, a, b):
        return self._norm(self.base.mul(a[0], b[0]), self.base.mul(a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise NotAUnitError("0 has no inverse")
        return (a[1], a[0])

    def conj(self, a):
        return (self.base.conj(a[0]), self.base.conj(a[1]))

    def eq(self, a, b):
        return self.base.eq(self.base.mul(a[0], b[1]), self.base.mul(a[1], b[0]))

    def from_rational(self, r):
        return (self.base.from_rational(r), self.base.one)

    def _norm(self, n, d):
        if not n:
            return (self.base.zero, self.base.one)
        try:
            return (self.base.divide_exact(n, d), self.base.one)
        except NotAUnitError:
            return (n, d)

    def to_phase(self, a):
        """Certify the fraction is Laurent and return it as a PhaseRing element."""
        return self.base.divide_exact(a[0], a[1])

    def format(self, a):
        if self.base.eq(a[1], self.base.one):
            return self.base.format(a[0])
        return f"({self.base.format(a[0])})/({self.base.format(a[1])})"

    def __eq__(self, other):
        return isinstance(other, PhaseFractionField)

    def __hash__(self):
        return hash("phase-fraction")


# ---------------------------------------------------------------------------
# textual scalar syntax: rationals `p/q`, cyclotomic generator `z`, phase `q`,
# exponentiation `^`, e.g. `-1/3*z^2`.

_TOKEN = re.compile(r"\s*([0-9]+(?:/[0-9]+)?|[zq]|\^|\*|\+|-|\(|\))")


def format_rational(r):
    return str(r)


def _format_term(c, sym, k, first):
    sign = "-" if c < 0 else ("" if first else "+")
    c = abs(c)
    if k == 0:
        return f"{sign}{c}"
    body = sym if k == 1 else f"{sym}^{k}"
    if c == 1:
        return f"{sign}{body}"
    return f"{sign}{c}*{body}"


class ScalarSyntaxError(ValueError):
    pass


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ScalarSyntaxError(f"bad scalar syntax at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_scalar(ring, text):
    """Parse the textual scalar syntax into an element of ``ring``.

    The generator symbol is ``z`` for a cyclotomic field and ``q`` for the
    phase ring; in a cyclotomic field ``q`` is accepted as an alias for the
    root of unity (the presentations write the deformation parameter that
    way).
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise ScalarSyntaxError("unexpected end of input")
        pos += 1
        return toks[pos - 1]

    def gen_element():
        if isinstance(ring, CyclotomicField):
            return ring.generator()
        if isinstance(ring, PhaseRing):
            return ring.monomial(1)
        raise ScalarSyntaxError(f"ring {ring.name} has no generator symbol")

    def parse_factor():
        tok = take()
        if tok == "(":
            v = parse_sum()
            if take() != ")":
                raise ScalarSyntaxError("unbalanced parenthesis")
        elif tok in ("z", "q"):
            v = gen_element()
        elif tok is not None and tok[0].isdigit():
            v = ring.from_rational(mpq(tok))
        else:
            raise ScalarSyntaxError(f"unexpected token {tok!r}")
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            etok = take()
            if etok is None or not etok.isdigit():
                raise ScalarSyntaxError("expected integer exponent")
            v = ring.pow(v, sign * int(etok))
        return v

    def parse_product():
        v = parse_factor()
        while peek() == "*":
            take()
            v = ring.mul(v, parse_factor())
        return v

    def parse_sum():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        v = parse_product()
        if sign < 0:
            v = ring.neg(v)
        while peek() in ("+", "-"):
            s = -1 if take() == "-" else 1
            w = parse_product()
            v = ring.add(v, w if s > 0 else ring.neg(w))
        return v

    v = parse_sum()
    if pos != len(toks):
        raise ScalarSyntaxError(f"trailing tokens {toks[pos:]}")
    return v
