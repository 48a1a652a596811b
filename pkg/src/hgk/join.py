"""Braided join algebras over an exact piecewise-polynomial interval model.

The interval C([0,1]) is modeled by continuous piecewise polynomials with
rational breakpoints, so evaluation at 0, 1/2 and 1 is exact and gluing of
restrictions works on the nose.  On top of it:

  * ``IntervalFunction``: one polynomial per subinterval, continuity
    validated at the interior breakpoints; also a literal syntax
    ``piecewise{[0,1/2]: 2*t; [1/2,1]: 1}`` for fixtures.
  * ``JoinAlgebra``: elements are finite sums of function (x) pair-label
    over the braided tensor square of a Galois object, subject to the
    boundary conditions "value at 0 in C (x) A, value at 1 in A (x) C";
    products combine the pointwise function product with the braided
    product, the diagonal coaction acts on the labels only.
  * pullback decomposition at 1/2 with exact gluing, and the transport of
    the two halves onto H (x) A through the canonical map, with the
    half-specific boundary conditions.
  * the two strong connections on the half models, built from the right
    translation map (and, for the second one, the left coaction), checked
    by ``galois.verify_strong_connection`` on the common algebraic core.
  * exact invariant computations for truncations of the join, compared
    with the matching truncation of the suspension of H.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .galois import ComoduleAlgebra, braided_star
from .hopf import TensorAlgebra
from .linalg import LinearMap, kernel_basis, vec_clean

MPQ_ZERO = mpq(0)
MPQ_ONE = mpq(1)
MPQ_HALF = mpq(1, 2)


# -- exact polynomials with ring coefficients ----------------------------------

def _ptrim(ring, coeffs):
    c = list(coeffs)
    while c and ring.is_zero(c[-1]):
        c.pop()
    return tuple(c)


def _padd(ring, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ring.zero
        y = b[i] if i < len(b) else ring.zero
        out.append(ring.add(x, y))
    return _ptrim(ring, out)


def _pscale(ring, c, a):
    return _ptrim(ring, [ring.mul(c, x) for x in a])


def _pmul(ring, a, b):
    if not a or not b:
        return ()
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ring.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return _ptrim(ring, out)


def _peval(ring, coeffs, r):
    """Exact value at the rational point r (Horner over the ring)."""
    acc = ring.zero
    rr = ring.from_rational(mpq(r))
    for c in reversed(coeffs):
        acc = ring.add(ring.mul(acc, rr), c)
    return acc


class IntervalFunction:
    """Continuous piecewise polynomial on a rational interval.

    ``breakpoints`` is a strictly increasing tuple of rationals covering
    the interval; ``pieces[i]`` is the coefficient tuple of the polynomial
    used on [breakpoints[i], breakpoints[i+1]].  Coefficients live in the
    scalar ring so function and algebra coefficients mix freely.
    """

    __slots__ = ("ring", "breakpoints", "pieces")

    def __init__(self, ring, breakpoints, pieces):
        bps = tuple(mpq(b) for b in breakpoints)
        if len(bps) < 2 or any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        if len(pieces) != len(bps) - 1:
            raise ValueError("need one polynomial per subinterval")
        pieces = tuple(_ptrim(ring, p) for p in pieces)
        for i in range(len(pieces) - 1):
            left = _peval(ring, pieces[i], bps[i + 1])
            right = _peval(ring, pieces[i + 1], bps[i + 1])
            if not ring.eq(left, right):
                raise ValueError(
                    f"discontinuous at t = {bps[i + 1]}: "
                    f"{ring.format(left)} != {ring.format(right)}")
        self.ring = ring
        self.breakpoints = bps
        self.pieces = pieces

    @classmethod
    def constant(cls, ring, c, lo=MPQ_ZERO, hi=MPQ_ONE):
        return cls(ring, (lo, hi), ((c,) if not ring.is_zero(c) else (),))

    @classmethod
    def polynomial(cls, ring, coeffs, lo=MPQ_ZERO, hi=MPQ_ONE):
        return cls(ring, (lo, hi), (tuple(coeffs),))

    @property
    def lo(self):
        return self.breakpoints[0]

    @property
    def hi(self):
        return self.breakpoints[-1]

    def degree(self):
        return max((len(p) - 1 for p in self.pieces if p), default=-1)

    def __call__(self, r):
        r = mpq(r)
        if r < self.lo or r > self.hi:
            raise ValueError(f"{r} outside [{self.lo}, {self.hi}]")
        for i in range(len(self.pieces)):
            if r <= self.breakpoints[i + 1]:
                return _peval(self.ring, self.pieces[i], r)
        return _peval(self.ring, self.pieces[-1], r)

    def _refined(self, bps):
        """Piece list for a refined breakpoint tuple (superset, same span)."""
        out = []
        j = 0
        for i in range(len(bps) - 1):
            while self.breakpoints[j + 1] <= bps[i]:
                j += 1
            out.append(self.pieces[j])
        return tuple(out)

    def _common(self, other):
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        if self.lo != other.lo or self.hi != other.hi:
            raise ValueError("mismatched intervals")
        bps = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
        return bps, self._refined(bps), other._refined(bps)

    def add(self, other):
        bps, p1, p2 = self._common(other)
        pieces = tuple(_padd(self.ring, a, b) for a, b in zip(p1, p2))
        return IntervalFunction(self.ring, bps, pieces)

    def mul(self, other):
        bps, p1, p2 = self._common(other)
        pieces = tuple(_pmul(self.ring, a, b) for a, b in zip(p1, p2))
        return IntervalFunction(self.ring, bps, pieces)

    def scale(self, c):
        return IntervalFunction(
            self.ring, self.breakpoints,
            tuple(_pscale(self.ring, c, p) for p in self.pieces))

    def neg(self):
        return self.scale(self.ring.neg(self.ring.one))

    def conj(self):
        return IntervalFunction(
            self.ring, self.breakpoints,
            tuple(tuple(self.ring.conj(c) for c in p) for p in self.pieces))

    def is_zero(self):
        return all(not p for p in self.pieces)

    def eq(self, other):
        bps, p1, p2 = self._common(other)
        return all(len(a) == len(b)
                   and all(self.ring.eq(x, y) for x, y in zip(a, b))
                   for a, b in zip(p1, p2))

    def restrict(self, lo, hi):
        lo, hi = mpq(lo), mpq(hi)
        if lo < self.lo or hi > self.hi or lo >= hi:
            raise ValueError("bad restriction interval")
        bps = [lo]
        pieces = []
        for i in range(len(self.pieces)):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            if b <= lo or a >= hi:
                continue
            pieces.append(self.pieces[i])
            bps.append(min(b, hi))
        bps[-1] = hi
        return IntervalFunction(self.ring, bps, pieces)

    def format(self):
        parts = []
        for i, p in enumerate(self.pieces):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            parts.append(f"[{a},{b}]: {format_poly(self.ring, p)}")
        return "piecewise{" + "; ".join(parts) + "}"

    def __repr__(self):
        return f"IntervalFunction({self.format()})"


def glue_functions(f1, f2):
    """Concatenate adjacent interval functions (values must agree where
    the intervals meet)."""
    if f1.hi != f2.lo:
        raise ValueError("intervals do not meet")
    if not f1.ring.eq(f1(f1.hi), f2(f2.lo)):
        raise ValueError(f"values disagree at t = {f1.hi}")
    return IntervalFunction(
        f1.ring, f1.breakpoints + f2.breakpoints[1:], f1.pieces + f2.pieces)


def format_poly(ring, coeffs):
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if ring.is_zero(c):
            continue
        mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
        cf = ring.format(c)
        if i == 0:
            parts.append(cf)
        elif cf == "1":
            parts.append(mono)
        else:
            cf = f"({cf})" if ("+" in cf or cf.count("-") > (cf[0] == "-")) \
                else cf
            parts.append(f"{cf}*{mono}")
    return " + ".join(parts)


# -- piecewise literal parsing ---------------------------------------------------

class PiecewiseSyntaxError(ValueError):
    pass


_PW_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|t|[()^*+-])")


def _parse_poly(ring, text):
    """Polynomial in t with scalar coefficients: numbers, t, ^, *, +, -, ()."""
    toks, pos = [], 0
    while pos < len(text):
        m = _PW_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PiecewiseSyntaxError(
                    f"bad polynomial syntax at {text[pos:]!r}")
            break
        toks.append(m.group(1))
        pos = m.end()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take():
        nonlocal i
        if i >= len(toks):
            raise PiecewiseSyntaxError("unexpected end of polynomial")
        i += 1
        return toks[i - 1]

    def factor():
        tok = take()
        if tok == "(":
            v = psum()
            if take() != ")":
                raise PiecewiseSyntaxError("unbalanced parenthesis")
        elif tok == "t":
            v = (ring.zero, ring.one)
        elif tok[0].isdigit():
            v = (ring.from_rational(mpq(tok)),)
        else:
            raise PiecewiseSyntaxError(f"unexpected token {tok!r}")
        if peek() == "^":
            take()
            etok = take()
            if not etok.isdigit():
                raise PiecewiseSyntaxError("expected integer exponent")
            out = (ring.one,)
            for _ in range(int(etok)):
                out = _pmul(ring, out, v)
            v = out
        return v

    def product():
        v = factor()
        while peek() == "*":
            take()
            v = _pmul(ring, v, factor())
        return v

    def psum():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        v = product()
        if sign < 0:
            v = _pscale(ring, ring.neg(ring.one), v)
        while peek() in ("+", "-"):
            s = -1 if take() == "-" else 1
            w = product()
            if s < 0:
                w = _pscale(ring, ring.neg(ring.one), w)
            v = _padd(ring, v, w)
        return v

    v = psum()
    if i != len(toks):
        raise PiecewiseSyntaxError(f"trailing tokens {toks[i:]}")
    return _ptrim(ring, v)


def parse_piecewise(ring, text):
    """Parse ``piecewise{[0,1/2]: 2*t; [1/2,1]: 1}`` into an
    IntervalFunction (continuity is validated by the constructor)."""
    m = re.fullmatch(r"\s*piecewise\s*\{(.*)\}\s*", text, re.S)
    if not m:
        raise PiecewiseSyntaxError("expected piecewise{...}")
    bps, pieces = [], []
    for part in m.group(1).split(";"):
        part = part.strip()
        if not part:
            continue
        pm = re.fullmatch(
            r"\[\s*([0-9/]+)\s*,\s*([0-9/]+)\s*\]\s*:\s*(.*)", part, re.S)
        if not pm:
            raise PiecewiseSyntaxError(f"bad piece {part!r}")
        a, b = mpq(pm.group(1)), mpq(pm.group(2))
        if bps and a != bps[-1]:
            raise PiecewiseSyntaxError(
                f"pieces not contiguous at t = {a}")
        if not bps:
            bps.append(a)
        bps.append(b)
        pieces.append(_parse_poly(ring, pm.group(3)))
    try:
        return IntervalFunction(ring, bps, pieces)
    except ValueError as exc:
        raise PiecewiseSyntaxError(str(exc)) from None


# -- the join algebra -------------------------------------------------------------

class JoinAlgebra:
    """The join of a Galois object with itself along its Hopf algebra.

    Elements are dicts mapping braided-square pair labels to
    IntervalFunctions on [0,1]; membership requires the value at 0 to have
    only unit left legs and the value at 1 only unit right legs.  The
    product is (pointwise function product) (x) (braided product); the
    diagonal coaction acts on labels only.
    """

    def __init__(self, square, name=None):
        self.square = square
        self.comodule = square.comodule
        self.ring = square.ring
        self.name = name
        self.unit_a = self.comodule.algebra.unit_label()
        self.unit_h = self.comodule.hopf.algebra.unit_label()

    # -- element plumbing ------------------------------------------------------

    def element(self, terms):
        """Build an element from (function, pair_label[, scalar]) terms."""
        out = {}
        for term in terms:
            if len(term) == 2:
                f, label = term
            else:
                f, label, c = term
                f = f.scale(c)
            if label in out:
                out[label] = out[label].add(f)
            else:
                out[label] = f
        return self._clean(out)

    def _clean(self, x):
        return {l: f for l, f in x.items() if not f.is_zero()}

    def one(self):
        return {(self.unit_a, self.unit_a):
                IntervalFunction.constant(self.ring, self.ring.one)}

    def add(self, x, y):
        out = dict(x)
        for l, f in y.items():
            out[l] = out[l].add(f) if l in out else f
        return self._clean(out)

    def scale(self, c, x):
        return self._clean({l: f.scale(c) for l, f in x.items()})

    def eq(self, x, y):
        x, y = self._clean(x), self._clean(y)
        if set(x) != set(y):
            return False
        return all(x[l].eq(y[l]) for l in x)

    def evaluate(self, x, r):
        """The element of the braided square at the rational point r."""
        out = {}
        for l, f in x.items():
            v = f(r)
            if not self.ring.is_zero(v):
                out[l] = v
        return out

    # -- membership and product -------------------------------------------------

    def membership(self, x):
        """Both boundary conditions, with the offending components as
        witnesses: at 0 every label needs a unit left leg, at 1 a unit
        right leg."""
        witnesses = []
        for l, v in self.evaluate(x, MPQ_ZERO).items():
            if l[0] != self.unit_a:
                witnesses.append({"endpoint": 0, "label": l,
                                  "value": self.ring.format(v)})
        for l, v in self.evaluate(x, MPQ_ONE).items():
            if l[1] != self.unit_a:
                witnesses.append({"endpoint": 1, "label": l,
                                  "value": self.ring.format(v)})
        return (not witnesses), witnesses

    def mul(self, x, y):
        out = {}
        for l1, f1 in x.items():
            for l2, f2 in y.items():
                f = f1.mul(f2)
                for l, c in self.square.mul_labels(l1, l2).items():
                    g = f.scale(c)
                    out[l] = out[l].add(g) if l in out else g
        return self._clean(out)

    def star(self, x, star_h, star_a):
        """The braided star, label-wise; functions are conjugated."""
        out = {}
        for l, f in x.items():
            fc = f.conj()
            img = braided_star(self.comodule, star_h, star_a,
                               {l: self.ring.one})
            for l2, c in img.items():
                g = fc.scale(c)
                out[l2] = out[l2].add(g) if l2 in out else g
        return self._clean(out)

    # -- coaction ----------------------------------------------------------------

    def diagonal_coaction(self, x):
        """dict (pair_label, h_label) -> IntervalFunction."""
        out = {}
        for l, f in x.items():
            for (p, h), c in self.square.diagonal_coaction_label(l).items():
                g = f.scale(c)
                k = (p, h)
                out[k] = out[k].add(g) if k in out else g
        return {k: g for k, g in out.items() if not g.is_zero()}

    def coaction_components(self, x):
        """Split the coaction by the Hopf leg: dict h -> join element."""
        comps = {}
        for (p, h), g in self.diagonal_coaction(x).items():
            comps.setdefault(h, {})[p] = g
        return comps

    def coaction_lands_in_join(self, x):
        """Every Hopf-leg component of the coaction must again satisfy the
        join boundary conditions."""
        for h, comp in self.coaction_components(x).items():
            ok, wit = self.membership(comp)
            if not ok:
                return False, {"hopf_label": h, "witnesses": wit}
        return True, None

    # -- pullback at 1/2 ---------------------------------------------------------

    def pullback_decompose(self, x):
        left = {l: f.restrict(MPQ_ZERO, MPQ_HALF) for l, f in x.items()}
        right = {l: f.restrict(MPQ_HALF, MPQ_ONE) for l, f in x.items()}
        return left, right

    def glue(self, left, right):
        """Inverse of the decomposition; the two restrictions must agree
        at 1/2 componentwise."""
        out = {}
        ring = self.ring
        zero_l = IntervalFunction.constant(ring, ring.zero, MPQ_ZERO, MPQ_HALF)
        zero_r = IntervalFunction.constant(ring, ring.zero, MPQ_HALF, MPQ_ONE)
        for l in set(left) | set(right):
            f = glue_functions(left.get(l, zero_l), right.get(l, zero_r))
            if not f.is_zero():
                out[l] = f
        return out

    def half_models(self, x):
        """Transport the two restrictions onto H (x) A legs through the
        left canonical map: dicts (h_label, a_label) -> IntervalFunction."""
        can = self.comodule.left_can()
        left, right = self.pullback_decompose(x)

        def push(half):
            out = {}
            for l, f in half.items():
                for k, c in can({l: self.ring.one}).items():
                    g = f.scale(c)
                    out[k] = out[k].add(g) if k in out else g
            return {k: g for k, g in out.items() if not g.is_zero()}

        return push(left), push(right)

    def half_boundary_check(self, x):
        """The transported halves satisfy the half-specific boundary
        conditions: the first half has a scalar Hopf leg at 0, the second
        half lands in the image of the left coaction at 1."""
        b1, b2 = self.half_models(x)
        witnesses = []
        v0 = {}
        for (h, a), g in b1.items():
            c = g(MPQ_ZERO)
            if not self.ring.is_zero(c):
                v0[(h, a)] = c
        for (h, a), c in v0.items():
            if h != self.unit_h:
                witnesses.append({"which": 1, "label": (h, a),
                                  "value": self.ring.format(c)})
        v1 = {}
        for (h, a), g in b2.items():
            c = g(MPQ_ONE)
            if not self.ring.is_zero(c):
                v1[(h, a)] = c
        if not in_left_coaction_image(self.comodule, v1):
            witnesses.append({"which": 2, "value at 1": sorted(map(str, v1))})
        return (not witnesses), witnesses


def in_left_coaction_image(C, elem):
    """Whether an element of H (x) A lies in the image of the left
    coaction: contract the Hopf leg with the counit and re-apply."""
    ring = C.ring
    contracted = {}
    for (h, a), c in elem.items():
        v = ring.mul(c, C.hopf.counit_label(h))
        if not ring.is_zero(v):
            contracted[a] = ring.add(contracted.get(a, ring.zero), v)
    back = C.left_coaction(vec_clean(ring, contracted))
    back = vec_clean(ring, back)
    elem = vec_clean(ring, elem)
    if set(back) != set(elem):
        return False
    return all(ring.eq(back[k], elem[k]) for k in back)


# -- strong connections on the half models --------------------------------------

def half_model_comodule(C, name=None):
    """The common algebraic core H (x) A of both half models, as a right
    comodule algebra: the canonical map identifies each half of the join
    with functions into H (x) A, intertwining the diagonal coaction with
    id (x) (right coaction)."""
    P = TensorAlgebra([C.hopf.algebra, C.algebra])

    def rule(label):
        h, a = label
        return {((h, a0), h1): c
                for (a0, h1), c in C.right_coaction_label(a).items()}

    return ComoduleAlgebra(P, C.hopf, right_rule=rule,
                           name=name or "half-model")


def strong_connection(C, which):
    """The two strong connections on the half models, as label rules
    h -> element of (H (x) A) (x) (H (x) A).

    The first puts the right translation map in the carrier legs with unit
    Hopf legs (so its values satisfy the first half's boundary condition);
    the second applies the left coaction to both translation legs (landing
    in the image of the left coaction, the second half's condition).
    """
    ring = C.ring
    unit_h = C.hopf.algebra.unit_label()

    if which == 1:
        def ell(h):
            return {((unit_h, t1), (unit_h, t2)): c
                    for (t1, t2), c in C.right_translation_label(h).items()}
    elif which == 2:
        def ell(h):
            out = {}
            for (t1, t2), c in C.right_translation_label(h).items():
                for (g1, a1), x in C.left_coaction_label(t1).items():
                    cx = ring.mul(c, x)
                    for (g2, a2), y in C.left_coaction_label(t2).items():
                        k = ((g1, a1), (g2, a2))
                        s = ring.add(out.get(k, ring.zero), ring.mul(cx, y))
                        if ring.is_zero(s):
                            out.pop(k, None)
                        else:
                            out[k] = s
            return out
    else:
        raise ValueError("which must be 1 or 2")
    return ell


# -- invariants of truncations ----------------------------------------------------

def pair_invariant_basis(square, labels=None):
    """Kernel of (diagonal coaction - id (x) 1) on the given pair labels."""
    C = square.comodule
    ring = C.ring
    unit_h = C.hopf.algebra.unit_label()
    if labels is None:
        labels = square.basis()

    def defect(p):
        out = dict(square.diagonal_coaction_label(p))
        k = (p, unit_h)
        v = ring.sub(out.get(k, ring.zero), ring.one)
        if ring.is_zero(v):
            out.pop(k, None)
        else:
            out[k] = v
        return out

    return kernel_basis(LinearMap(ring, defect), list(labels))


def element_is_invariant(square, elem):
    """Whether the diagonal coaction fixes the element (value elem (x) 1)."""
    C = square.comodule
    ring = C.ring
    unit_h = C.hopf.algebra.unit_label()
    rho = {}
    for p, c in elem.items():
        for k, x in square.diagonal_coaction_label(p).items():
            s = ring.add(rho.get(k, ring.zero), ring.mul(c, x))
            if ring.is_zero(s):
                rho.pop(k, None)
            else:
                rho[k] = s
    target = {(p, unit_h): c for p, c in elem.items()}
    if set(rho) != set(target):
        return False
    return all(ring.eq(rho[k], target[k]) for k in rho)


def pair_invariant_basis_via_translation(square):
    """Invariant basis of the braided square of a finite Galois object.

    Uses the fact (verified elsewhere on the same objects) that the left
    canonical map is a coaction-intertwining algebra isomorphism onto
    H (x) A: invariants then correspond to H (x) (right coinvariants of A),
    and the preimages of h (x) 1 are exactly the translation-map values.
    Each candidate is re-checked for invariance here, and the carrier's
    right coinvariants are confirmed to be scalar, so the family is a
    basis and its length is the full invariant dimension.
    """
    C = square.comodule
    co = C.coinvariant_basis(side="right")
    if len(co) != 1:
        raise ValueError(
            f"carrier has {len(co)}-dimensional right coinvariants; "
            "the translation-map basis only applies to the scalar case")
    out = []
    for h in C.hopf.algebra.basis():
        v = C.translation_label(h)
        if not element_is_invariant(square, v):
            raise ValueError(f"translation value at {h!r} is not invariant")
        out.append(v)
    return out


def suspension_truncation_dimension(degree, window_dim):
    """Dimension of {g in poly_<=degree (x) H-window | g(0), g(1) scalar}:
    a free coefficient of the unit monomial plus doubly-vanishing
    coefficients for the rest."""
    if degree < 2:
        raise ValueError("need degree >= 2")
    return (degree + 1) + (window_dim - 1) * (degree - 1)


class SuspensionModel:
    """Functions into a window of a Hopf algebra with scalar boundary
    values, spanned by the boundary-adapted monomial basis."""

    def __init__(self, h_labels, unit_label, degree):
        self.h_labels = list(h_labels)
        self.unit_label = unit_label
        self.degree = degree

    def basis_descriptions(self):
        out = []
        d = self.degree
        for h in self.h_labels:
            if h == self.unit_label:
                out.extend((j, h) for j in range(d + 1))
            else:
                # t^(j-1) (1-t) for j = 1..d-1: vanish at both endpoints
                out.extend((("vanishing", j), h) for j in range(1, d))
        return out

    def dimension(self):
        return len(self.basis_descriptions())


def truncated_join_invariant_dimension(square, labels, degree,
                                       pair_invariant_dim=None):
    """Dimension of the invariants of the degree-truncated join on the
    given label window.

    The coaction leaves the function leg alone, so in the boundary-adapted
    function basis {1-t, t, t^(j-1)(1-t)} the truncated join splits into
    label-space blocks: the 1-t block only allows unit left legs, the t
    block only unit right legs, and each of the degree-1 doubly-vanishing
    blocks allows every label.  The invariant dimension is the sum of the
    kernel dimensions of the coaction defect on the blocks.
    """
    if degree < 2:
        raise ValueError("need degree >= 2")
    unit_a = square.comodule.algebra.unit_label()
    left_unit = [p for p in labels if p[0] == unit_a]
    right_unit = [p for p in labels if p[1] == unit_a]
    k0 = len(pair_invariant_basis(square, left_unit))
    k1 = len(pair_invariant_basis(square, right_unit))
    if pair_invariant_dim is None:
        pair_invariant_dim = len(pair_invariant_basis(square, labels))
    return k0 + k1 + (degree - 1) * pair_invariant_dim
