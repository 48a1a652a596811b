"""Hopf algebra structure on exact algebra carriers.

A ``HopfAlgebra`` wraps a carrier algebra (a ``PresentedAlgebra``, a
``StructureConstantAlgebra`` or a ``TensorAlgebra``) with three label
rules: comultiplication into the tensor square, counit into the ground
ring, and antipode back into the carrier.  For presented carriers the
rules are usually given on generators only and extended
(anti)multiplicatively; everything is memoized per basis label.

The module also provides

  * ``verify_hopf_axioms`` -- machine check of coassociativity, counit
    laws, algebra-map properties and the antipode identity, with concrete
    witnesses on failure,
  * ``DualHopf`` -- the dual Hopf algebra of a finite-dimensional one,
    with the pairing convention <Delta(phi), h (x) h'> = <phi, h h'>
    read as <phi_(1), h> <phi_(2), h'>,
  * ``StarStructure`` -- a conjugate-linear involution with its
    compatibility axioms,
  * algebra-map extension utilities used to identify presented algebras
    with structure-constant ones.
"""

from __future__ import annotations

import itertools

from .linalg import LinearMap, invert_on_basis, vec_clean, vec_eq
from .rewriting import PresentedAlgebra


def mul_elements(algebra, e1, e2):
    """Generic product of two vector-dict elements via ``mul_labels``."""
    ring = algebra.ring
    out = {}
    for l1, c1 in e1.items():
        for l2, c2 in e2.items():
            c = ring.mul(c1, c2)
            for lbl, x in algebra.mul_labels(l1, l2).items():
                s = ring.add(out.get(lbl, ring.zero), ring.mul(c, x))
                if ring.is_zero(s):
                    out.pop(lbl, None)
                else:
                    out[lbl] = s
    return out


def invert_single_term(algebra, elem):
    """Invert a one-term element whose label has an inverse candidate.

    The candidate label comes from ``algebra.inverse_label_candidate``;
    the actual product is checked, so a wrong candidate fails loudly
    rather than silently.
    """
    ring = algebra.ring
    if len(elem) != 1:
        raise ValueError("only single-term elements can be inverted here")
    (label, coeff), = elem.items()
    cand = algebra.inverse_label_candidate(label)
    prod = algebra.mul_labels(label, cand)
    unit = algebra.unit_label()
    if set(prod) != {unit}:
        raise ValueError(
            f"label {label!r} is not invertible by its candidate {cand!r}")
    gamma = prod[unit]
    c = ring.inv(ring.mul(coeff, gamma))
    inv = {cand: c}
    # confirm the two-sided inverse
    back = mul_elements(algebra, inv, elem)
    if not vec_eq(ring, back, {unit: ring.one}):
        raise ValueError(f"candidate inverse of {label!r} is one-sided only")
    return inv


def element_power(algebra, elem, e):
    """elem**e; negative powers only for invertible single-term elements."""
    ring = algebra.ring
    if e < 0:
        elem = invert_single_term(algebra, elem)
        e = -e
    out = algebra.one() if hasattr(algebra, "one") \
        else {algebra.unit_label(): ring.one}
    for _ in range(e):
        out = mul_elements(algebra, out, elem)
    return out


class StructureConstantAlgebra:
    """Algebra given by an explicit basis and a multiplication rule.

    ``mul_rule(l1, l2) -> dict label -> coeff``; results are memoized.
    The unit is an arbitrary element (not necessarily a single label).
    """

    def __init__(self, ring, labels, mul_rule, unit, name=None):
        self.ring = ring
        self._labels = list(labels)
        self._mul_rule = mul_rule
        self.unit = vec_clean(ring, unit)
        self.name = name
        self._cache = {}

    def basis(self):
        return list(self._labels)

    def unit_label(self):
        if len(self.unit) != 1 or not self.ring.eq(
                next(iter(self.unit.values())), self.ring.one):
            raise ValueError("unit is not a single basis label")
        return next(iter(self.unit))

    def one(self):
        return dict(self.unit)

    def mul_labels(self, l1, l2):
        key = (l1, l2)
        out = self._cache.get(key)
        if out is None:
            out = vec_clean(self.ring, self._mul_rule(l1, l2))
            self._cache[key] = out
        return out

    def mul(self, e1, e2):
        return mul_elements(self, e1, e2)

    def inverse_label_candidate(self, label):
        raise ValueError("no inverse candidates in a structure-constant algebra")


class TensorAlgebra:
    """Componentwise tensor product of algebras over one ring.

    Labels are flat tuples, one slot per factor; multiplication is
    factorwise (no braiding -- the braided products live elsewhere).
    """

    def __init__(self, factors, name=None):
        self.factors = list(factors)
        self.ring = factors[0].ring
        for f in factors:
            if f.ring != self.ring:
                raise ValueError("tensor factors must share the ring")
        self.name = name
        self._cache = {}

    def unit_label(self):
        return tuple(f.unit_label() for f in self.factors)

    def one(self):
        return {self.unit_label(): self.ring.one}

    def basis(self, window=None):
        parts = []
        for f in self.factors:
            try:
                parts.append(f.basis())
            except TypeError:
                parts.append(f.basis(window=window))
        return [tuple(t) for t in itertools.product(*parts)]

    def mul_labels(self, l1, l2):
        key = (l1, l2)
        out = self._cache.get(key)
        if out is not None:
            return out
        ring = self.ring
        partials = [{(): ring.one}]
        for i, f in enumerate(self.factors):
            comp = f.mul_labels(l1[i], l2[i])
            new = {}
            for prefix, c in partials[-1].items():
                for lbl, x in comp.items():
                    new[prefix + (lbl,)] = ring.mul(c, x)
            partials.append(new)
        out = vec_clean(ring, partials[-1])
        self._cache[key] = out
        return out

    def mul(self, e1, e2):
        return mul_elements(self, e1, e2)

    def inverse_label_candidate(self, label):
        return tuple(f.inverse_label_candidate(l)
                     for f, l in zip(self.factors, label))


def tensor_elements(ring, *elems):
    """Outer tensor product of vector-dict elements: flat tuple labels."""
    out = {(): ring.one}
    for e in elems:
        new = {}
        for prefix, c in out.items():
            for lbl, x in e.items():
                v = ring.mul(c, x)
                if not ring.is_zero(v):
                    new[prefix + (lbl,)] = v
        out = new
    return out


def tensor_apply(ring, maps, elem):
    """Apply a tuple of label-wise maps to each leg of a tensor element.

    Each map sends a label to an element dict in its own target space;
    ``None`` means the identity on that leg.  Scalars are not allowed as
    targets here -- use ``tensor_contract`` for counit-like legs.
    """
    out = {}
    for label, coeff in elem.items():
        partial = {(): coeff}
        for leg, m in enumerate(maps):
            img = {label[leg]: ring.one} if m is None else m(label[leg])
            new = {}
            for prefix, c in partial.items():
                for lbl, x in img.items():
                    v = ring.mul(c, x)
                    if ring.is_zero(v):
                        continue
                    key = prefix + (lbl if isinstance(m, _Flatten) else (lbl,))
                    new[key] = ring.add(new.get(key, ring.zero), v)
            partial = new
        for key, v in partial.items():
            s = ring.add(out.get(key, ring.zero), v)
            if ring.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return vec_clean(ring, out)


class _Flatten:
    """Wrap a leg map whose outputs are tensor labels to be spliced flat."""

    def __init__(self, fn):
        self.fn = fn

    def __call__(self, label):
        return self.fn(label)


def tensor_contract(ring, scalar_maps, elem):
    """Contract tensor legs with scalar-valued maps (None = keep the leg).

    Returns an element on the tuple of kept legs (a bare scalar wrapped as
    {(): value} when every leg is contracted).
    """
    out = {}
    for label, coeff in elem.items():
        kept = []
        c = coeff
        for leg, m in enumerate(scalar_maps):
            if m is None:
                kept.append(label[leg])
            else:
                c = ring.mul(c, m(label[leg]))
        if ring.is_zero(c):
            continue
        key = tuple(kept)
        s = ring.add(out.get(key, ring.zero), c)
        if ring.is_zero(s):
            out.pop(key, None)
        else:
            out[key] = s
    return out


class HopfAlgebra:
    """Carrier algebra plus comultiplication, counit and antipode.

    The three structure maps are label rules; ``comult_label`` returns a
    dict over pairs of carrier labels, ``counit_label`` a ring element,
    ``antipode_label`` a carrier element.  All are memoized.
    """

    def __init__(self, algebra, comult_label, counit_label, antipode_label,
                 name=None):
        self.algebra = algebra
        self.ring = algebra.ring
        self.name = name
        self._comult_rule = comult_label
        self._counit_rule = counit_label
        self._antipode_rule = antipode_label
        self._comult_cache = {}
        self._counit_cache = {}
        self._antipode_cache = {}
        self._power_cache = {}
        self.square = TensorAlgebra([algebra, algebra])
        self._antipode_inverse = None

    # -- structure maps on labels and elements --------------------------------

    def comult_label(self, label):
        out = self._comult_cache.get(label)
        if out is None:
            out = vec_clean(self.ring, self._comult_rule(label))
            self._comult_cache[label] = out
        return out

    def comult(self, elem):
        ring = self.ring
        out = {}
        for label, c in elem.items():
            for pair, x in self.comult_label(label).items():
                s = ring.add(out.get(pair, ring.zero), ring.mul(c, x))
                if ring.is_zero(s):
                    out.pop(pair, None)
                else:
                    out[pair] = s
        return out

    def counit_label(self, label):
        out = self._counit_cache.get(label)
        if out is None:
            out = self._counit_rule(label)
            self._counit_cache[label] = out
        return out

    def counit(self, elem):
        ring = self.ring
        return ring.sum(ring.mul(c, self.counit_label(l))
                        for l, c in elem.items())

    def antipode_label(self, label):
        out = self._antipode_cache.get(label)
        if out is None:
            out = vec_clean(self.ring, self._antipode_rule(label))
            self._antipode_cache[label] = out
        return out

    def antipode(self, elem):
        ring = self.ring
        out = {}
        for label, c in elem.items():
            for lbl, x in self.antipode_label(label).items():
                s = ring.add(out.get(lbl, ring.zero), ring.mul(c, x))
                if ring.is_zero(s):
                    out.pop(lbl, None)
                else:
                    out[lbl] = s
        return out

    def comult_power_label(self, label, n):
        """Iterated comultiplication: dict over (n+1)-tuples of labels.

        n = 0 gives {(label,): 1}; n = 1 is ``comult_label``.
        """
        if n == 0:
            return {(label,): self.ring.one}
        key = (label, n)
        out = self._power_cache.get(key)
        if out is not None:
            return out
        ring = self.ring
        prev = self.comult_power_label(label, n - 1)
        out = {}
        for tup, c in prev.items():
            # expand the last leg
            for pair, x in self.comult_label(tup[-1]).items():
                k = tup[:-1] + pair
                s = ring.add(out.get(k, ring.zero), ring.mul(c, x))
                if ring.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        self._power_cache[key] = out
        return out

    def antipode_inverse(self):
        """The inverse of the antipode as a LinearMap (solved lazily)."""
        if self._antipode_inverse is None:
            S = LinearMap(self.ring, self.antipode_label)
            self._antipode_inverse = invert_on_basis(S, self.algebra.basis())
        return self._antipode_inverse

    def set_antipode_inverse(self, rule):
        """Install a closed-form inverse antipode (verified lazily by tests)."""
        self._antipode_inverse = LinearMap(self.ring, rule)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_generator_data(cls, presented, comult, counit, antipode,
                            name=None):
        """Extend generator images to a full Hopf structure on a presented
        carrier: comultiplication and counit multiplicatively, the antipode
        antimultiplicatively.

        ``comult[g]`` is an element of the tensor square (dict over label
        pairs), ``counit[g]`` a ring element, ``antipode[g]`` a carrier
        element.  Negative generator exponents (invertible generators) are
        handled by inverting single-term images.
        """
        ring = presented.ring
        square = TensorAlgebra([presented, presented])

        def comult_label(label):
            out = square.one()
            for g, e in presented.label_to_word(label):
                img = comult[presented.generators[g]]
                out = mul_elements(square, out, element_power(square, img, e))
            return out

        def counit_label(label):
            out = ring.one
            for g, e in presented.label_to_word(label):
                c = counit[presented.generators[g]]
                out = ring.mul(out, ring.pow(c, e))
            return out

        def antipode_label(label):
            out = presented.one()
            for g, e in reversed(presented.label_to_word(label)):
                img = antipode[presented.generators[g]]
                out = presented.mul(out, element_power(presented, img, e))
            return out

        return cls(presented, comult_label, counit_label, antipode_label,
                   name=name)


def verify_hopf_axioms(H, labels=None, product_pairs=None, max_witnesses=3):
    """Check the full axiom set on basis labels; returns a report dict.

    Keys: coassociativity, counit-left, counit-right, comult-multiplicative,
    counit-multiplicative, antipode-left, antipode-right, comult-unital.
    Each value is {"ok": bool, "witnesses": [...]}.
    """
    ring = H.ring
    A = H.algebra
    if labels is None:
        labels = A.basis()
    if product_pairs is None:
        product_pairs = list(itertools.product(labels, labels))
    report = {k: {"ok": True, "witnesses": []} for k in (
        "coassociativity", "counit-left", "counit-right",
        "comult-multiplicative", "counit-multiplicative",
        "antipode-left", "antipode-right", "comult-unital")}

    def fail(key, witness):
        entry = report[key]
        entry["ok"] = False
        if len(entry["witnesses"]) < max_witnesses:
            entry["witnesses"].append(witness)

    fmt = getattr(A, "format_element", lambda e: repr(e))

    for l in labels:
        d = H.comult_label(l)
        # coassociativity via the two expansions of the triple coproduct
        left = {}
        right = {}
        for (l1, l2), c in d.items():
            for (m1, m2), x in H.comult_label(l1).items():
                k = (m1, m2, l2)
                left[k] = ring.add(left.get(k, ring.zero), ring.mul(c, x))
            for (m1, m2), x in H.comult_label(l2).items():
                k = (l1, m1, m2)
                right[k] = ring.add(right.get(k, ring.zero), ring.mul(c, x))
        if not vec_eq(ring, left, right):
            fail("coassociativity", {"label": l})
        # counit laws
        lft = tensor_contract(ring, [H.counit_label, None], d)
        rgt = tensor_contract(ring, [None, H.counit_label], d)
        idv = {(l,): ring.one}
        if not vec_eq(ring, lft, idv):
            fail("counit-left", {"label": l})
        if not vec_eq(ring, rgt, idv):
            fail("counit-right", {"label": l})
        # antipode identities m(S (x) id)Delta = unit * counit = m(id (x) S)Delta
        target = {k: ring.mul(H.counit_label(l), v)
                  for k, v in A.one().items()}
        target = vec_clean(ring, target)
        sl = {}
        sr = {}
        for (l1, l2), c in d.items():
            for lbl, x in mul_elements(A, H.antipode_label(l1),
                                       {l2: ring.one}).items():
                sl[lbl] = ring.add(sl.get(lbl, ring.zero), ring.mul(c, x))
            for lbl, x in mul_elements(A, {l1: ring.one},
                                       H.antipode_label(l2)).items():
                sr[lbl] = ring.add(sr.get(lbl, ring.zero), ring.mul(c, x))
        if not vec_eq(ring, sl, target):
            fail("antipode-left", {"label": l, "value": fmt(vec_clean(ring, sl))})
        if not vec_eq(ring, sr, target):
            fail("antipode-right", {"label": l, "value": fmt(vec_clean(ring, sr))})

    # algebra-map properties
    one = A.one()
    d_one = H.comult(one)
    unit_sq = tensor_elements(ring, one, one)
    if not vec_eq(ring, d_one, unit_sq):
        fail("comult-unital", {})
    if not ring.eq(H.counit(one), ring.one):
        fail("counit-multiplicative", {"label": "unit"})
    for l1, l2 in product_pairs:
        prod = A.mul_labels(l1, l2)
        lhs = H.comult(prod)
        rhs = mul_elements(H.square, H.comult_label(l1), H.comult_label(l2))
        if not vec_eq(ring, lhs, rhs):
            fail("comult-multiplicative", {"labels": (l1, l2)})
        if not ring.eq(H.counit(prod),
                       ring.mul(H.counit_label(l1), H.counit_label(l2))):
            fail("counit-multiplicative", {"labels": (l1, l2)})
    report["ok"] = all(v["ok"] for k, v in report.items() if k != "ok")
    return report


def pairing(dual_elem, elem, ring):
    """Evaluate a dual-coordinate functional on a carrier element."""
    return ring.sum(ring.mul(c, elem.get(l, ring.zero))
                    for l, c in dual_elem.items())


class DualHopf(HopfAlgebra):
    """Dual of a finite-dimensional Hopf algebra, on the same label set.

    The label ``l`` stands for the functional picking out the coefficient
    of the basis monomial ``l``.  Multiplication transposes the
    comultiplication, comultiplication transposes the multiplication
    (with <Delta(phi), h (x) h'> = <phi, h h'> split as
    <phi_(1), h><phi_(2), h'>), and the antipode is the transpose of the
    antipode.
    """

    def __init__(self, H, name=None):
        self.predual = H
        ring = H.ring
        A = H.algebra
        labels = A.basis()

        # transpose tables
        mul_table = {}      # (l1, l2) -> {h: coeff}  from Delta_H
        for h in labels:
            for (l1, l2), c in H.comult_label(h).items():
                mul_table.setdefault((l1, l2), {})[h] = c
        comult_table = {}   # l -> {(h, h'): coeff}   from m_H
        for h1 in labels:
            for h2 in labels:
                for l, c in A.mul_labels(h1, h2).items():
                    comult_table.setdefault(l, {})[(h1, h2)] = c
        antipode_table = {}  # l -> {h: coeff}        from S_H
        for h in labels:
            for l, c in H.antipode_label(h).items():
                antipode_table.setdefault(l, {})[h] = c

        unit = {l: H.counit_label(l) for l in labels}
        carrier = StructureConstantAlgebra(
            ring, labels,
            lambda l1, l2: mul_table.get((l1, l2), {}),
            unit,
            name=(name or "dual"))

        one_label = A.unit_label()
        super().__init__(
            carrier,
            lambda l: comult_table.get(l, {}),
            lambda l: ring.one if l == one_label else ring.zero,
            lambda l: antipode_table.get(l, {}),
            name=name)

    def pair(self, dual_elem, elem):
        return pairing(dual_elem, elem, self.ring)


class StarStructure:
    """Conjugate-linear involution on a Hopf algebra, from generator images.

    ``images[g]`` is the element g*.  The star of a monomial reverses the
    word (star is antimultiplicative) and the star of a sum conjugates the
    coefficients.
    """

    def __init__(self, H, images):
        self.hopf = H
        self.ring = H.ring
        self.images = images
        self._cache = {}

    def star_label(self, label):
        out = self._cache.get(label)
        if out is None:
            A = self.hopf.algebra
            out = A.one()
            for g, e in reversed(A.label_to_word(label)):
                img = self.images[A.generators[g]]
                out = A.mul(out, element_power(A, img, e))
            self._cache[label] = out
        return out

    def star(self, elem):
        ring = self.ring
        out = {}
        for label, c in elem.items():
            cc = ring.conj(c)
            for lbl, x in self.star_label(label).items():
                s = ring.add(out.get(lbl, ring.zero), ring.mul(cc, x))
                if ring.is_zero(s):
                    out.pop(lbl, None)
                else:
                    out[lbl] = s
        return out


def verify_star_axioms(star, labels=None, product_pairs=None,
                       max_witnesses=3):
    """Check the star axioms: involution, antimultiplicativity,
    (* (x) *) Delta = Delta *, * S * S = id, counit * = conj counit."""
    H = star.hopf
    ring = H.ring
    A = H.algebra
    if labels is None:
        labels = A.basis()
    if product_pairs is None:
        product_pairs = list(itertools.product(labels, labels))
    report = {k: {"ok": True, "witnesses": []} for k in (
        "involution", "antimultiplicative", "comult-compatible",
        "antipode-compatible", "counit-compatible")}

    def fail(key, witness):
        entry = report[key]
        entry["ok"] = False
        if len(entry["witnesses"]) < max_witnesses:
            entry["witnesses"].append(witness)

    for l in labels:
        e = {l: ring.one}
        if not vec_eq(ring, star.star(star.star(e)), e):
            fail("involution", {"label": l})
        # (* (x) *) Delta = Delta *
        lhs = {}
        for (l1, l2), c in H.comult_label(l).items():
            piece = tensor_elements(
                ring, star.star_label(l1), star.star_label(l2))
            cc = ring.conj(c)
            for k, x in piece.items():
                lhs[k] = ring.add(lhs.get(k, ring.zero), ring.mul(cc, x))
        rhs = H.comult(star.star(e))
        if not vec_eq(ring, vec_clean(ring, lhs), rhs):
            fail("comult-compatible", {"label": l})
        # * S * S = id
        v = H.antipode(star.star(H.antipode(star.star(e))))
        if not vec_eq(ring, v, e):
            fail("antipode-compatible", {"label": l})
        # counit(x*) = conj(counit(x))
        if not ring.eq(H.counit(star.star(e)),
                       ring.conj(H.counit(e))):
            fail("counit-compatible", {"label": l})
    for l1, l2 in product_pairs:
        x, y = {l1: ring.one}, {l2: ring.one}
        lhs = star.star(A.mul(x, y))
        rhs = A.mul(star.star(y), star.star(x))
        if not vec_eq(ring, lhs, rhs):
            fail("antimultiplicative", {"labels": (l1, l2)})
    report["ok"] = all(v["ok"] for k, v in report.items() if k != "ok")
    return report


# -- algebra morphisms -------------------------------------------------------

def extend_algebra_map(source, target, images):
    """Unital algebra map from a presented algebra, given generator images.

    ``images[name]`` is an element of ``target``.  Returns a LinearMap on
    source labels; whether it is well defined (respects the relations) is
    checked separately by ``check_algebra_map``.
    """
    ring = source.ring

    def rule(label):
        out = target.one() if hasattr(target, "one") \
            else dict(target.unit)
        for g, e in source.label_to_word(label):
            img = images[source.generators[g]]
            out = mul_elements(target, out, element_power(target, img, e))
        return out

    return LinearMap(ring, rule)


def check_algebra_map(source, target, phi, pairs=None):
    """Verify phi(x y) = phi(x) phi(y) on basis label pairs and phi(1)=1.

    Returns (ok, witnesses)."""
    ring = source.ring
    if pairs is None:
        labels = source.basis()
        pairs = itertools.product(labels, labels)
    witnesses = []
    one_t = target.one() if hasattr(target, "one") else dict(target.unit)
    if not vec_eq(ring, phi({source.unit_label(): ring.one}), one_t):
        witnesses.append({"kind": "unit"})
    for l1, l2 in pairs:
        lhs = phi(source.mul_labels(l1, l2))
        rhs = mul_elements(target, phi({l1: ring.one}), phi({l2: ring.one}))
        if not vec_eq(ring, lhs, rhs):
            witnesses.append({"kind": "product", "labels": (l1, l2)})
            if len(witnesses) >= 3:
                break
    return (not witnesses), witnesses


def check_bijective(phi, domain_labels, ring):
    """A linear map between equal-dimension spaces is bijective iff its
    kernel is zero on the given domain basis."""
    from .linalg import kernel_basis
    return not kernel_basis(phi, domain_labels)
