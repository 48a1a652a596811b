"""Text format for presented algebras, Hopf structures, and comodule data.

A presentation file is a sequence of ``[section]`` blocks of line-oriented
data; ``#`` starts a comment and blank lines are ignored.  Sections:

  [ring]              one line: ``rational`` | ``cyclotomic N`` | ``phase``
  [generators]        one generator per line, in normal-form order, with
                      optional flags ``invertible``, ``order N``,
                      ``nilpotent N``, ``grouplike``, ``weight N``
  [relations]         exchange rules ``B*F = q*F*B + q*K*A^2 - q*A``; the
                      left-hand side must be a misordered generator pair and
                      every right-hand word must be strictly smaller in the
                      weighted order
  [comult]            generator images ``b = a (x) b + b (x) a^2`` with
  [counit]            ``(x)`` the tensor separator; counit images are
  [antipode]          scalars; all three together make a Hopf algebra
  [star]              antilinear involution images, one per generator
  [hopf.generators]   the same blocks again, for a separate base Hopf
  [hopf.relations]    algebra used by the coaction sections below
  [hopf.comult] ...
  [coaction.left]     generator images in H (x) A resp. A (x) H,
  [coaction.right]    extended multiplicatively
  [can_inverse.left]  one keyword: ``monomial-transport`` (closed form for
  [can_inverse.right] diagonal group-like coactions) or ``solve``

Generators flagged ``grouplike`` get automatic comultiplication g -> g (x) g,
counit 1 and antipode g^-1 (they must be invertible or of finite order).
Scalars use ``p/q`` rationals, ``z`` for the cyclotomic generator and ``q``
for the formal phase (``q`` is also accepted in a cyclotomic field).

All parse errors carry the offending line number.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .galois import ComoduleAlgebra
from .hopf import HopfAlgebra, element_power, mul_elements
from .rewriting import PresentedAlgebra, RuleError, word_less
from .scalars import CyclotomicField, PhaseRing, RationalField


class PresentationError(ValueError):
    """Parse or validation error with a 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


# -- tokenizer -----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\(x\)|[-+*^()])")


def _tokenize(text, line):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or not m.group(1):
            if text[pos:].strip():
                raise PresentationError(
                    line, f"syntax error at {text[pos:].strip()!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


# -- expression parser ---------------------------------------------------------
#
# Values are lists of (coeff, legs) with legs a tuple of words (one word per
# tensor leg) and each word a tuple of (generator name, nonzero exponent).

def _combine(ring, terms):
    acc = {}
    for c, legs in terms:
        s = ring.add(acc.get(legs, ring.zero), c)
        if ring.is_zero(s):
            acc.pop(legs, None)
        else:
            acc[legs] = s
    return [(c, legs) for legs, c in acc.items()]


class _ExprParser:
    """Recursive-descent parser for noncommutative (tensor) expressions."""

    def __init__(self, ring, generators, invertible, line):
        self.ring = ring
        self.generators = generators
        self.invertible = invertible
        self.line = line
        self.toks = []
        self.pos = 0

    def error(self, message):
        raise PresentationError(self.line, message)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        if self.pos >= len(self.toks):
            self.error("unexpected end of expression")
        self.pos += 1
        return self.toks[self.pos - 1]

    def parse(self, text):
        self.toks = _tokenize(text, self.line)
        self.pos = 0
        v = self.sum()
        if self.pos != len(self.toks):
            self.error(f"trailing tokens {' '.join(self.toks[self.pos:])!r}")
        return v

    # sum := ['+-'] tensorterm (('+'|'-') tensorterm)*
    def sum(self):
        ring = self.ring
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        terms = self.tensorterm()
        if sign < 0:
            terms = [(ring.neg(c), legs) for c, legs in terms]
        while self.peek() in ("+", "-"):
            s = -1 if self.take() == "-" else 1
            more = self.tensorterm()
            if s < 0:
                more = [(ring.neg(c), legs) for c, legs in more]
            terms = terms + more
        terms = _combine(ring, terms)
        arities = {len(legs) for _, legs in terms}
        if len(arities) > 1:
            self.error("mixed tensor arities in one expression")
        return terms

    # tensorterm := product ('(x)' product)*
    def tensorterm(self):
        ring = self.ring
        legs_terms = [self.product()]
        while self.peek() == "(x)":
            self.take()
            legs_terms.append(self.product())
        out = [(ring.one, ())]
        for leg in legs_terms:
            new = []
            for c, legs in out:
                for d, (w,) in leg:
                    new.append((ring.mul(c, d), legs + (w,)))
            out = new
        return out

    # product := factor ('*' factor)*
    def product(self):
        ring = self.ring
        terms = [(ring.one, ((),))]
        while True:
            f = self.factor()
            new = []
            for c, (w,) in terms:
                for d, (w2,) in f:
                    new.append((ring.mul(c, d), (w + w2,)))
            terms = new
            if self.peek() == "*":
                self.take()
                continue
            nxt = self.peek()
            if nxt is None or nxt in ("+", "-", ")", "(x)"):
                return terms

    # factor := atom ['^' ['-'] int]
    def factor(self):
        terms = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            etok = self.take()
            if not etok.isdigit():
                self.error("expected integer exponent after '^'")
            e = sign * int(etok)
            terms = self.power(terms, e)
        return terms

    def power(self, terms, e):
        ring = self.ring
        if len(terms) != 1:
            self.error("exponent on a sum is not supported")
        c, (w,) = terms[0]
        if not w:  # scalar
            return [(ring.pow(c, e), ((),))]
        if len(w) != 1 or not ring.eq(c, ring.one):
            self.error("exponent allowed only on a single generator")
        g, e0 = w[0]
        e *= e0
        if e < 0 and g not in self.invertible:
            self.error(f"negative exponent on non-invertible generator {g!r}")
        if e == 0:
            return [(ring.one, ((),))]
        return [(ring.one, (((g, e),),))]

    def atom(self):
        ring = self.ring
        tok = self.take()
        if tok == "(":
            v = self.sum()
            if self.pos >= len(self.toks) or self.take() != ")":
                self.error("unbalanced parenthesis")
            if any(len(legs) != 1 for _, legs in v):
                self.error("tensor inside parentheses is not supported")
            return v
        if tok[0].isdigit():
            return [(ring.from_rational(mpq(tok)), ((),))]
        if tok in self.generators:
            return [(ring.one, (((tok, 1),),))]
        if tok in ("q", "z"):
            if isinstance(ring, CyclotomicField):
                return [(ring.generator(), ((),))]
            if isinstance(ring, PhaseRing) and tok == "q":
                return [(ring.monomial(1), ((),))]
            self.error(f"scalar symbol {tok!r} undefined over ring "
                       f"{ring.name}")
        self.error(f"unknown generator {tok!r}")


def parse_element(algebra, text, line=0):
    """Parse a one-leg expression into a normal-formed element dict."""
    inv = {algebra.generators[i] for i in range(len(algebra.generators))
           if algebra.powers.get(i, ("free",))[0] == "invertible"}
    terms = _ExprParser(algebra.ring, set(algebra.generators), inv,
                        line).parse(text)
    return _terms_to_element(algebra, terms, line)


def _word_to_indices(algebra, word, line):
    out = []
    for g, e in word:
        if g not in algebra.index:
            raise PresentationError(line, f"unknown generator {g!r}")
        out.append((algebra.index[g], e))
    return tuple(out)


def _terms_to_element(algebra, terms, line):
    ring = algebra.ring
    out = {}
    for c, legs in terms:
        if len(legs) != 1:
            raise PresentationError(line, "expected a plain (non-tensor) "
                                          "expression")
        word = _word_to_indices(algebra, legs[0], line)
        for lbl, u in algebra.reduce_word(word).items():
            s = ring.add(out.get(lbl, ring.zero), ring.mul(c, u))
            if ring.is_zero(s):
                out.pop(lbl, None)
            else:
                out[lbl] = s
    return out


def _terms_to_tensor(alg1, alg2, ring, terms, line):
    out = {}
    for c, legs in terms:
        if len(legs) == 1 and not legs[0]:
            legs = ((), ())  # a bare scalar means c * 1 (x) 1
        if len(legs) != 2:
            raise PresentationError(line, "expected a two-leg tensor "
                                          "expression")
        w1 = _word_to_indices(alg1, legs[0], line)
        w2 = _word_to_indices(alg2, legs[1], line)
        for l1, u in alg1.reduce_word(w1).items():
            for l2, v in alg2.reduce_word(w2).items():
                k = (l1, l2)
                s = ring.add(out.get(k, ring.zero),
                             ring.mul(c, ring.mul(u, v)))
                if ring.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
    return out


def _terms_to_scalar(ring, terms, line):
    out = ring.zero
    for c, legs in terms:
        if any(legs_word for legs_word in legs):
            raise PresentationError(line, "expected a scalar expression")
        out = ring.add(out, c)
    return out


# -- section reader ------------------------------------------------------------

_SECTION = re.compile(r"^\[([a-z_.]+)\]$")


def _read_sections(text):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            sections.setdefault(current, [])
            continue
        if current is None:
            raise PresentationError(lineno, "content before first [section]")
        sections[current].append((lineno, line))
    return sections


def _split_equation(lineno, line):
    if line.count("=") != 1:
        raise PresentationError(lineno, "expected exactly one '='")
    lhs, rhs = line.split("=")
    return lhs.strip(), rhs.strip()


# -- generator flags -----------------------------------------------------------

_FLAG_WORDS = {"invertible", "grouplike"}
_FLAG_VALUED = {"order", "nilpotent", "weight"}


def _parse_generator_line(lineno, line):
    parts = line.split()
    name = parts[0]
    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name) or name in ("q", "z"):
        raise PresentationError(lineno, f"bad generator name {name!r}")
    flags = {}
    i = 1
    while i < len(parts):
        f = parts[i]
        if f in _FLAG_WORDS:
            flags[f] = True
            i += 1
        elif f in _FLAG_VALUED:
            if i + 1 >= len(parts) or not parts[i + 1].isdigit():
                raise PresentationError(
                    lineno, f"flag {f!r} needs an integer argument")
            flags[f] = int(parts[i + 1])
            i += 2
        else:
            raise PresentationError(lineno, f"unknown generator flag {f!r}")
    return name, flags


# -- the parsed container ------------------------------------------------------

class Presentation:
    """Parsed presentation file.

    Attributes: ``ring``, ``ring_decl``, ``algebra`` (PresentedAlgebra),
    ``flags`` (generator -> flag dict), ``hopf`` (HopfAlgebra or None),
    ``star_images``/``star`` (generator images / extended map or None),
    ``base`` (nested Presentation for the ``hopf.*`` sections or None),
    ``comodule`` (ComoduleAlgebra or None), ``can_inverse`` (side -> keyword).
    """

    def __init__(self):
        self.ring = None
        self.ring_decl = None
        self.algebra = None
        self.flags = {}
        self.hopf = None
        self.star_images = None
        self.star = None
        self.base = None
        self.comodule = None
        self.coaction_images = {}
        self.can_inverse = {}


def star_rule(algebra, images):
    """Extend generator star images to an antilinear antihomomorphism."""
    ring = algebra.ring

    def star(elem):
        out = {}
        for lbl, c in elem.items():
            term = algebra.one()
            for g, e in reversed(algebra.label_to_word(lbl)):
                img = images[algebra.generators[g]]
                term = algebra.mul(term, element_power(algebra, img, e))
            cc = ring.conj(c)
            for l2, u in term.items():
                s = ring.add(out.get(l2, ring.zero), ring.mul(cc, u))
                if ring.is_zero(s):
                    out.pop(l2, None)
                else:
                    out[l2] = s
        return out

    return star


# -- building blocks -----------------------------------------------------------

def _build_ring(sections):
    body = sections.get("ring")
    if not body:
        raise PresentationError(0, "missing [ring] section")
    if len(body) > 1:
        raise PresentationError(body[1][0], "extra line in [ring]")
    lineno, line = body[0]
    parts = line.split()
    if parts == ["rational"]:
        return RationalField(), ("rational",)
    if parts == ["phase"]:
        return PhaseRing(), ("phase",)
    if len(parts) == 2 and parts[0] == "cyclotomic" and parts[1].isdigit():
        return CyclotomicField(int(parts[1])), ("cyclotomic", int(parts[1]))
    raise PresentationError(lineno, f"unknown ring declaration {line!r}")


def _build_algebra(ring, sections, prefix, name):
    gen_body = sections.get(prefix + "generators")
    if not gen_body:
        return None, {}
    names, flags, powers, weights = [], {}, {}, {}
    for lineno, line in gen_body:
        gname, f = _parse_generator_line(lineno, line)
        if gname in flags:
            raise PresentationError(lineno, f"duplicate generator {gname!r}")
        if "invertible" in f and ("order" in f or "nilpotent" in f):
            raise PresentationError(
                lineno, "invertible conflicts with order/nilpotent")
        if "order" in f and "nilpotent" in f:
            raise PresentationError(lineno, "order conflicts with nilpotent")
        names.append(gname)
        flags[gname] = f
        if "invertible" in f:
            powers[gname] = ("invertible",)
        elif "order" in f:
            powers[gname] = ("order", f["order"])
        elif "nilpotent" in f:
            powers[gname] = ("nilpotent", f["nilpotent"])
        if "weight" in f:
            weights[gname] = f["weight"]
    index = {g: i for i, g in enumerate(names)}
    wvec = [weights.get(g, 1) for g in names]
    invertible = {g for g in names if powers.get(g, ("",))[0] == "invertible"}
    exchange = {}
    for lineno, line in sections.get(prefix + "relations", ()):
        lhs_text, rhs_text = _split_equation(lineno, line)
        parser = _ExprParser(ring, set(names), invertible, lineno)
        lhs = parser.parse(lhs_text)
        if (len(lhs) != 1 or len(lhs[0][1]) != 1
                or not ring.eq(lhs[0][0], ring.one)):
            raise PresentationError(
                lineno, "relation left-hand side must be a product of two "
                        "generators")
        lword = lhs[0][1][0]
        if len(lword) != 2 or lword[0][1] != 1 or lword[1][1] != 1:
            raise PresentationError(
                lineno, "relation left-hand side must be a product of two "
                        "generators")
        g, h = lword[0][0], lword[1][0]
        if index[g] <= index[h]:
            raise PresentationError(
                lineno, f"left-hand side {g}*{h} is not a misordered pair: "
                        f"{g!r} must come later than {h!r} in the generator "
                        f"order")
        if (g, h) in exchange:
            raise PresentationError(lineno, f"duplicate relation for "
                                            f"{g}*{h}")
        rhs = parser.parse(rhs_text)
        lhs_iword = ((index[g], 1), (index[h], 1))
        terms = []
        for c, legs in rhs:
            if len(legs) != 1:
                raise PresentationError(lineno, "tensor in relation "
                                                "right-hand side")
            iword = tuple((index[n], e) for n, e in legs[0])
            if any(e < 0 for _, e in iword):
                raise PresentationError(
                    lineno, "negative exponents are not allowed in relation "
                            "right-hand sides")
            if not word_less(iword, lhs_iword, wvec):
                raise PresentationError(
                    lineno, f"rhs not smaller in monomial order: word "
                            f"{'*'.join(n if e == 1 else f'{n}^{e}' for n, e in legs[0]) or '1'} "
                            f"is not below {g}*{h}; rewriting would not "
                            f"terminate")
            terms.append((c, list(legs[0])))
        exchange[(g, h)] = terms
    try:
        algebra = PresentedAlgebra(ring, names, powers=powers,
                                   exchange=exchange, weights=weights,
                                   name=name)
    except RuleError as exc:
        raise PresentationError(0, str(exc)) from exc
    return algebra, flags


def _grouplike_images(algebra, flags, lineno_by_gen):
    comult, counit, antipode = {}, {}, {}
    ring = algebra.ring
    for g, f in flags.items():
        if not f.get("grouplike"):
            continue
        lbl = algebra.generator_label(g)
        comult[g] = {(lbl, lbl): ring.one}
        counit[g] = ring.one
        if "invertible" in f:
            inv = [0] * len(algebra.generators)
            inv[algebra.index[g]] = -1
            antipode[g] = {tuple(inv): ring.one}
        elif "order" in f:
            pw = [0] * len(algebra.generators)
            pw[algebra.index[g]] = f["order"] - 1
            antipode[g] = {tuple(pw): ring.one}
        else:
            raise PresentationError(
                lineno_by_gen.get(g, 0),
                f"grouplike generator {g!r} must be invertible or of finite "
                f"order")
    return comult, counit, antipode


def _build_hopf(ring, algebra, flags, sections, prefix, lineno_by_gen, name):
    gen_names = set(algebra.generators)
    invertible = {g for g in gen_names
                  if flags.get(g, {}).get("invertible")}
    comult, counit, antipode = _grouplike_images(algebra, flags,
                                                 lineno_by_gen)

    def read(section, convert):
        out = {}
        for lineno, line in sections.get(prefix + section, ()):
            lhs, rhs = _split_equation(lineno, line)
            # tolerate an optional leading section keyword
            if lhs.startswith(section + " "):
                lhs = lhs[len(section):].strip()
            if lhs not in gen_names:
                raise PresentationError(lineno,
                                        f"unknown generator {lhs!r}")
            terms = _ExprParser(ring, gen_names, invertible,
                                lineno).parse(rhs)
            out[lhs] = convert(terms, lineno)
        return out

    comult.update(read("comult",
                       lambda t, ln: _terms_to_tensor(algebra, algebra,
                                                      ring, t, ln)))
    counit.update(read("counit",
                       lambda t, ln: _terms_to_scalar(ring, t, ln)))
    antipode.update(read("antipode",
                         lambda t, ln: _terms_to_element(algebra, t, ln)))
    star = read("star", lambda t, ln: _terms_to_element(algebra, t, ln))

    hopf = None
    have = [bool(comult), bool(counit), bool(antipode)]
    if any(have):
        missing = [g for g in algebra.generators
                   if g not in comult or g not in counit or g not in antipode]
        if missing:
            raise PresentationError(
                0, f"incomplete Hopf data: no comult/counit/antipode for "
                   f"{', '.join(missing)}")
        hopf = HopfAlgebra.from_generator_data(algebra, comult, counit,
                                               antipode, name=name)
    star_map = None
    if star:
        missing = [g for g in algebra.generators if g not in star]
        if missing:
            raise PresentationError(
                0, f"incomplete star data: no image for "
                   f"{', '.join(missing)}")
        star_map = star_rule(algebra, star)
    return hopf, star or None, star_map


def _monomial_transport(comodule, images, side, lineno):
    """Closed-form canonical-map inverse for diagonal group-like coactions:
    the i-th algebra generator must coact by the i-th Hopf generator."""
    A = comodule.algebra
    H = comodule.hopf.algebra
    ring = A.ring
    if len(A.generators) != len(H.generators):
        raise PresentationError(
            lineno, "monomial-transport needs one Hopf generator per "
                    "algebra generator")
    for i, g in enumerate(A.generators):
        if A.powers.get(i, ("free",))[0] != "invertible":
            raise PresentationError(
                lineno, f"monomial-transport needs invertible generators "
                        f"({g!r} is not)")
        himg = H.generator_label(H.generators[i])
        aimg = A.generator_label(g)
        expected = ({(himg, aimg): ring.one} if side == "left"
                    else {(aimg, himg): ring.one})
        if images.get(g) != expected:
            raise PresentationError(
                lineno, f"monomial-transport needs the diagonal coaction "
                        f"of {g!r} by the matching Hopf generator")

    def neg_word(hl):
        return tuple((i, -e) for i, e in reversed(list(enumerate(hl))) if e)

    if side == "left":
        def inv(key):
            hl, al = key
            tail = A.reduce_word(neg_word(hl) + A.label_to_word(al))
            return {(hl, lbl): c for lbl, c in tail.items()}
    else:
        def inv(key):
            al, hl = key
            head = A.reduce_word(A.label_to_word(al) + neg_word(hl))
            return {(lbl, hl): c for lbl, c in head.items()}
    return inv


def _build_comodule(pres, sections):
    left_body = sections.get("coaction.left")
    right_body = sections.get("coaction.right")
    if not left_body and not right_body:
        return
    if pres.base is None or pres.base.hopf is None:
        raise PresentationError(
            (left_body or right_body)[0][0],
            "coaction sections need a base Hopf algebra ([hopf.generators] "
            "etc.)")
    A = pres.algebra
    H = pres.base.hopf
    ring = pres.ring
    overlap = set(A.generators) & set(H.algebra.generators)
    if overlap:
        raise PresentationError(
            (left_body or right_body)[0][0],
            f"algebra and Hopf generator names must be disjoint "
            f"({', '.join(sorted(overlap))})")
    all_names = set(A.generators) | set(H.algebra.generators)
    invertible = {g for i, g in enumerate(A.generators)
                  if A.powers.get(i, ("",))[0] == "invertible"}
    invertible |= {g for i, g in enumerate(H.algebra.generators)
                   if H.algebra.powers.get(i, ("",))[0] == "invertible"}

    def read(body, alg1, alg2):
        out = {}
        for lineno, line in body or ():
            lhs, rhs = _split_equation(lineno, line)
            if lhs not in A.index:
                raise PresentationError(lineno,
                                        f"unknown generator {lhs!r}")
            terms = _ExprParser(ring, all_names, invertible,
                                lineno).parse(rhs)
            out[lhs] = _terms_to_tensor(alg1, alg2, ring, terms, lineno)
        if out and len(out) != len(A.generators):
            missing = [g for g in A.generators if g not in out]
            raise PresentationError(
                0, f"incomplete coaction: no image for "
                   f"{', '.join(missing)}")
        return out or None

    left = read(left_body, H.algebra, A)
    right = read(right_body, A, H.algebra)
    pres.coaction_images = {"left": left, "right": right}
    pres.comodule = ComoduleAlgebra.from_generator_coactions(
        A, H, left=left, right=right, name=A.name)
    for side, setter in (("left", pres.comodule.set_left_can_inverse),
                         ("right", pres.comodule.set_right_can_inverse)):
        body = sections.get(f"can_inverse.{side}")
        if not body:
            continue
        if len(body) > 1:
            raise PresentationError(body[1][0],
                                    f"extra line in [can_inverse.{side}]")
        lineno, keyword = body[0]
        if keyword == "solve":
            continue
        if keyword != "monomial-transport":
            raise PresentationError(
                lineno, f"unknown can_inverse keyword {keyword!r}")
        images = pres.coaction_images[side]
        if images is None:
            raise PresentationError(
                lineno, f"can_inverse.{side} without [coaction.{side}]")
        setter(_monomial_transport(pres.comodule, images, side, lineno))
        pres.can_inverse[side] = keyword


_KNOWN_SECTIONS = {
    "ring", "generators", "relations", "comult", "counit", "antipode",
    "star", "coaction.left", "coaction.right", "can_inverse.left",
    "can_inverse.right",
}


def parse_presentation_text(text, name=None):
    sections = _read_sections(text)
    for sec in sections:
        base = sec[5:] if sec.startswith("hopf.") else sec
        if base not in _KNOWN_SECTIONS:
            raise PresentationError(0, f"unknown section [{sec}]")
    pres = Presentation()
    pres.ring, pres.ring_decl = _build_ring(sections)
    lineno_by_gen = {}
    for prefix in ("", "hopf."):
        for lineno, line in sections.get(prefix + "generators", ()):
            lineno_by_gen[line.split()[0]] = lineno
    pres.algebra, pres.flags = _build_algebra(pres.ring, sections, "", name)
    if pres.algebra is None:
        raise PresentationError(0, "missing [generators] section")
    pres.hopf, pres.star_images, pres.star = _build_hopf(
        pres.ring, pres.algebra, pres.flags, sections, "", lineno_by_gen,
        name)
    base_alg, base_flags = _build_algebra(pres.ring, sections, "hopf.",
                                          (name or "") + "-base")
    if base_alg is not None:
        pres.base = Presentation()
        pres.base.ring = pres.ring
        pres.base.ring_decl = pres.ring_decl
        pres.base.algebra = base_alg
        pres.base.flags = base_flags
        (pres.base.hopf, pres.base.star_images,
         pres.base.star) = _build_hopf(pres.ring, base_alg, base_flags,
                                       sections, "hopf.", lineno_by_gen,
                                       (name or "") + "-base")
    _build_comodule(pres, sections)
    return pres


def parse_presentation(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = str(path).rsplit("/", 1)[-1]
    if name.endswith(".hgpa"):
        name = name[:-5]
    return parse_presentation_text(text, name=name)


# -- serialization -------------------------------------------------------------

def _format_ring_decl(decl):
    return " ".join(str(p) for p in decl)


def _coeff_prefix(ring, c):
    s = ring.format(c)
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    if "+" in s or "-" in s[1:]:
        s = f"({s})"
    return s + "*"


def _join_terms(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def format_terms(algebra, terms):
    """Format a list of (coeff, word) with words over generator indices."""
    ring = algebra.ring
    parts = []
    for c, w in terms:
        body = algebra.format_word(tuple(w))
        if body == "1":
            s = ring.format(c)
            parts.append(f"({s})" if "+" in s or "-" in s[1:] else s)
        else:
            parts.append(_coeff_prefix(ring, c) + body)
    return _join_terms(parts)


def format_element_text(algebra, elem):
    if not elem:
        return "0"
    return format_terms(algebra,
                        [(elem[lbl], algebra.label_to_word(lbl))
                         for lbl in sorted(elem)])


def format_tensor_text(alg1, alg2, ring, elem):
    if not elem:
        return "0"
    parts = []
    for l1, l2 in sorted(elem):
        c = elem[(l1, l2)]
        w1 = alg1.format_word(alg1.label_to_word(l1))
        w2 = alg2.format_word(alg2.label_to_word(l2))
        parts.append(f"{_coeff_prefix(ring, c)}{w1} (x) {w2}")
    return _join_terms(parts)


def _generator_lines(algebra, flags):
    lines = []
    for i, g in enumerate(algebra.generators):
        f = dict(flags.get(g, {}))
        p = algebra.powers.get(i)
        bits = [g]
        if p is not None:
            if p[0] == "invertible":
                bits.append("invertible")
            else:
                bits.append(f"{p[0]} {p[1]}")
        if f.get("grouplike"):
            bits.append("grouplike")
        if algebra.weights[i] != 1:
            bits.append(f"weight {algebra.weights[i]}")
        lines.append(" ".join(bits))
    return lines


def _relation_lines(algebra):
    lines = []
    for gi, hi in sorted(algebra.exchange):
        terms = algebra.exchange[(gi, hi)]
        lhs = f"{algebra.generators[gi]}*{algebra.generators[hi]}"
        lines.append(f"{lhs} = {format_terms(algebra, terms)}")
    return lines


def serialize_hopf(hopf, ring_decl, flags=None, star_images=None):
    """Presentation text for a Hopf algebra on a presented carrier.

    Grouplike-flagged generators keep their flag and are omitted from the
    structure sections (the flag regenerates their images on parse).
    """
    A = hopf.algebra
    ring = A.ring
    flags = flags or {}
    out = ["[ring]", _format_ring_decl(ring_decl), "", "[generators]"]
    out += _generator_lines(A, flags)
    rel = _relation_lines(A)
    if rel:
        out += ["", "[relations]"] + rel
    explicit = [g for g in A.generators
                if not flags.get(g, {}).get("grouplike")]
    if explicit:
        out += ["", "[comult]"]
        for g in explicit:
            img = hopf.comult_label(A.generator_label(g))
            out.append(f"{g} = {format_tensor_text(A, A, ring, img)}")
        out += ["", "[counit]"]
        for g in explicit:
            out.append(f"{g} = "
                       f"{ring.format(hopf.counit_label(A.generator_label(g)))}")
        out += ["", "[antipode]"]
        for g in explicit:
            img = hopf.antipode_label(A.generator_label(g))
            out.append(f"{g} = {format_element_text(A, img)}")
    if star_images:
        out += ["", "[star]"]
        for g in A.generators:
            out.append(f"{g} = {format_element_text(A, star_images[g])}")
    return "\n".join(out) + "\n"
