"""Presented algebras with confluent exchange/power rewriting.

A ``PresentedAlgebra`` has a finite ordered list of generators; the
normal-form monomials are the ordered words  g1^e1 g2^e2 ... gm^em  (with
the generators in list order).  Relations come in two kinds:

  * exchange rules  g*h -> sum of smaller words, one for each misordered
    adjacent pair (g later in the list than h),
  * power rules per generator: ``order n`` (g^n = 1), ``nilpotent n``
    (g^n = 0), ``invertible`` (exponents range over all integers), or no
    rule (free, nonnegative exponents).

Rewriting is guaranteed to terminate because every exchange rule is
checked at construction time to strictly decrease a weighted
degree-lexicographic order (per-generator positive weights; ties broken
left-to-right by generator position).  Exchange rules touching an
invertible generator must be plain scalar swaps ``g*h -> c*h*g``; runs of
such generators are then exchanged in one step with coefficient
``c**(e*f)``, which keeps Laurent-type algebras fast.

Words are tuples of ``(generator index, exponent)`` runs; basis labels
are full exponent tuples, one slot per generator.
"""

from __future__ import annotations

import itertools
import random

from .linalg import vec_clean, vec_eq

STEP_BUDGET = 10 ** 6


class RewriteError(Exception):
    pass


class BudgetExceeded(RewriteError):
    pass


class RuleError(ValueError):
    pass


def _word_weight(word, weights):
    return sum(abs(e) * weights[g] for g, e in word)


def _word_letters(word):
    out = []
    for g, e in word:
        if e < 0:
            raise RuleError("negative exponent in ordered-word comparison")
        out.extend([g] * e)
    return out


def word_less(w1, w2, weights):
    """Strict weighted deglex comparison used to validate rule orientation."""
    a, b = _word_weight(w1, weights), _word_weight(w2, weights)
    if a != b:
        return a < b
    return _word_letters(w1) < _word_letters(w2)


class PresentedAlgebra:
    """Associative unital algebra given by generators and rewriting rules.

    Parameters
    ----------
    ring : coefficient ring
    generators : list of generator names, in normal-form order
    powers : dict name -> ("order", n) | ("nilpotent", n) | ("invertible",)
        Generators absent from the dict are free with nonnegative exponents.
    exchange : dict (later_name, earlier_name) -> list of (coeff, word)
        where each word is a list of (name, exponent) pairs.  The rule
        rewrites the product later*earlier.
    weights : optional dict name -> positive int (default all 1)
    """

    def __init__(self, ring, generators, powers=None, exchange=None,
                 weights=None, name=None):
        self.ring = ring
        self.generators = list(generators)
        self.name = name
        if len(set(self.generators)) != len(self.generators):
            raise RuleError("duplicate generator names")
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.powers = {}
        for g, p in (powers or {}).items():
            if g not in self.index:
                raise RuleError(f"power rule for unknown generator {g!r}")
            if p[0] not in ("order", "nilpotent", "invertible"):
                raise RuleError(f"unknown power rule kind {p[0]!r}")
            if p[0] in ("order", "nilpotent") and p[1] < 1:
                raise RuleError("power rule bound must be positive")
            self.powers[self.index[g]] = p
        self.weights = [1] * len(self.generators)
        for g, w in (weights or {}).items():
            if w < 1:
                raise RuleError("weights must be positive")
            self.weights[self.index[g]] = w
        self.exchange = {}
        self._swap_coeff = {}
        for (g, h), rhs in (exchange or {}).items():
            self._install_exchange(g, h, rhs)
        for i in self._invertible():
            for j in range(len(self.generators)):
                if i == j:
                    continue
                key = (max(i, j), min(i, j))
                if key in self.exchange and key not in self._swap_coeff:
                    gi, gj = (self.generators[k] for k in key)
                    raise RuleError(
                        f"exchange rule for invertible generator pair "
                        f"({gi}, {gj}) must be a scalar swap")
        self._nf_cache = {}

    # -- construction helpers ------------------------------------------------

    def _invertible(self):
        return [i for i, p in self.powers.items() if p[0] == "invertible"]

    def _install_exchange(self, g, h, rhs):
        if g not in self.index or h not in self.index:
            raise RuleError(f"exchange rule for unknown generators ({g}, {h})")
        gi, hi = self.index[g], self.index[h]
        if gi <= hi:
            raise RuleError(
                f"exchange rule {g}*{h} is not a misordered pair: {g!r} must "
                f"come later than {h!r} in the generator list")
        lhs = ((gi, 1), (hi, 1))
        terms = []
        for coeff, word in rhs:
            w = tuple((self.index[n], e) for n, e in word)
            for n, e in word:
                if n not in self.index:
                    raise RuleError(f"unknown generator {n!r} in rule rhs")
            if not word_less(w, lhs, self.weights):
                raise RuleError(
                    f"rule {g}*{h} has right-hand word "
                    f"{self.format_word(w)} not smaller than the left-hand "
                    f"side in the weighted order; rewriting would not "
                    f"terminate")
            terms.append((coeff, w))
        self.exchange[(gi, hi)] = terms
        if (len(terms) == 1 and terms[0][1] == ((hi, 1), (gi, 1))):
            self._swap_coeff[(gi, hi)] = terms[0][0]

    # -- basic structure -----------------------------------------------------

    def unit_label(self):
        return (0,) * len(self.generators)

    def generator_label(self, name):
        lbl = [0] * len(self.generators)
        lbl[self.index[name]] = 1
        return tuple(lbl)

    def generator_element(self, name):
        return {self.generator_label(name): self.ring.one}

    def one(self):
        return {self.unit_label(): self.ring.one}

    def is_finite_dimensional(self):
        return all(
            self.powers.get(i, ("free",))[0] in ("order", "nilpotent")
            for i in range(len(self.generators)))

    def dimension(self):
        if not self.is_finite_dimensional():
            raise RewriteError("algebra is not finite dimensional")
        d = 1
        for i in range(len(self.generators)):
            d *= self.powers[i][1]
        return d

    def basis(self, window=None):
        """All basis labels; finite-dimensional case, or a symmetric
        exponent window for invertible generators."""
        ranges = []
        for i in range(len(self.generators)):
            p = self.powers.get(i, ("free",))
            if p[0] in ("order", "nilpotent"):
                ranges.append(range(p[1]))
            elif p[0] == "invertible":
                if window is None:
                    raise RewriteError(
                        "window required for invertible generators")
                ranges.append(range(-window, window + 1))
            else:
                if window is None:
                    raise RewriteError("window required for free generators")
                ranges.append(range(window + 1))
        return [tuple(t) for t in itertools.product(*ranges)]

    # -- words and labels ----------------------------------------------------

    def label_to_word(self, label):
        return tuple((i, e) for i, e in enumerate(label) if e)

    def word_to_label(self, word):
        """Only valid for normal (ordered) words."""
        lbl = [0] * len(self.generators)
        for g, e in word:
            lbl[g] = e
        return tuple(lbl)

    def inverse_label_candidate(self, label):
        for i, e in enumerate(label):
            if e and self.powers.get(i, ("free",))[0] != "invertible":
                raise ValueError(
                    f"generator {self.generators[i]} is not invertible")
        return tuple(-e for e in label)

    def format_word(self, word):
        if not word:
            return "1"
        parts = []
        for g, e in word:
            n = self.generators[g]
            parts.append(n if e == 1 else f"{n}^{e}")
        return "*".join(parts)

    def format_element(self, elem):
        if not elem:
            return "0"
        parts = []
        for lbl in sorted(elem):
            c = self.ring.format(elem[lbl])
            w = self.format_word(self.label_to_word(lbl))
            if c == "1":
                parts.append(w)
            elif w == "1":
                parts.append(c)
            else:
                c = f"({c})" if ("+" in c or ("-" in c[1:])) else c
                parts.append(f"{c}*{w}")
        return " + ".join(parts)

    # -- rewriting -----------------------------------------------------------

    def _apply_powers(self, word):
        """Merge adjacent runs and apply power rules.  Returns the cleaned
        word, or None if a nilpotency kills it."""
        out = []
        for g, e in word:
            if out and out[-1][0] == g:
                g0, e0 = out.pop()
                e += e0
            p = self.powers.get(g, ("free",))
            if p[0] == "order":
                e %= p[1]
            elif p[0] == "nilpotent":
                if e >= p[1]:
                    return None
                if e < 0:
                    raise RewriteError(
                        f"negative exponent on nilpotent generator "
                        f"{self.generators[g]}")
            elif p[0] == "free" and e < 0:
                raise RewriteError(
                    f"negative exponent on non-invertible generator "
                    f"{self.generators[g]}")
            if e:
                out.append((g, e))
        return tuple(out)

    def _misordered_positions(self, word):
        return [i for i in range(len(word) - 1) if word[i][0] > word[i + 1][0]]

    def _rewrite_at(self, word, i):
        """Rewrite the misordered adjacent pair at position i.

        Returns a list of (coeff, word) with the pair exchanged.
        """
        (g, e), (h, f) = word[i], word[i + 1]
        key = (g, h)
        swap = self._swap_coeff.get(key)
        if swap is not None:
            c = self.ring.pow(swap, e * f)
            new = word[:i] + ((h, f), (g, e)) + word[i + 2:]
            return [(c, new)]
        rule = self.exchange.get(key)
        if rule is None:
            gi, hi = self.generators[g], self.generators[h]
            raise RewriteError(f"no exchange rule for pair ({gi}, {hi})")
        prefix = word[:i] + (((g, e - 1),) if e > 1 else ())
        suffix = (((h, f - 1),) if f > 1 else ()) + word[i + 2:]
        return [(c, prefix + w + suffix) for c, w in rule]

    def reduce_word(self, word, strategy="leftmost", budget=STEP_BUDGET):
        """Fully reduce a word; returns a dict label -> coefficient."""
        ring = self.ring
        result = {}
        stack = [(ring.one, tuple(word))]
        steps = 0
        while stack:
            coeff, w = stack.pop()
            w = self._apply_powers(w)
            if w is None:
                continue
            pos = self._misordered_positions(w)
            if not pos:
                lbl = self.word_to_label(w)
                s = ring.add(result.get(lbl, ring.zero), coeff)
                if ring.is_zero(s):
                    result.pop(lbl, None)
                else:
                    result[lbl] = s
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(
                    f"rewriting exceeded {budget} steps on "
                    f"{self.format_word(word)}")
            i = pos[0] if strategy == "leftmost" else pos[-1]
            for c, new in self._rewrite_at(w, i):
                stack.append((ring.mul(coeff, c), new))
        return result

    def normal_form(self, terms, strategy="leftmost"):
        """Reduce a dict word -> coefficient to a dict label -> coefficient."""
        ring = self.ring
        out = {}
        for word, coeff in terms.items():
            key = tuple(word)
            red = self._nf_cache.get((key, strategy))
            if red is None:
                red = self.reduce_word(key, strategy)
                self._nf_cache[(key, strategy)] = red
            for lbl, c in red.items():
                s = ring.add(out.get(lbl, ring.zero), ring.mul(coeff, c))
                if ring.is_zero(s):
                    out.pop(lbl, None)
                else:
                    out[lbl] = s
        return out

    def mul_labels(self, l1, l2):
        return self.normal_form(
            {self.label_to_word(l1) + self.label_to_word(l2): self.ring.one})

    def mul(self, e1, e2):
        ring = self.ring
        out = {}
        for l1, c1 in e1.items():
            for l2, c2 in e2.items():
                c = ring.mul(c1, c2)
                for lbl, x in self.mul_labels(l1, l2).items():
                    s = ring.add(out.get(lbl, ring.zero), ring.mul(c, x))
                    if ring.is_zero(s):
                        out.pop(lbl, None)
                    else:
                        out[lbl] = s
        return out

    def product(self, *elems):
        out = self.one()
        for e in elems:
            out = self.mul(out, e)
        return out

    def parse(self, text):
        from .presentations import parse_element
        return parse_element(self, text)


def confluence_check(algebra, max_word_len=4, samples=300, seed=0,
                     oracle=None, oracle_pairs=None, window=1):
    """Heuristic confluence/consistency report for a presented algebra.

    Reduces sample words with two different strategies (leftmost-first and
    rightmost-first choice of the misordered pair) and compares the
    results; a mismatch witnesses a genuine failure of confluence.  Note
    that strategy agreement cannot detect a *consistently wrong* rule set
    (e.g. a truncated right-hand side still yields some associative
    algebra), so an independent multiplication ``oracle`` can be supplied:
    a callable ``oracle(l1, l2) -> element dict`` compared against
    ``mul_labels`` on basis label pairs.

    Returns a dict with keys ``joinable``, ``oracle_match`` (None if no
    oracle) and ``witnesses``.
    """
    rng = random.Random(seed)
    ring = algebra.ring
    witnesses = []
    gens = list(range(len(algebra.generators)))
    words = []
    for L in range(2, max_word_len + 1):
        if len(gens) ** L <= samples:
            words.extend(itertools.product(gens, repeat=L))
        else:
            for _ in range(samples // (max_word_len - 1)):
                words.append(tuple(rng.choice(gens) for _ in range(L)))
    joinable = True
    for letters in words:
        word = tuple((g, 1) for g in letters)
        a = algebra.reduce_word(word, "leftmost")
        b = algebra.reduce_word(word, "rightmost")
        if not vec_eq(ring, a, b):
            joinable = False
            witnesses.append({
                "kind": "strategy-mismatch",
                "word": algebra.format_word(word),
                "leftmost": algebra.format_element(a),
                "rightmost": algebra.format_element(b),
            })
            if len(witnesses) >= 5:
                break
    oracle_match = None
    if oracle is not None:
        oracle_match = True
        if oracle_pairs is None:
            labels = algebra.basis(window=window) \
                if not algebra.is_finite_dimensional() else algebra.basis()
            oracle_pairs = itertools.product(labels, labels)
        for l1, l2 in oracle_pairs:
            ours = algebra.mul_labels(l1, l2)
            theirs = vec_clean(ring, oracle(l1, l2))
            if not vec_eq(ring, ours, theirs):
                oracle_match = False
                witnesses.append({
                    "kind": "oracle-mismatch",
                    "labels": (l1, l2),
                    "rewriting": algebra.format_element(ours),
                    "oracle": algebra.format_element(theirs),
                })
                if len(witnesses) >= 10:
                    break
    return {
        "joinable": joinable,
        "oracle_match": oracle_match,
        "witnesses": witnesses,
    }
