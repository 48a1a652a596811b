"""Sparse exact linear algebra over the coefficient rings.

Vectors are plain dicts mapping basis labels (any hashable, totally
ordered within one space) to nonzero ring elements.  Matrices appear only
implicitly, as ``LinearMap`` objects given by their action on basis
labels; solving and kernel computation run fraction-free Gaussian
elimination over a field (the phase ring is lifted to its fraction field
and the result certified to be Laurent on exit).

Pivoting is deterministic: rows and columns are processed in sorted label
order, so results are reproducible across runs.
"""

from __future__ import annotations

from .scalars import NotAUnitError, PhaseFractionField, PhaseRing


def vec_add(ring, u, v):
    out = dict(u)
    for k, c in v.items():
        s = ring.add(out.get(k, ring.zero), c)
        if ring.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_sub(ring, u, v):
    return vec_add(ring, u, vec_scale(ring, ring.neg(ring.one), v))


def vec_scale(ring, c, v):
    if ring.is_zero(c):
        return {}
    return {k: ring.mul(c, x) for k, x in v.items()}


def vec_eq(ring, u, v):
    if set(u) != set(v):
        return all(ring.is_zero(c) for c in vec_sub(ring, u, v).values())
    return all(ring.eq(u[k], v[k]) for k in u)


def vec_clean(ring, v):
    return {k: c for k, c in v.items() if not ring.is_zero(c)}


def vec_map_ring(src, dst, v, embed):
    return {k: embed(c) for k, c in v.items()}


class LinearMap:
    """A linear map given by its action on basis labels.

    ``rule(label) -> vector dict`` in the target space.  Images are
    memoized, so repeated applications stay cheap.
    """

    def __init__(self, ring, rule, name=None):
        self.ring = ring
        self.rule = rule
        self.name = name
        self._cache = {}

    def on_label(self, label):
        img = self._cache.get(label)
        if img is None:
            img = vec_clean(self.ring, self.rule(label))
            self._cache[label] = img
        return img

    def __call__(self, v):
        ring = self.ring
        out = {}
        for label, c in v.items():
            for k, x in self.on_label(label).items():
                s = ring.add(out.get(k, ring.zero), ring.mul(c, x))
                if ring.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def then(self, other):
        return LinearMap(other.ring, lambda lbl: other(self.on_label(lbl)))


class SolveError(Exception):
    pass


def _field_for(ring):
    """Return (field, embed, exit) for eliminating over ``ring``."""
    if isinstance(ring, PhaseRing):
        ff = PhaseFractionField(ring)
        return ff, ff.lift, ff.to_phase
    return ring, (lambda x: x), (lambda x: x)


def _row_reduce(field, reduced, col_order, pivot_candidates):
    """In-place Gauss-Jordan row reduction on column-stored data.

    ``reduced`` maps column label -> {row: entry}.  Pivot columns are
    chosen from ``pivot_candidates`` in order, the pivot row within a
    column is the sorted-smallest unused row.  Returns the dict
    pivot row -> pivot column.
    """
    pivots = {}
    used_rows = set()
    for c in pivot_candidates:
        col = reduced[c]
        pivot_row = None
        for r in sorted(col):
            if r not in used_rows and not field.is_zero(col[r]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        inv = field.inv(col[pivot_row])
        # scale the pivot row so the pivot entry becomes 1
        for c2 in col_order:
            col2 = reduced[c2]
            if pivot_row in col2:
                col2[pivot_row] = field.mul(inv, col2[pivot_row])
        # clear the pivot column in every other row
        factors = [(r, x) for r, x in col.items() if r != pivot_row]
        for c2 in col_order:
            col2 = reduced[c2]
            v = col2.get(pivot_row)
            if v is None or field.is_zero(v):
                continue
            for r, f in factors:
                s = field.sub(col2.get(r, field.zero), field.mul(f, v))
                if field.is_zero(s):
                    col2.pop(r, None)
                else:
                    col2[r] = s
        pivots[pivot_row] = c
        used_rows.add(pivot_row)
    return pivots


def solve_exact(linear_map, target, domain_labels):
    """Solve ``linear_map(x) = target`` for x supported on ``domain_labels``.

    Raises SolveError if the system is inconsistent; if underdetermined the
    deterministic particular solution (free variables set to zero) is
    returned.  Over the phase ring the elimination runs in the fraction
    field and the solution is certified to have Laurent entries.
    """
    ring = linear_map.ring
    field, embed, exit_ = _field_for(ring)
    col_order = sorted(domain_labels)
    columns = {}
    for lbl in col_order:
        columns[lbl] = {r: embed(x) for r, x in linear_map.on_label(lbl).items()}
    rhs = {r: embed(x) for r, x in vec_clean(ring, target).items()}

    # append rhs as an extra (never pivoted) column and row-reduce together
    RHS = object()
    reduced = {c: dict(columns[c]) for c in col_order}
    reduced[RHS] = dict(rhs)
    pivots = _row_reduce(field, reduced, col_order + [RHS], col_order)

    residual = reduced[RHS]
    for r, x in residual.items():
        if r not in pivots and not field.is_zero(x):
            raise SolveError(f"inconsistent system: residual in row {r!r}")
    solution = {}
    for r, c in pivots.items():
        x = residual.get(r, field.zero)
        if not field.is_zero(x):
            try:
                solution[c] = exit_(x)
            except NotAUnitError:
                raise SolveError(
                    f"solution entry for {c!r} is not Laurent") from None
    return solution


def kernel_basis(linear_map, domain_labels):
    """Deterministic basis of the kernel of ``linear_map`` on the span of
    ``domain_labels``, as a list of vector dicts sorted by free label."""
    ring = linear_map.ring
    field, embed, exit_ = _field_for(ring)
    col_order = sorted(domain_labels)
    reduced = {
        lbl: {r: embed(x) for r, x in linear_map.on_label(lbl).items()}
        for lbl in col_order
    }
    pivots = _row_reduce(field, reduced, col_order, col_order)
    pivot_cols = set(pivots.values())
    row_to_col = {r: c for r, c in pivots.items()}
    basis = []
    for free in col_order:
        if free in pivot_cols:
            continue
        vec = {free: ring.one}
        for r, x in reduced[free].items():
            c = row_to_col.get(r)
            if c is None:
                continue
            try:
                vec[c] = ring.neg(exit_(x))
            except NotAUnitError:
                raise SolveError(
                    f"kernel entry for {c!r} is not Laurent") from None
        basis.append(vec_clean(ring, vec))
    return basis


def invert_on_basis(linear_map, domain_labels, codomain_labels=None):
    """Return the inverse of a bijective map as a new LinearMap.

    The inverse images are computed lazily by solving, one codomain label
    at a time, and memoized inside the returned LinearMap.
    """
    ring = linear_map.ring

    def rule(label):
        return solve_exact(linear_map, {label: ring.one}, domain_labels)

    return LinearMap(ring, rule)
