"""Sparse multivariate polynomials over a finite field.

Monomials are exponent tuples, coefficients are element codes.  The grid
normal form caps the degree in t_i at |A_i| - 1 by rewriting with the
univariate polynomials that vanish on the coordinate sets; it agrees with
the input at every grid point and never raises the total degree.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import ArityMismatchError, FieldMismatchError, TooLargeError
from .field import Field
from .grid import Grid


def grevlex_key(exps):
    """Sort key for graded reverse lexicographic order with t1 > t2 > ... > tn."""
    return (sum(exps), tuple(-a for a in reversed(exps)))


_FACTOR = re.compile(r"^t(\d+)(?:\^(\d+))?$")


class MultiPoly:
    """Immutable sparse polynomial: a map from exponent tuple to nonzero code.

    The zero polynomial has an empty term map and total_degree None (an
    explicit marker, never a signed sentinel).
    """

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: Field, n: int, terms=None):
        if n < 1:
            raise ArityMismatchError("a polynomial needs at least one variable")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(a) for a in exps)
            if len(exps) != n:
                raise ArityMismatchError(f"monomial {exps} has arity {len(exps)}, expected {n}")
            if any(a < 0 for a in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = field.validate(c)
            if c:
                clean[exps] = c
        self.field = field
        self.n = n
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, {})

    @classmethod
    def constant(cls, field, n, c):
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def variable(cls, field, n, i):
        """The coordinate t_{i+1} (i is 0-based)."""
        if not 0 <= i < n:
            raise ArityMismatchError(f"variable index {i} outside 0..{n - 1}")
        return cls(field, n, {tuple(1 if j == i else 0 for j in range(n)): 1})

    # -- structure --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self):
        """Maximum term degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int):
        if not self.terms:
            return None
        return max(e[i] for e in self.terms)

    def _check_compatible(self, other: "MultiPoly"):
        if self.field != other.field:
            raise FieldMismatchError("operands live in different fields")
        if self.n != other.n:
            raise ArityMismatchError(f"operands have {self.n} and {other.n} variables")

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check_compatible(other)
        F = self.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = F.add(out.get(exps, 0), c)
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
        return MultiPoly(F, self.n, out)

    def __neg__(self):
        F = self.field
        return MultiPoly(F, self.n, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, (int, np.integer)):
            c = F.validate(other)
            return MultiPoly(F, self.n, {e: F.mul(v, c) for e, v in self.terms.items()})
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = F.add(out.get(key, 0), F.mul(ca, cb))
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return MultiPoly(F, self.n, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    # -- evaluation ----------------------------------------------------------------

    def evaluate(self, point) -> int:
        """Value at a point, via per-variable power tables."""
        point = tuple(point)
        if len(point) != self.n:
            raise ArityMismatchError(f"point has {len(point)} coordinates, expected {self.n}")
        F = self.field
        pt = [F.validate(x) for x in point]
        maxe = [0] * self.n
        for exps in self.terms:
            for i, a in enumerate(exps):
                if a > maxe[i]:
                    maxe[i] = a
        pows = []
        for i in range(self.n):
            row = [1]
            for _ in range(maxe[i]):
                row.append(F.mul(row[-1], pt[i]))
            pows.append(row)
        acc = 0
        for exps, c in self.terms.items():
            v = c
            for i, a in enumerate(exps):
                if a:
                    v = F.mul(v, pows[i][a])
            acc = F.add(acc, v)
        return acc

    __call__ = evaluate

    # -- text format -------------------------------------------------------------------

    def format(self) -> str:
        """Canonical text form: terms in descending grevlex joined by ' + '."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[exps]
            factors = []
            if c != 1 or not any(exps):
                factors.append(str(c))
            for i, a in enumerate(exps):
                if a == 0:
                    continue
                factors.append(f"t{i + 1}" if a == 1 else f"t{i + 1}^{a}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __str__ = format

    def __repr__(self):
        return f"MultiPoly({self.format()!r}, n={self.n}, q={self.field.q})"

    @classmethod
    def parse(cls, field, n, text: str) -> "MultiPoly":
        """Parse 'c*t1^a1*...*tn^an + ...'.

        Whitespace is ignored everywhere; unit coefficients and exponents may
        be omitted.  Coefficients must be codes in [0, q).
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ValueError("empty polynomial text")
        terms: dict[tuple[int, ...], int] = {}
        for term_text in compact.split("+"):
            if not term_text:
                raise ValueError(f"empty term in {text!r}")
            coeff = 1
            exps = [0] * n
            for tok in term_text.split("*"):
                if not tok:
                    raise ValueError(f"empty factor in {term_text!r}")
                if tok.isdigit():
                    coeff = field.mul(coeff, field.validate(int(tok)))
                    continue
                m = _FACTOR.match(tok)
                if not m:
                    raise ValueError(f"bad factor {tok!r}")
                idx = int(m.group(1))
                if not 1 <= idx <= n:
                    raise ArityMismatchError(f"variable t{idx} outside t1..t{n}")
                exps[idx - 1] += int(m.group(2) or 1)
            key = tuple(exps)
            terms[key] = field.add(terms.get(key, 0), coeff)
        return cls(field, n, terms)


def vanishing_univariate(grid: Grid, i: int) -> MultiPoly:
    """prod_{c in A_i} (t_i - c), the monic polynomial cutting out A_i."""
    F = grid.field
    coeffs = _monic_root_product(F, grid.sets[i])
    terms = {}
    for a, c in enumerate(coeffs):
        if c:
            terms[tuple(a if j == i else 0 for j in range(grid.n))] = c
    return MultiPoly(F, grid.n, terms)


def _monic_root_product(F: Field, roots) -> list[int]:
    # little-endian coefficients of prod (t - c)
    coeffs = [1]
    for c in roots:
        nxt = [0] * (len(coeffs) + 1)
        mc = F.neg(c)
        for j, a in enumerate(coeffs):
            nxt[j + 1] = F.add(nxt[j + 1], a)
            nxt[j] = F.add(nxt[j], F.mul(a, mc))
        coeffs = nxt
    return coeffs


def _reduced_powers(F: Field, elems, max_exp: int) -> list[list[int]]:
    """Coefficients of t^a modulo prod_{c in elems}(t - c), for a = 0..max_exp."""
    d = len(elems)
    full = _monic_root_product(F, elems)
    top_sub = [F.neg(c) for c in full[:d]]  # t^d = sum top_sub[j] t^j
    cur = [1] + [0] * (d - 1)
    rows = [cur]
    for _ in range(max_exp):
        spill = cur[d - 1]
        nxt = [0] + cur[: d - 1]
        if spill:
            nxt = [F.add(x, F.mul(spill, t)) for x, t in zip(nxt, top_sub)]
        rows.append(nxt)
        cur = nxt
    return rows


def reduce_mod_grid(f: MultiPoly, grid: Grid) -> MultiPoly:
    """Normal form with deg_{t_i} < |A_i|, equal to f at every grid point.

    Idempotent and linear; the total degree never increases.
    """
    if f.field != grid.field:
        raise FieldMismatchError("polynomial and grid fields differ")
    if f.n != grid.n:
        raise ArityMismatchError(f"polynomial has {f.n} variables, grid has {grid.n}")
    F = f.field
    maxe = [0] * f.n
    for exps in f.terms:
        for i, a in enumerate(exps):
            if a > maxe[i]:
                maxe[i] = a
    tables = [_reduced_powers(F, grid.sets[i], maxe[i]) for i in range(f.n)]
    out: dict[tuple[int, ...], int] = {}
    for exps, coeff in f.terms.items():
        partial = {(): coeff}
        for i, a in enumerate(exps):
            row = tables[i][a]
            nxt: dict[tuple[int, ...], int] = {}
            for pexps, pc in partial.items():
                for e_i, rc in enumerate(row):
                    if rc == 0:
                        continue
                    key = pexps + (e_i,)
                    s = F.add(nxt.get(key, 0), F.mul(pc, rc))
                    if s:
                        nxt[key] = s
                    elif key in nxt:
                        del nxt[key]
            partial = nxt
        for key, v in partial.items():
            s = F.add(out.get(key, 0), v)
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return MultiPoly(F, f.n, out)


def power_columns(grid: Grid, max_exps) -> list[np.ndarray]:
    """Per-coordinate arrays P_i[a, j] = A_i[j]^a for a = 0..max_exps[i]."""
    F = grid.field
    cols = []
    for i in range(grid.n):
        col = np.empty((max_exps[i] + 1, grid.cards[i]), dtype=np.int64)
        col[0] = 1
        for j, x in enumerate(grid.sets[i]):
            acc = 1
            for a in range(1, max_exps[i] + 1):
                acc = F.mul(acc, x)
                col[a, j] = acc
        cols.append(col)
    return cols


def monomial_rows(grid: Grid, exps_list) -> np.ndarray:
    """Evaluations of monomials on the whole grid, one row per monomial.

    Columns follow grid.points() order.  Uses lookup tables when the field is
    small enough, otherwise falls back to scalar evaluation.
    """
    rows = len(exps_list)
    arr = np.empty((rows, grid.size), dtype=np.int64)
    if rows == 0:
        return arr
    F = grid.field
    try:
        T = F.tables()
    except TooLargeError:
        T = None
    if T is None:
        for r, exps in enumerate(exps_list):
            poly = MultiPoly(F, grid.n, {tuple(exps): 1})
            arr[r] = [poly.evaluate(pt) for pt in grid.points()]
        return arr
    n = grid.n
    maxe = [max(e[i] for e in exps_list) for i in range(n)]
    cols = power_columns(grid, maxe)
    for r, exps in enumerate(exps_list):
        v = None
        for i, a in enumerate(exps):
            colb = cols[i][a].reshape((1,) * i + (-1,) + (1,) * (n - 1 - i))
            v = colb if v is None else T.mul[v, colb]
        arr[r] = np.broadcast_to(v, grid.cards).reshape(-1)
    return arr


def evaluate_on_grid(f: MultiPoly, grid: Grid) -> np.ndarray:
    """Values of f at every grid point, flat in grid.points() order."""
    if f.field != grid.field:
        raise FieldMismatchError("polynomial and grid fields differ")
    if f.n != grid.n:
        raise ArityMismatchError(f"polynomial has {f.n} variables, grid has {grid.n}")
    if not f.terms:
        return np.zeros(grid.size, dtype=np.int64)
    F = grid.field
    try:
        T = F.tables()
    except TooLargeError:
        return np.fromiter(
            (f.evaluate(pt) for pt in grid.points()), dtype=np.int64, count=grid.size
        )
    exps_list = list(f.terms)
    rows = monomial_rows(grid, exps_list)
    acc = np.zeros(grid.size, dtype=np.int64)
    for r, exps in enumerate(exps_list):
        acc = T.add[acc, T.mul[f.terms[exps], rows[r]]]
    return acc


def zero_count(f: MultiPoly, grid: Grid) -> int:
    """|{P in the grid : f(P) = 0}|, by full enumeration."""
    vals = evaluate_on_grid(f, grid)
    return int(vals.size - np.count_nonzero(vals))
