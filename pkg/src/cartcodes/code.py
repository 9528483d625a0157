"""Cartesian evaluation codes: exact parameter formulas, footprint bases,
generator matrices, and extremal minimum-weight codewords.

All formulas take the sorted cardinality list (d_1 <= ... <= d_n, each >= 2
after normalization) and use exact integer arithmetic throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple

import numpy as np

from .errors import LengthMismatchError, OutOfRangeError, TooLargeError
from .field import Field
from .grid import Grid
from .poly import MultiPoly, evaluate_on_grid, grevlex_key, monomial_rows


class KLDecomposition(NamedTuple):
    """d = sum_{i<=k}(d_i - 1) + ell with 1 <= ell <= d_{k+1} - 1."""

    k: int
    ell: int


@dataclass(frozen=True)
class HilbertData:
    """Numerator coefficients h_0..h_r of prod_i (1 + t + ... + t^{d_i - 1})."""

    numerator: tuple[int, ...]
    regularity: int
    degree: int


@dataclass(frozen=True)
class CodeParams:
    length: int
    dimension: int
    min_distance: int
    regularity: int

    @property
    def saturated(self) -> bool:
        return self.dimension == self.length


def regularity(cards) -> int:
    """Least degree at which the code fills the whole ambient space."""
    return sum(c - 1 for c in cards)


def _check_sorted_cards(cards):
    if not cards:
        raise OutOfRangeError("empty cardinality list")
    if any(a > b for a, b in zip(cards, cards[1:])):
        raise OutOfRangeError(f"cards must be sorted ascending: {cards}")
    if cards[0] < 2:
        raise OutOfRangeError(f"cards must all be >= 2: {cards}")


def decompose_k_ell(cards, d: int) -> KLDecomposition:
    """The unique (k, ell) splitting of d against sorted cards.

    Defined for 1 <= d <= regularity - 1; the boundary regimes (d = 0 and
    d >= regularity) are the caller's responsibility.
    """
    cards = tuple(cards)
    _check_sorted_cards(cards)
    r = regularity(cards)
    if d < 1 or d >= r:
        raise OutOfRangeError(f"d = {d} outside 1..{r - 1}")
    acc = 0
    for k in range(len(cards)):
        ell = d - acc
        if 1 <= ell <= cards[k] - 1:
            return KLDecomposition(k, ell)
        acc += cards[k] - 1
    raise AssertionError("no (k, ell) split; input checks are inconsistent")


def dimension_formula(cards, d: int) -> int:
    """Code dimension by inclusion-exclusion over coordinate subsets.

    Binomials with a negative lower index contribute zero; intermediates are
    exact Python integers.
    """
    if d < 0:
        raise OutOfRangeError("d must be >= 0")
    n = len(cards)
    total = 0
    for size in range(n + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(cards, size):
            rem = d - sum(subset)
            if rem >= 0:
                total += sign * math.comb(n + rem, rem)
    return total


def hilbert_numerator(cards) -> tuple[int, ...]:
    """Coefficients of prod_i (1 + t + ... + t^{cards_i - 1})."""
    coeffs = [1]
    for c in cards:
        out = [0] * (len(coeffs) + c - 1)
        for i, a in enumerate(coeffs):
            if a:
                for j in range(c):
                    out[i + j] += a
        coeffs = out
    return tuple(coeffs)


def hilbert_function(cards, d: int) -> int:
    """Partial sum of the numerator coefficients; equals dimension_formula."""
    if d < 0:
        raise OutOfRangeError("d must be >= 0")
    num = hilbert_numerator(cards)
    return sum(num[: d + 1])


def hilbert_data(cards) -> HilbertData:
    num = hilbert_numerator(cards)
    return HilbertData(numerator=num, regularity=len(num) - 1, degree=sum(num))


def min_distance_formula(cards, d: int) -> int:
    """Exact minimum distance.

    d = 0 is the repetition code (distance = grid size, an extension of the
    d >= 1 theory forced by evaluating constants); d >= regularity gives the
    full space, distance 1.
    """
    cards = tuple(cards)
    if d < 0:
        raise OutOfRangeError("d must be >= 0")
    if d == 0:
        return math.prod(cards)
    if d >= regularity(cards):
        return 1
    k, ell = decompose_k_ell(cards, d)
    return (cards[k] - ell) * math.prod(cards[k + 1 :])  # empty product when k = n-1


def zero_bound(cards, d: int) -> int:
    """Sharp maximum of grid zeros over nonvanishing polynomials of degree <= d.

    Equals length - min_distance_formula for 1 <= d <= regularity - 1.
    """
    cards = tuple(cards)
    k, ell = decompose_k_ell(cards, d)
    head = math.prod(cards[: k + 1])
    tail = math.prod(cards[k + 1 :])
    return tail * (head - cards[k] + ell)


def loose_zero_bound(cards, d: int) -> int:
    """Degree-times-slice bound on grid zeros; not clamped to the grid size."""
    cards = tuple(cards)
    if d < 0:
        raise OutOfRangeError("d must be >= 0")
    if len(cards) == 1:
        return d
    return math.prod(cards[1:]) * d


def code_params(cards, d: int) -> CodeParams:
    cards = tuple(cards)
    return CodeParams(
        length=math.prod(cards),
        dimension=dimension_formula(cards, d),
        min_distance=min_distance_formula(cards, d),
        regularity=regularity(cards),
    )


def standard_monomials(cards, d: int) -> list[tuple[int, ...]]:
    """Footprint monomials: a_i <= cards_i - 1 and |a| <= d, ascending grevlex."""
    ranges = [range(min(c - 1, d) + 1) for c in cards]
    exps = [e for e in product(*ranges) if sum(e) <= d]
    exps.sort(key=grevlex_key)
    return exps


class GeneratorMatrix:
    """Rows: footprint monomial evaluations (ascending grevlex); columns: grid points."""

    __slots__ = ("grid", "d", "monomials", "array")

    def __init__(self, grid: Grid, d: int, monomials, array: np.ndarray):
        self.grid = grid
        self.d = d
        self.monomials = tuple(tuple(m) for m in monomials)
        self.array = array

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def format(self) -> str:
        """Matrix file body: 'q n_rows n_cols' then one row of codes per line."""
        lines = [f"{self.grid.field.q} {self.rows} {self.cols}"]
        for row in self.array:
            lines.append(" ".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"

    def legend(self) -> str:
        """Sidecar body: exponent vectors in row order."""
        return "\n".join(" ".join(str(a) for a in m) for m in self.monomials) + "\n"

    def __repr__(self):
        return f"GeneratorMatrix({self.rows}x{self.cols}, q={self.grid.field.q}, d={self.d})"


class CartesianCode:
    """Degree-d evaluation code on a normalized cartesian grid.

    Construction normalizes the coordinate sets: singletons are dropped
    (evaluation at a pinned coordinate repeats the smaller code) and the rest
    are sorted by cardinality.  `kept[j]` is the original index of coordinate
    j of the normalized grid, for mapping back to input coordinates.
    """

    def __init__(self, grid: Grid, d: int):
        if d < 0:
            raise OutOfRangeError("degree must be >= 0")
        self.source = grid
        self.grid, self.kept, self.dropped = grid.normalized()
        self.d = d
        self._matrix = None
        self._min_weight = None  # cached full-scan oracle result

    @property
    def field(self) -> Field:
        return self.grid.field

    @property
    def cards(self) -> tuple[int, ...]:
        return self.grid.cards

    @property
    def length(self) -> int:
        return self.grid.size

    @property
    def regularity(self) -> int:
        return regularity(self.cards)

    def params(self) -> CodeParams:
        return code_params(self.cards, self.d)

    @property
    def dimension(self) -> int:
        return dimension_formula(self.cards, self.d)

    @property
    def min_distance(self) -> int:
        return min_distance_formula(self.cards, self.d)

    def generator_matrix(self) -> GeneratorMatrix:
        if self._matrix is None:
            self._matrix = build_generator_matrix(self)
        return self._matrix

    def extremal_codeword(self):
        return extremal_codeword(self)

    def __repr__(self):
        return f"CartesianCode(cards={self.cards}, d={self.d}, q={self.field.q})"


def normalize_spec(field: Field, sets, d: int) -> CartesianCode:
    """Build a code spec from raw per-coordinate element lists."""
    return CartesianCode(Grid(field, sets), d)


def build_generator_matrix(code: CartesianCode) -> GeneratorMatrix:
    """Evaluate the footprint monomials of degree <= d on the grid.

    The row count equals dimension_formula by construction; full row rank is
    a verification concern (see the oracle module).
    """
    grid = code.grid
    monos = standard_monomials(grid.cards, code.d)
    arr = monomial_rows(grid, monos)
    return GeneratorMatrix(grid, code.d, monos, arr)


def encode(matrix: GeneratorMatrix, message) -> np.ndarray:
    """Codeword = message . matrix over the field."""
    F = matrix.grid.field
    msg = [F.validate(c) for c in message]
    if len(msg) != matrix.rows:
        raise LengthMismatchError(f"message length {len(msg)} != {matrix.rows} rows")
    word = np.zeros(matrix.cols, dtype=np.int64)
    try:
        T = F.tables()
    except TooLargeError:
        T = None
    if T is None:
        for c in range(matrix.cols):
            acc = 0
            for i, m in enumerate(msg):
                if m:
                    acc = F.add(acc, F.mul(m, int(matrix.array[i, c])))
            word[c] = acc
        return word
    for i, m in enumerate(msg):
        if m:
            word = T.add[word, T.mul[m, matrix.array[i]]]
    return word


def extremal_codeword(code: CartesianCode):
    """A codeword of minimum weight together with its defining polynomial.

    The polynomial is the product of linear factors (c - t_i) over the first
    cards_i - 1 elements of each of the first k coordinate sets and the first
    ell elements of set k+1 (element lists consumed in sorted-code order, so
    the output is reproducible).  Its total degree is exactly d and the
    weight of its evaluation vector is exactly the formula distance.
    """
    grid = code.grid
    k, ell = decompose_k_ell(grid.cards, code.d)
    F = grid.field
    n = grid.n
    poly = MultiPoly.constant(F, n, 1)
    minus_one = F.neg(1)
    for i in range(k + 1):
        count = grid.cards[i] - 1 if i < k else ell
        unit = tuple(1 if j == i else 0 for j in range(n))
        for j in range(count):
            c = grid.sets[i][j]
            poly = poly * MultiPoly(F, n, {(0,) * n: c, unit: minus_one})
    vec = evaluate_on_grid(poly, grid)
    return poly, vec
