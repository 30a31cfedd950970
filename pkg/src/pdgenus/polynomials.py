"""Exact arithmetic: dense integer polynomials and rational matrices.

Everything in this module is exact.  Coefficient sums of the genus
polynomials reach 2**e, so arbitrary-precision integers are mandatory and
no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class IntPolynomial:
    """Dense univariate polynomial in ``z`` over the integers.

    ``coeffs[i]`` is the coefficient of ``z**i``.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coeff_sum(self) -> int:
        """Sum of all coefficients, i.e. the value at z = 1."""
        return sum(self.coeffs)

    def evaluate(self, x):
        """Evaluate at ``x`` (int, Fraction, ...) by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        """Canonical ascending text form, e.g. ``2 + 10z + 4z^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "z" if mag == 1 else f"{mag}z"
            else:
                term = f"z^{i}" if mag == 1 else f"{mag}z^{i}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> IntPolynomial:
        return cls(data["coeffs"])


def _normalized_int_row(row: Sequence) -> list[int]:
    """Scale a rational row to coprime integers (zero row stays zero)."""
    fracs = [Fraction(x) for x in row]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _row_reduce_int(rows: Iterable[Sequence]) -> list[list[int]]:
    """Integer fraction-free row reduction; returns the pivot rows.

    Row scaling does not change the span's rank, so this is safe for rank
    computations and much faster than Fraction arithmetic.
    """
    pivots: list[tuple[int, list[int]]] = []  # (pivot column, row)
    for raw in rows:
        r = _normalized_int_row(raw)
        for col, prow in pivots:
            if r[col]:
                a, b = prow[col], r[col]
                g = gcd(a, b)
                a, b = a // g, b // g
                r = [x * a - y * b for x, y in zip(r, prow)]
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            continue
        g = 0
        for x in r:
            g = gcd(g, x)
        if g > 1:
            r = [x // g for x in r]
        pivots.append((lead, r))
        pivots.sort(key=lambda p: p[0])
    return [p[1] for p in pivots]


class RationalMatrix:
    """Matrix over the exact rationals.

    Rows are tuples of :class:`fractions.Fraction`; ``rank`` and ``solve``
    use exact Gaussian elimination.
    """

    __slots__ = ("rows", "num_cols")

    def __init__(self, rows: Iterable[Sequence], num_cols: int | None = None) -> None:
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("rows have unequal lengths")
            self.num_cols = widths.pop()
            if num_cols is not None and num_cols != self.num_cols:
                raise ValueError("num_cols does not match the rows")
        else:
            self.num_cols = 0 if num_cols is None else num_cols

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence]) -> RationalMatrix:
        cols = [list(c) for c in columns]
        if not cols:
            return cls([])
        return cls(zip(*cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.num_cols)

    def transpose(self) -> RationalMatrix:
        if not self.rows:
            return RationalMatrix([], num_cols=0)
        return RationalMatrix(zip(*self.rows), num_cols=len(self.rows))

    def rank(self) -> int:
        return len(_row_reduce_int(self.rows))

    def solve(self, target: Sequence) -> list[Fraction] | None:
        """One exact solution ``x`` of ``self @ x = target``, or ``None``.

        Free variables are set to zero, so the solution is deterministic.
        """
        b = [Fraction(t) for t in target]
        if len(b) != len(self.rows):
            raise ValueError("target length does not match the row count")
        aug = [list(row) + [t] for row, t in zip(self.rows, b)]
        m = self.num_cols
        pivot_cols: list[int] = []
        rank = 0
        for col in range(m):
            pivot = next((i for i in range(rank, len(aug)) if aug[i][col]), None)
            if pivot is None:
                continue
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
            prow = aug[rank]
            inv = 1 / prow[col]
            aug[rank] = [x * inv for x in prow]
            for i in range(len(aug)):
                if i != rank and aug[i][col]:
                    factor = aug[i][col]
                    aug[i] = [x - factor * y for x, y in zip(aug[i], aug[rank])]
            pivot_cols.append(col)
            rank += 1
        for i in range(rank, len(aug)):
            if aug[i][m]:
                return None
        x = [Fraction(0)] * m
        for i, col in enumerate(pivot_cols):
            x[col] = aug[i][m]
        return x


def solve_in_span(matrix: RationalMatrix, target: Sequence) -> list[Fraction] | None:
    """Express ``target`` in the column span of ``matrix``.

    Returns exact coefficients ``x`` with ``matrix @ x = target``, or
    ``None`` when the target lies outside the span.
    """
    return matrix.solve(target)
