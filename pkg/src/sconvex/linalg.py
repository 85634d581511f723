"""Exact rational vectors, matrices, and linear solving.

Every geometric predicate in this package reduces to arithmetic over
``fractions.Fraction``; nothing in this module touches floating point.
Vectors are tuples of Fractions, matrices are tuples of equal-length
vectors.  Rank uses fraction-free (Bareiss) elimination on an integer
copy; solving uses reduced-fraction Gauss-Jordan with a deterministic
first-nonzero pivot rule, so the particular solution and nullspace basis
are reproducible.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArgumentError, DimensionMismatchError

Rat = Fraction
Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RAT_PATTERN = re.compile(r"[+-]?\d+(?:/\d+)?")


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, canonical rational string, or Fraction to a Fraction.

    Floats are rejected: exactness at the boundary is part of the
    serialization contract.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise ArgumentError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" or "p" with optional sign; the denominator must be positive."""
    text = text.strip()
    if not _RAT_PATTERN.fullmatch(text):
        raise ArgumentError(f"not a rational literal: {text!r}")
    if "/" in text:
        num_s, den_s = text.split("/")
        den = int(den_s)
        if den == 0:
            raise ArgumentError(f"zero denominator in {text!r}")
        return Fraction(int(num_s), den)
    return Fraction(int(text))


def format_rat(value: Fraction) -> str:
    """Canonical "p/q" (or "p" when the denominator is 1)."""
    return str(value)


def vec(values: Iterable[int | str | Fraction]) -> Vec:
    v = tuple(rat(x) for x in values)
    if not v:
        raise ArgumentError("empty vector")
    return v


def format_vec(v: Sequence[Fraction]) -> list[str]:
    return [str(x) for x in v]


def mat(rows: Iterable[Iterable[int | str | Fraction]]) -> Mat:
    converted = tuple(vec(row) for row in rows)
    if not converted:
        raise ArgumentError("empty matrix")
    width = len(converted[0])
    for row in converted:
        if len(row) != width:
            raise DimensionMismatchError("ragged matrix: rows of unequal length")
    return converted


def zeros(n: int) -> Vec:
    return (_ZERO,) * n


def unit(n: int, i: int) -> Vec:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def _same_dim(u: Sequence[Fraction], v: Sequence[Fraction]) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _same_dim(u, v)
    return sum((a * b for a, b in zip(u, v)), _ZERO)


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    _same_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    _same_dim(u, v)
    return tuple(a - b for a, b in zip(u, v))


def neg(v: Sequence[Fraction]) -> Vec:
    return tuple(-a for a in v)


def scale(t: Fraction | int, v: Sequence[Fraction]) -> Vec:
    t = rat(t)
    return tuple(t * a for a in v)


def combine(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]]) -> Vec:
    """Exact linear combination sum(c_i * v_i)."""
    if len(coeffs) != len(vectors):
        raise DimensionMismatchError("one coefficient per vector required")
    if not vectors:
        raise ArgumentError("empty combination")
    n = len(vectors[0])
    acc = [_ZERO] * n
    for c, v in zip(coeffs, vectors):
        _same_dim(v, acc)
        if c == 0:
            continue
        for i, x in enumerate(v):
            acc[i] += c * x
    return tuple(acc)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # Row scaling by the lcm of denominators preserves rank.
    out = []
    for row in m:
        scale_by = math.lcm(*(x.denominator for x in row))
        out.append([int(x * scale_by) for x in row])
    return out


def rank(m: Iterable[Iterable[int | str | Fraction]]) -> int:
    """Exact rank via fraction-free Bareiss elimination with column skipping."""
    a = _integer_rows(mat(m))
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[r][col] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        r += 1
        if r == nrows:
            break
    return r


def solve_linear(
    a: Iterable[Iterable[int | str | Fraction]],
    b: Iterable[int | str | Fraction],
) -> tuple[Vec, list[Vec]] | None:
    """Solve A x = b exactly.

    Returns ``(particular, nullspace_basis)`` or ``None`` when inconsistent.
    The particular solution sets all free variables to zero; each nullspace
    basis vector sets one free variable to one (ascending order), which makes
    downstream dependence-based constructions deterministic.
    """
    a = mat(a)
    b = vec(b)
    if len(a) != len(b):
        raise DimensionMismatchError("A and b must have the same number of rows")
    ncols = len(a[0])
    rows = [list(row) + [rhs] for row, rhs in zip(a, b)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    particular = [_ZERO] * ncols
    for row_idx, col in enumerate(pivots):
        particular[col] = rows[row_idx][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vec] = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row_idx, col in enumerate(pivots):
            v[col] = -rows[row_idx][f]
        basis.append(tuple(v))
    return tuple(particular), basis


def linearly_independent(vs: Sequence[Sequence[int | str | Fraction]]) -> bool:
    if not vs:
        raise ArgumentError("independence of an empty family is undefined here")
    m = mat(vs)
    return rank(m) == len(m)


def affinely_independent(vs: Sequence[Sequence[int | str | Fraction]]) -> bool:
    if not vs:
        raise ArgumentError("independence of an empty family is undefined here")
    m = mat(vs)
    if len(m) == 1:
        return True
    diffs = [sub(row, m[0]) for row in m[1:]]
    return linearly_independent(diffs)
