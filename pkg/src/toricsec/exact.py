"""Exact rational linear algebra over :class:`fractions.Fraction`.

Everything here is dense and quadratic/cubic; matrices are at most a few
dozen rows wide in practice.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """Parse ``value`` as an exact rational ("p/q", int, Fraction)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def to_vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fracs = [Fraction(x) for x in vec]
    den = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of ``{x : rows @ x = 0}``, one vector per free column."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Vector:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return tuple(row[n] for row in reduced)


def det(matrix: Sequence[Sequence]):
    """Determinant by fraction-free Bareiss elimination (exact for ints)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num / prev if isinstance(num, Fraction) else num // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def normalized_volume(points: Sequence[Sequence]) -> int | Fraction:
    """``|det(p1-p0, ..., pn-p0)|``, i.e. n! times the Euclidean volume."""
    p0 = points[0]
    return abs(det([[x - y for x, y in zip(p, p0)] for p in points[1:]]))


def simplex_volume_of(points: Sequence[Sequence]) -> Fraction:
    n = len(points) - 1
    return Fraction(normalized_volume(points)) / factorial(n)


def smith_invariants(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors (elementary divisors) of an integer matrix."""
    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DM
    from sympy.polys.matrices.normalforms import invariant_factors

    if not rows or not rows[0]:
        return ()
    factors = invariant_factors(DM([list(map(int, r)) for r in rows], ZZ))
    return tuple(int(f) for f in factors if f != 0)
