"""Ehrhart polynomial, h-vector and the lattice-point volume bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import normalized_volume, solve
from .hull import HPolytope, VPolytope, lattice_points, volume


class EhrhartError(AssertionError):
    """An Ehrhart-theoretic identity failed on a computed instance."""


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``E(l) = sum_k coefficients[k] * l**k``, interpolated from ``values = E(0..n)``."""

    coefficients: tuple[Fraction, ...]
    values: tuple[int, ...]
    held_out: int  # fresh count of E(n+1)
    polytope: HPolytope

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, l: int) -> Fraction:
        return sum((c * l**k for k, c in enumerate(self.coefficients)), Fraction(0))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("l" if k == 1 else f"l^{k}")
            coef = str(c) if (mono == "" or c not in (1, -1)) else ("-" if c == -1 else "")
            sep = "*" if coef not in ("", "-") and mono else ""
            terms.append(f"{coef}{sep}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _as_hpolytope(Q) -> HPolytope:
    if isinstance(Q, HPolytope):
        return Q
    if isinstance(Q, VPolytope):
        return Q.hrep
    return Q.polytope  # PointConfiguration


def ehrhart_polynomial(Q) -> EhrhartPolynomial:
    """Interpolate ``E(l) = Card(lQ ∩ Z^n)`` from ``l = 0..n`` and check ``l = n+1``."""
    poly = _as_hpolytope(Q)
    n = poly.ambient_dim
    if poly.dim != n:
        raise ValueError("Ehrhart polynomial requires a full-dimensional polytope")
    values = [1] + [len(lattice_points(poly, l)) for l in range(1, n + 1)]
    vandermonde = [[Fraction(l) ** k for k in range(n + 1)] for l in range(n + 1)]
    coeffs = tuple(solve(vandermonde, values))
    e = EhrhartPolynomial(coeffs, tuple(values), len(lattice_points(poly, n + 1)), poly)
    if e(n + 1) != e.held_out:
        raise EhrhartError(f"interpolant gives E({n + 1}) = {e(n + 1)}, count is {e.held_out}")
    if coeffs[n] != volume(poly.vertices):
        raise EhrhartError(f"leading coefficient {coeffs[n]} differs from the volume")
    return e


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class HVectorChecks:
    h0_is_one: bool
    h1_counts_points: bool  # h_1 == Card - n - 1
    sum_is_degree: bool  # sum h == n! Vol
    nonnegative: bool

    @property
    def ok(self) -> bool:
        return self.h0_is_one and self.h1_counts_points and self.sum_is_degree and self.nonnegative


def h_vector(E: EhrhartPolynomial, strict: bool = True) -> HVector:
    """Numerator coefficients of the Ehrhart series over ``(1 - t)^(n+1)``.

    With ``strict`` a failed identity raises :class:`EhrhartError`.
    """
    n = E.degree
    h = []
    for k in range(n + 1):
        hk = sum((-1) ** i * comb(n + 1, i) * E(k - i) for i in range(k + 1))
        if hk.denominator != 1:
            raise EhrhartError(f"h_{k} = {hk} is not an integer")
        h.append(int(hk))
    hv = HVector(tuple(h))
    if strict:
        checks = h_vector_checks(E, hv)
        if not checks.ok:
            raise EhrhartError(f"h-vector {hv.entries} fails {checks}")
    return hv


def h_vector_checks(E: EhrhartPolynomial, h: HVector) -> HVectorChecks:
    n = E.degree
    card = E.values[1] if n >= 1 else 1
    degree = E.coefficients[n] * factorial(n)
    return HVectorChecks(
        h0_is_one=h[0] == 1,
        h1_counts_points=n < 1 or h[1] == card - n - 1,
        sum_is_degree=sum(h) == degree,
        nonnegative=all(x >= 0 for x in h),
    )


@dataclass(frozen=True)
class SimplexBound:
    card: int
    bound: Fraction  # (n+1)! Vol(Q)
    equality: bool
    is_unimodular_simplex: bool

    def __iter__(self):
        return iter((self.card, self.bound, self.equality, self.is_unimodular_simplex))


def simplex_bound(Q) -> SimplexBound:
    """``Card(Q ∩ Z^n) <= (n+1)! Vol(Q)``, with equality exactly for unimodular simplices."""
    poly = _as_hpolytope(Q)
    n = poly.ambient_dim
    card = len(lattice_points(poly))
    bound = factorial(n + 1) * volume(poly.vertices)
    if card > bound:
        raise EhrhartError(f"{card} lattice points exceed (n+1)! Vol = {bound}")
    verts = poly.vertices
    unimodular = len(verts) == n + 1 and normalized_volume(verts) == 1
    equality = card == bound
    h = h_vector(ehrhart_polynomial(poly))
    trivial_h = h.entries == (1,) + (0,) * n
    if not (equality == unimodular == trivial_h):
        raise EhrhartError(f"equality={equality}, unimodular={unimodular}, h={h.entries}")
    return SimplexBound(card, bound, equality, unimodular)
