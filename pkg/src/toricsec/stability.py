"""H-semistability and H-polystability of the Chow point of X_A.

The Chow polytope of X_A is taken to be the secondary polytope; its image
under the character projection of H (drop the diagonal) is the weight
polytope N_H.  Semistable means 0 is in N_H, polystable means 0 is in its
relative interior.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .configuration import PointConfiguration
from .exact import dot
from .gkz import SecondaryPolytope, secondary_polytope
from .hull import BOUNDARY, OUTSIDE, RELATIVE_INTERIOR, Membership, VPolytope, point_in_polytope


def project_to_H(v: Sequence) -> tuple[Fraction, ...]:
    """``(v_0 - v_N, ..., v_{N-1} - v_N)``; the kernel is the diagonal."""
    last = Fraction(v[-1])
    return tuple(Fraction(x) - last for x in v[:-1])


def weight_polytope_H(config: PointConfiguration, secondary: SecondaryPolytope | None = None) -> VPolytope:
    sec = secondary or secondary_polytope(config)
    projected = []
    for v in sec.hull.vertices:
        p = project_to_H(v)
        if p not in projected:
            projected.append(p)
    poly = VPolytope(config.N, tuple(projected))
    return VPolytope(config.N, poly.hull.vertices)


@dataclass(frozen=True)
class DiagonalPoint:
    t: Fraction
    location: str
    membership: Membership


def diagonal_point(config: PointConfiguration, secondary: SecondaryPolytope | None = None) -> DiagonalPoint:
    """Locate ``(t, ..., t)`` with ``(N+1) t = (n+1)! Vol(Q)`` against the secondary polytope."""
    sec = secondary or secondary_polytope(config)
    t = factorial(config.n + 1) * config.volume / (config.N + 1)
    m = point_in_polytope((t,) * len(config), sec.polytope)
    return DiagonalPoint(t, m.location, m)


@dataclass(frozen=True)
class StabilityReport:
    degree: int
    semistable: bool
    polystable: bool
    diagonal_t: Fraction
    diagonal_in_boundary: bool
    certificate: Membership

    def __post_init__(self):
        if self.polystable and not self.semistable:
            raise AssertionError("polystable but not semistable")


def stability_verdict(config: PointConfiguration, secondary: SecondaryPolytope | None = None) -> StabilityReport:
    sec = secondary or secondary_polytope(config)
    weights = weight_polytope_H(config, sec)
    origin = (Fraction(0),) * config.N
    m = point_in_polytope(origin, weights)
    diag = diagonal_point(config, sec)
    return StabilityReport(
        degree=config.degree,
        semistable=m.location != OUTSIDE,
        polystable=m.location == RELATIVE_INTERIOR,
        diagonal_t=diag.t,
        diagonal_in_boundary=diag.location == BOUNDARY,
        certificate=m,
    )


@dataclass(frozen=True)
class FacetSlack:
    normal: tuple[int, ...]
    offset: int
    slack: Fraction  # <normal, (t,...,t)> - offset


@dataclass(frozen=True)
class TheoremReport:
    degree: int
    t: Fraction
    points: int  # N + 1
    scaled_volume: Fraction  # (n+1)! Vol(Q)
    exception_path: bool  # degree 1: X_A is (P^n, O(1))
    relation_holds: bool  # N + 1 == (n+1)! Vol(Q)
    semistable: bool
    polystable: bool
    diagonal_location: str
    projection_injective: bool
    facet_slacks: tuple[FacetSlack, ...]
    holds: bool
    verdict: StabilityReport

    @property
    def status(self) -> str:
        if self.exception_path:
            return "exception: degree 1"
        return "holds" if self.holds else "theorem violated"


def verify_main_theorem(config: PointConfiguration, secondary: SecondaryPolytope | None = None) -> TheoremReport:
    """Check semistable == polystable (degree >= 2) and record the proof's quantities.

    Violations are returned, not raised, so the whole certificate chain can
    be inspected.
    """
    sec = secondary or secondary_polytope(config)
    verdict = stability_verdict(config, sec)
    diag = diagonal_point(config, sec)
    scaled = factorial(config.n + 1) * config.volume
    size = len(config)
    diagonal_dir = (1,) * size
    # pi_H is injective on aff(Sec) iff the diagonal is not a direction of it,
    # i.e. some defining equation is not constant along the diagonal.
    injective = any(dot(u, diagonal_dir) != 0 for u, _ in sec.hull.equations)
    t_vec = (diag.t,) * size
    slacks = tuple(
        FacetSlack(normal, offset, dot(normal, t_vec) - offset) for normal, offset, _ in sec.hull.facets
    )
    # relative interior of Sec maps onto the relative interior of N_H
    consistent = (diag.location == RELATIVE_INTERIOR) == verdict.polystable and (
        diag.location != OUTSIDE
    ) == verdict.semistable
    exception = config.degree == 1
    holds = consistent and injective and (exception or verdict.semistable == verdict.polystable)
    return TheoremReport(
        degree=config.degree,
        t=diag.t,
        points=size,
        scaled_volume=scaled,
        exception_path=exception,
        relation_holds=size == scaled,
        semistable=verdict.semistable,
        polystable=verdict.polystable,
        diagonal_location=diag.location,
        projection_injective=injective,
        facet_slacks=slacks,
        holds=holds,
        verdict=verdict,
    )
