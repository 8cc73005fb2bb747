"""Lattice point configurations and the lattice-generation condition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, prod
from typing import Sequence

from .exact import smith_invariants
from .hull import HPolytope, Hull, affine_hull, compute_hull, lattice_points, volume


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered set ``a_0, ..., a_N`` of distinct points of Z^n spanning R^n."""

    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ConfigurationError("empty configuration")
        n = len(pts[0])
        if n == 0 or any(len(p) != n for p in pts):
            raise ConfigurationError("points must share a positive dimension")
        if len(set(pts)) != len(pts):
            raise ConfigurationError("points must be pairwise distinct")
        if affine_hull(pts)[0] != n:
            raise ConfigurationError("points do not affinely span R^n")

    @property
    def n(self) -> int:
        return len(self.points[0])

    @property
    def N(self) -> int:
        return len(self.points) - 1

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def hull(self) -> Hull:
        return compute_hull(self.points)

    @property
    def polytope(self) -> HPolytope:
        return self.hull.hpolytope

    @cached_property
    def volume(self) -> Fraction:
        return volume(self.points)

    @property
    def degree(self) -> int:
        """Normalized volume ``n! Vol(Q)``, the degree of the toric embedding."""
        return int(self.volume * factorial(self.n))

    @cached_property
    def vertex_labels(self) -> frozenset[int]:
        return frozenset(self.hull.vertex_indices)


@dataclass(frozen=True)
class StarCheck:
    """Outcome of checking ``A = Q ∩ Z^n`` and affine generation of Z^n."""

    valid: bool
    message: str
    missing: tuple[int, ...] | None = None
    invariant_factors: tuple[int, ...] = ()

    @property
    def index(self) -> int:
        return prod(self.invariant_factors) if self.invariant_factors else 0


class StarViolation(ValueError):
    def __init__(self, check: StarCheck):
        super().__init__(check.message)
        self.check = check


def validate_star(config: PointConfiguration) -> StarCheck:
    labels = set(config.points)
    for p in lattice_points(config.polytope):
        if p not in labels:
            return StarCheck(False, f"missing lattice point {format_point(p)}", missing=p)
    a0 = config.points[0]
    diffs = [[x - y for x, y in zip(p, a0)] for p in config.points[1:]]
    factors = smith_invariants(diffs)
    if len(factors) < config.n or any(f != 1 for f in factors):
        k = prod(factors) if len(factors) == config.n else 0
        return StarCheck(False, f"lattice index {k} > 1", invariant_factors=factors)
    return StarCheck(True, "ok", invariant_factors=factors)


def require_star(config: PointConfiguration) -> PointConfiguration:
    check = validate_star(config)
    if not check.valid:
        raise StarViolation(check)
    return config


def format_point(p: Sequence[int]) -> str:
    return str(p[0]) if len(p) == 1 else "(" + ",".join(str(x) for x in p) + ")"
