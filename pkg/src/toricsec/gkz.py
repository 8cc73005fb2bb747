"""GKZ vectors, the secondary polytope and facet equations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .configuration import PointConfiguration
from .exact import dot, normalized_volume, solve
from .hull import Hull, VPolytope, affine_hull, compute_hull
from .subdivision import (
    DEFAULT_CAP,
    Regularity,
    Subdivision,
    as_heights,
    enumerate_triangulations,
    is_regular,
    refines,
    regular_subdivision,
    trivial_subdivision,
)


class ConsistencyError(AssertionError):
    """A structural theorem failed on a computed instance (indicates a bug)."""


class NotCoarseError(ValueError):
    pass


@dataclass(frozen=True)
class GKZVector:
    entries: tuple[int, ...]
    triangulation: Subdivision

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def _cell_nvol(config: PointConfiguration, cell: Sequence[int]) -> int:
    return normalized_volume([config.points[i] for i in cell])


def gkz_vector(config: PointConfiguration, tri: Subdivision) -> GKZVector:
    """Entry j sums the normalized volumes of the maximal simplices having a_j as a vertex."""
    phi = [0] * len(config)
    for cell in tri.cells:
        v = _cell_nvol(config, cell)
        for j in cell:
            phi[j] += v
    return GKZVector(tuple(phi), tri)


@dataclass(frozen=True)
class CharacteristicSection:
    """Piecewise-affine function on Q interpolating the heights on each simplex."""

    triangulation: Subdivision
    heights: tuple[Fraction, ...]
    # per maximal simplex: (gradient, constant) with g(x) = gradient . x + constant
    pieces: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def __call__(self, x: Sequence) -> Fraction:
        x = [Fraction(v) for v in x]
        for k, verts in enumerate(self.simplices):
            mat = [[p[i] for p in verts] for i in range(len(x))] + [[1] * len(verts)]
            if all(l >= 0 for l in solve(mat, x + [1])):
                return self.on_cell(k, x)
        raise ValueError(f"{x} is outside the triangulated polytope")

    def on_cell(self, k: int, x: Sequence) -> Fraction:
        grad, const = self.pieces[k]
        return dot(grad, x) + const


def characteristic_section(config: PointConfiguration, tri: Subdivision, heights: Iterable) -> CharacteristicSection:
    w = as_heights(config, heights)
    pieces = []
    n = config.n
    for cell in tri.cells:
        mat = [list(config.points[i]) + [1] for i in cell]
        coeffs = solve(mat, [w[i] for i in cell])
        pieces.append((coeffs[:n], coeffs[n]))
    simplices = tuple(tuple(config.points[i] for i in cell) for cell in tri.cells)
    return CharacteristicSection(tri, w, tuple(pieces), simplices)


def characteristic_integral(config: PointConfiguration, tri: Subdivision, heights: Iterable) -> Fraction:
    """Integral of the characteristic section over Q, simplex by simplex.

    On a simplex an affine function integrates to the volume times its
    value at the barycenter.
    """
    g = characteristic_section(config, tri, heights)
    n = config.n
    total = Fraction(0)
    for k, cell in enumerate(tri.cells):
        vol = Fraction(_cell_nvol(config, cell), factorial(n))
        center = [sum(Fraction(config.points[j][i]) for j in cell) / (n + 1) for i in range(n)]
        total += vol * g.on_cell(k, center)
    return total


@dataclass(frozen=True)
class PairingCheck:
    lhs: Fraction  # <w, phi(T)>
    rhs: Fraction  # (n+1)! * integral of the characteristic section
    volume_form: Fraction  # n! * sum_C Vol(C) * sum_{j in C} w_j

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs == self.volume_form


def pairing_check(config: PointConfiguration, tri: Subdivision, heights: Iterable) -> PairingCheck:
    w = as_heights(config, heights)
    n = config.n
    phi = gkz_vector(config, tri)
    lhs = dot(w, phi.entries)
    rhs = factorial(n + 1) * characteristic_integral(config, tri, w)
    form = sum(
        (Fraction(_cell_nvol(config, c)) * sum(w[j] for j in c) for c in tri.cells),
        Fraction(0),
    )
    return PairingCheck(lhs, rhs, form)


@dataclass(frozen=True)
class FacetEquation:
    """``<normal, phi> >= rhs`` on the secondary polytope, tight on the facet."""

    normal: tuple[Fraction, ...]
    rhs: Fraction
    subdivision: Subdivision
    tight: tuple[int, ...]  # indices of triangulations whose GKZ vector is on the facet
    orientation: str = ">="


@dataclass
class SecondaryPolytope:
    config: PointConfiguration
    triangulations: list[Subdivision]
    gkz: list[GKZVector]
    regularity: list[Regularity]
    hull: Hull
    # vertex position -> index into triangulations
    vertex_triangulation: dict[int, int]
    # facet position (in hull.facets) -> coarse subdivision
    facet_subdivision: dict[int, Subdivision] = field(default_factory=dict)

    @property
    def polytope(self) -> VPolytope:
        return VPolytope(len(self.config), self.hull.vertices)

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in v) for v in self.hull.vertices]

    @property
    def dim(self) -> int:
        return self.hull.dim

    @property
    def hrep(self):
        return self.hull.hpolytope

    def regular_indices(self) -> list[int]:
        return [i for i, r in enumerate(self.regularity) if r.regular]

    def refining(self, sub: Subdivision) -> list[int]:
        return [i for i, t in enumerate(self.triangulations) if refines(t, sub)]


def secondary_polytope(config: PointConfiguration, cap: int = DEFAULT_CAP) -> SecondaryPolytope:
    """Hull of the GKZ vectors of all triangulations, with structural checks.

    Checks that the dimension is N - n and that the hull-extreme GKZ vectors
    are exactly those of the LP-regular triangulations.
    """
    tris = enumerate_triangulations(config, cap)
    vectors = [gkz_vector(config, t) for t in tris]
    hull = compute_hull([v.entries for v in vectors])
    if hull.dim != config.N - config.n:
        raise ConsistencyError(f"secondary polytope has dimension {hull.dim}, expected {config.N - config.n}")
    regularity = [is_regular(config, t) for t in tris]
    extreme = {tuple(v) for v in hull.vertices}
    for t, v, r in zip(tris, vectors, regularity):
        on_vertex = tuple(Fraction(x) for x in v.entries) in extreme
        if on_vertex != r.regular:
            raise ConsistencyError(f"triangulation {t}: extreme={on_vertex}, regular={r.regular}")
    vertex_tri = {}
    for k, vert in enumerate(hull.vertices):
        matches = [i for i, v in enumerate(vectors) if tuple(Fraction(x) for x in v.entries) == vert]
        if len(matches) != 1:
            raise ConsistencyError(f"vertex {vert} matches triangulations {matches}")
        vertex_tri[k] = matches[0]
    sec = SecondaryPolytope(config, tris, vectors, regularity, hull, vertex_tri)
    for k, (normal, _, _) in enumerate(hull.facets):
        sec.facet_subdivision[k] = regular_subdivision(config, normal)
    return sec


def facet_equation(config: PointConfiguration, heights: Iterable, secondary: SecondaryPolytope | None = None) -> FacetEquation:
    """Facet equation of the secondary polytope for a coarse subdivision.

    The right-hand side is computed from a triangulation refining the
    subdivision; every refining triangulation must be tight and every other
    triangulation strictly on the ``>=`` side.
    """
    w = as_heights(config, heights)
    if secondary is None:
        secondary = secondary_polytope(config)
    sub = regular_subdivision(config, w)
    if sub == trivial_subdivision(config):
        raise NotCoarseError("ω does not induce a coarse subdivision (it induces the trivial one)")
    tight = secondary.refining(sub)
    if not tight:
        raise ConsistencyError(f"no triangulation refines {sub}")
    face_dim = affine_hull([secondary.gkz[i].entries for i in tight])[0]
    if face_dim != secondary.dim - 1:
        raise NotCoarseError(f"ω does not induce a coarse subdivision (face of dimension {face_dim})")
    ref = secondary.triangulations[tight[0]]
    # n! Vol(C) is the normalized volume
    rhs = sum((_cell_nvol(config, c) * sum(w[j] for j in c) for c in ref.cells), Fraction(0))
    tight_set = set(tight)
    for i, phi in enumerate(secondary.gkz):
        value = dot(w, phi.entries)
        if i in tight_set:
            if value != rhs:
                raise ConsistencyError(f"refining triangulation {phi.triangulation} is off the facet")
        elif value <= rhs:
            raise ConsistencyError(f"triangulation {phi.triangulation} is not strictly above the facet")
    return FacetEquation(w, rhs, sub, tuple(tight))
