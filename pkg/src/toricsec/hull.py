"""Exact convex hulls, lower faces, membership and lattice-point scans.

The hull is computed by the double description method on the cone of
valid affine functionals: a facet of ``conv(P)`` is an extreme ray of
``{(c, beta) : <c, p> + beta >= 0 for all p in P}``.  Points are
inserted one constraint at a time; rays are kept as primitive integer
vectors together with the set of constraints they are tight on, and
adjacency is decided combinatorially.  Degenerate (non-simplicial)
facets need no special treatment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, factorial
from itertools import product
from typing import Sequence

from .exact import Vector, dot, normalized_volume, nullspace, primitive, rank, rref, to_vector
from .lp import OPTIMAL, linprog

OUTSIDE = "outside"
BOUNDARY = "boundary"
RELATIVE_INTERIOR = "relative-interior"

Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class HPolytope:
    """``{x : <u, x> == b for (u, b) in equations, <c, x> >= b for (c, b) in inequalities}``.

    ``vertices`` keeps the source vertex set; it drives the bounding box for
    lattice point scans.
    """

    ambient_dim: int
    equations: tuple[Constraint, ...]
    inequalities: tuple[Constraint, ...]
    vertices: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def contains(self, x: Sequence, dilation: int = 1) -> bool:
        return all(dot(u, x) == dilation * b for u, b in self.equations) and all(
            dot(c, x) >= dilation * b for c, b in self.inequalities
        )


@dataclass(frozen=True)
class VPolytope:
    ambient_dim: int
    vertices: tuple[Vector, ...]

    @cached_property
    def hull(self) -> "Hull":
        return compute_hull(self.vertices)

    @property
    def dim(self) -> int:
        return self.hull.dim

    @property
    def hrep(self) -> HPolytope:
        return self.hull.hpolytope


@dataclass(frozen=True)
class Hull:
    """Full hull data for an indexed point list (duplicates allowed)."""

    points: tuple[Vector, ...]
    dim: int
    equations: tuple[Constraint, ...]
    # (normal, offset, indices of input points on the facet)
    facets: tuple[tuple[tuple[int, ...], int, frozenset[int]], ...]
    vertex_indices: tuple[int, ...]
    # coordinates onto which the affine hull projects injectively
    chart: tuple[int, ...] = field(default=())

    @property
    def vertices(self) -> tuple[Vector, ...]:
        return tuple(self.points[i] for i in self.vertex_indices)

    @property
    def hpolytope(self) -> HPolytope:
        return HPolytope(
            len(self.points[0]),
            self.equations,
            tuple((c, b) for c, b, _ in self.facets),
            self.vertices,
        )


def _primitive_constraint(normal: Sequence, offset) -> Constraint:
    vec = primitive(list(normal) + [offset])
    return tuple(vec[:-1]), vec[-1]


def affine_hull(points: Sequence[Sequence]) -> tuple[int, tuple[Constraint, ...], tuple[int, ...]]:
    """Dimension, defining equations and a coordinate chart of ``aff(points)``."""
    pts = [to_vector(p) for p in points]
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    m = len(p0)
    _, chart = rref(diffs) if diffs else ([], [])
    eqs = []
    for u in nullspace(diffs, m) if diffs else [tuple(1 if k == j else 0 for k in range(m)) for j in range(m)]:
        eqs.append(_primitive_constraint(u, dot(u, p0)))
    return len(chart), tuple(eqs), tuple(chart)


def _dd_facets(rows: list[tuple[int, ...]], dim: int) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    """Extreme rays of ``{y : <row, y> >= 0}`` in R^(dim+1), rows spanning R^(dim+1)."""
    width = dim + 1
    # Greedy choice of an initial basis of constraints.
    basis: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in basis + [i]]) == len(basis) + 1:
            basis.append(i)
            if len(basis) == width:
                break
    bmat = [rows[i] for i in basis]
    # Columns of the inverse: B r_k = e_k.
    rays: list[tuple[tuple[int, ...], frozenset[int]]] = []
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(width)] for i, r in enumerate(bmat)]
    reduced, _ = rref(aug)
    for k in range(width):
        ray = primitive([reduced[i][width + k] for i in range(width)])
        zero = frozenset(basis[j] for j in range(width) if j != k)
        rays.append((ray, zero))

    for i in range(len(rows)):
        if i in basis:
            continue
        row = rows[i]
        pos, zer, neg = [], [], []
        for ray, zero in rays:
            v = sum(a * b for a, b in zip(row, ray))
            if v > 0:
                pos.append((ray, zero, v))
            elif v < 0:
                neg.append((ray, zero, v))
            else:
                zer.append((ray, zero | {i}))
        new = []
        if pos and neg:
            all_zero_sets = [z for _, z in rays]
            for rp, zp, vp in pos:
                for rn, zn, vn in neg:
                    common = zp & zn
                    if len(common) < dim - 1:
                        continue
                    if any(common <= z and z is not zp and z is not zn for z in all_zero_sets):
                        continue
                    r = primitive([vp * a - vn * b for a, b in zip(rn, rp)])
                    new.append((r, common | {i}))
        rays = [(r, z) for r, z, _ in pos] + zer + new
    return rays


def compute_hull(points: Sequence[Sequence]) -> Hull:
    pts = tuple(to_vector(p) for p in points)
    if not pts:
        raise ValueError("convex hull of an empty point set")
    dim, eqs, chart = affine_hull(pts)
    first: dict[Vector, int] = {}
    for i, p in enumerate(pts):
        first.setdefault(p, i)
    uniq = sorted(first.values())
    if dim == 0:
        return Hull(pts, 0, eqs, (), (uniq[0],), chart)

    # Integer rows (p|1) in the chart coordinates, one per distinct point.
    rows = [primitive([pts[i][c] for c in chart] + [1]) for i in uniq]
    rays = _dd_facets(rows, dim)
    m = len(pts[0])
    facets = []
    for ray, zero in rays:
        normal = [0] * m
        for c, v in zip(chart, ray[:-1]):
            normal[c] = v
        normal_t, offset = _primitive_constraint(normal, -ray[-1])
        on = frozenset(j for j, p in enumerate(pts) if dot(normal_t, p) == offset)
        facets.append((normal_t, offset, on))
    facets.sort(key=lambda f: (f[0], f[1]))

    vertex_indices = []
    everything = frozenset(range(len(pts)))
    for i in uniq:
        inter = everything
        for _, _, on in facets:
            if i in on:
                inter = inter & on
        if {pts[j] for j in inter} == {pts[i]}:
            vertex_indices.append(i)
    return Hull(pts, dim, eqs, tuple(facets), tuple(vertex_indices), chart)


def convex_hull(points: Sequence[Sequence]) -> tuple[VPolytope, HPolytope]:
    """Irredundant vertices and an exact H-representation of ``conv(points)``."""
    h = compute_hull(points)
    return VPolytope(len(h.points[0]), h.vertices), h.hpolytope


def lower_faces(lifted: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Maximal lower faces of ``conv(lifted)`` as sorted index tuples.

    The last coordinate is the height.  A face is lower when its supporting
    inner normal points strictly upward.
    """
    pts = [to_vector(p) for p in lifted]
    m = len(pts[0]) - 1
    base_dim, _, _ = affine_hull([p[:m] for p in pts])
    if base_dim != m:
        raise ValueError("lifted points do not project onto a full-dimensional set")
    h = compute_hull(pts)
    if h.dim == m:
        return [tuple(range(len(pts)))]
    faces = {tuple(sorted(on)) for c, _, on in h.facets if c[m] > 0}
    return sorted(faces)


def simplex_volume(points: Sequence[Sequence], cell: Sequence[int]) -> Fraction:
    """Euclidean volume of the simplex ``conv(points[i] for i in cell)``."""
    verts = [points[i] for i in cell]
    n = len(verts[0])
    if len(verts) != n + 1:
        raise ValueError(f"a simplex in dimension {n} needs {n + 1} vertices")
    return Fraction(normalized_volume(verts)) / factorial(n)


def triangulate_points(points: Sequence[Sequence]) -> list[tuple[Vector, ...]]:
    """Pulling triangulation of ``conv(points)`` into simplices of its own dimension."""
    h = compute_hull(points)
    verts = h.vertices
    if len(verts) == h.dim + 1:
        return [tuple(verts)]
    apex_index = h.vertex_indices[0]
    apex = h.points[apex_index]
    out = []
    for _, _, on in h.facets:
        if apex_index in on:
            continue
        for simplex in triangulate_points([h.points[j] for j in sorted(on)]):
            out.append((apex,) + simplex)
    return out


def volume(points: Sequence[Sequence]) -> Fraction:
    """Euclidean volume of a full-dimensional ``conv(points)``."""
    n = len(points[0])
    total = Fraction(0)
    for s in triangulate_points(points):
        if len(s) != n + 1:
            return Fraction(0)
        total += Fraction(normalized_volume(s)) / factorial(n)
    return total


def lattice_points(poly: HPolytope, dilation: int = 1) -> list[tuple[int, ...]]:
    """Integer points of ``dilation * poly`` by a bounding-box scan."""
    if dilation < 0:
        raise ValueError("dilation must be nonnegative")
    if not poly.vertices:
        raise ValueError("polytope carries no vertices to bound the scan")
    ranges = []
    for k in range(poly.ambient_dim):
        lo = min(v[k] for v in poly.vertices) * dilation
        hi = max(v[k] for v in poly.vertices) * dilation
        ranges.append(range(ceil(lo), floor(hi) + 1))
    return [x for x in product(*ranges) if poly.contains(x, dilation)]


@dataclass(frozen=True)
class Membership:
    location: str
    # convex combination of the polytope's vertices reproducing the point
    coefficients: tuple[Fraction, ...] | None = None
    # (normal, offset) with <normal, p> < offset <= <normal, v> for all vertices v
    separator: tuple[tuple[int, ...], Fraction] | None = None

    @property
    def inside(self) -> bool:
        return self.location != OUTSIDE


def _convex_coefficients(p: Vector, verts: Sequence[Vector]) -> tuple[str, tuple[Fraction, ...] | None]:
    """Maximize the smallest barycentric weight of ``p`` over ``verts``."""
    k = len(verts)
    # variables: lambda_0..lambda_{k-1}, eps
    a_eq = [[v[i] for v in verts] + [0] for i in range(len(p))]
    b_eq = list(p)
    a_eq.append([1] * k + [0])
    b_eq.append(1)
    a_ub = [[-int(j == i) for j in range(k)] + [1] for i in range(k)]
    b_ub = [0] * k
    a_ub.append([0] * k + [1])
    b_ub.append(1)
    res = linprog([0] * k + [1], a_ub, b_ub, a_eq, b_eq)
    if res.status != OPTIMAL:
        return OUTSIDE, None
    lam = res.x[:k]
    return (RELATIVE_INTERIOR if res.x[k] > 0 else BOUNDARY), lam


def point_in_polytope(p: Sequence, poly: VPolytope) -> Membership:
    """Exact outside / boundary / relative-interior classification.

    The H-representation decides; an LP over the vertices supplies the
    convex-combination certificate and must agree.
    """
    x = to_vector(p)
    if len(x) != poly.ambient_dim:
        raise ValueError("dimension mismatch")
    hrep = poly.hrep
    separator = None
    for u, b in hrep.equations:
        val = dot(u, x)
        if val != b:
            separator = (u, Fraction(b)) if val < b else (tuple(-c for c in u), Fraction(-b))
            break
    if separator is None:
        for c, b in hrep.inequalities:
            if dot(c, x) < b:
                separator = (c, Fraction(b))
                break
    lp_location, coeffs = _convex_coefficients(x, poly.vertices)
    if separator is not None:
        if lp_location != OUTSIDE:
            raise AssertionError("hull and LP disagree on membership")
        return Membership(OUTSIDE, separator=separator)
    tight = any(dot(c, x) == b for c, b in hrep.inequalities)
    location = BOUNDARY if tight else RELATIVE_INTERIOR
    if lp_location != location:
        raise AssertionError("hull and LP disagree on membership")
    return Membership(location, coefficients=coeffs)


def in_ambient_interior(p: Sequence, poly: VPolytope) -> bool:
    """Topological interior in the ambient space (empty unless full-dimensional)."""
    if poly.dim < poly.ambient_dim:
        return False
    return point_in_polytope(p, poly).location == RELATIVE_INTERIOR
