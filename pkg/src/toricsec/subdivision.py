"""Regular subdivisions, triangulation enumeration and regularity testing.

Cells are sorted tuples of labels (indices into the configuration).  A cell
of a regular subdivision carries every label whose lifted point lies on
the corresponding lower face, so a label lifted strictly above the lower
hull is simply absent from all cells.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .configuration import PointConfiguration
from .exact import det, dot, normalized_volume, primitive, solve, to_vector
from .hull import VPolytope, lower_faces, point_in_polytope, volume
from .lp import OPTIMAL, linprog

Cell = tuple[int, ...]
Heights = tuple[Fraction, ...]

DEFAULT_CAP = 5000


class SubdivisionError(AssertionError):
    """A constructed subdivision failed its structural verification."""


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int, count: int):
        super().__init__(f"{count} full-dimensional simplices exceed the cap of {cap}")
        self.cap = cap
        self.count = count


@dataclass(frozen=True)
class Subdivision:
    cells: tuple[Cell, ...]
    is_triangulation: bool

    def __post_init__(self):
        cells = tuple(sorted(tuple(sorted(c)) for c in self.cells))
        object.__setattr__(self, "cells", cells)

    @property
    def used_labels(self) -> frozenset[int]:
        return frozenset(i for c in self.cells for i in c)

    def __str__(self) -> str:
        return "{" + ", ".join("[" + ",".join(map(str, c)) + "]" for c in self.cells) + "}"


Triangulation = Subdivision


def trivial_subdivision(config: PointConfiguration) -> Subdivision:
    return Subdivision((tuple(range(len(config))),), len(config) == config.n + 1)


def as_heights(config: PointConfiguration, heights: Iterable) -> Heights:
    h = to_vector(heights)
    if len(h) != len(config):
        raise ValueError(f"expected {len(config)} heights, got {len(h)}")
    return h


def _make(config: PointConfiguration, cells: Iterable[Cell]) -> Subdivision:
    cells = list(cells)
    simplicial = all(len(c) == config.n + 1 for c in cells)
    return Subdivision(tuple(cells), simplicial)


def regular_subdivision(config: PointConfiguration, heights: Iterable, verify: bool = True) -> Subdivision:
    """Project the lower faces of the lifted configuration."""
    w = as_heights(config, heights)
    lifted = [tuple(p) + (h,) for p, h in zip(config.points, w)]
    sub = _make(config, lower_faces(lifted))
    if verify:
        check_subdivision(config, sub)
    return sub


def _separable(config: PointConfiguration, c1: Cell, c2: Cell) -> bool:
    """Is there an affine functional vanishing exactly on the common labels,
    positive on the rest of ``c1`` and negative on the rest of ``c2``?

    This certifies that ``conv(c1) ∩ conv(c2)`` is the common face
    ``conv(c1 ∩ c2)``; for simplices it is also necessary.
    """
    s1, s2 = set(c1), set(c2)
    only1, only2, both = sorted(s1 - s2), sorted(s2 - s1), sorted(s1 & s2)
    if not only1 or not only2:
        return False
    n = config.n
    pts = config.points
    if len(c1) == len(c2) == n + 1 and len(both) == n:
        # Shared facet: opposite vertices on opposite sides.
        base = [pts[i] for i in both]
        return _orientation(base, pts[only1[0]]) * _orientation(base, pts[only2[0]]) < 0

    # variables: c+ (n), c- (n), b+, b-; functional f(x) = c.x - b
    def row(p, sign):
        return [sign * x for x in p] + [-sign * x for x in p] + [-sign, sign]

    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for i in only1:
        a_ub.append(row(pts[i], -1))
        b_ub.append(-1)
    for j in only2:
        a_ub.append(row(pts[j], 1))
        b_ub.append(-1)
    for k in both:
        a_eq.append(row(pts[k], 1))
        b_eq.append(0)
    res = linprog([0] * (2 * n + 2), a_ub, b_ub, a_eq, b_eq)
    return res.status == OPTIMAL


def _orientation(base: Sequence[Sequence[int]], x: Sequence[int]) -> int:
    b0 = base[0]
    rows = [[a - b for a, b in zip(p, b0)] for p in base[1:]]
    rows.append([a - b for a, b in zip(x, b0)])
    d = det(rows)
    return (d > 0) - (d < 0)


def check_subdivision(config: PointConfiguration, sub: Subdivision) -> None:
    """Verify cover (by volume) and pairwise face-to-face intersection."""
    total = sum((volume([config.points[i] for i in c]) for c in sub.cells), Fraction(0))
    if total != config.volume:
        raise SubdivisionError(f"cells of {sub} cover volume {total}, expected {config.volume}")
    for c1, c2 in combinations(sub.cells, 2):
        if not _separable(config, c1, c2):
            raise SubdivisionError(f"cells {c1} and {c2} do not meet in a common face")
    if sub.is_triangulation:
        for c in sub.cells:
            if normalized_volume([config.points[i] for i in c]) == 0:
                raise SubdivisionError(f"degenerate simplex {c}")


def refines(s: Subdivision, s2: Subdivision, config: PointConfiguration | None = None) -> bool:
    """``s ⪯ s2``: every cell of ``s`` lies inside a cell of ``s2``.

    Cells are compared as labelled sets, the order under which coarse
    subdivisions match facets of the secondary polytope.  Given ``config``
    the comparison is instead by the polytopes the cells span, which
    ignores labels a cell does not use.
    """
    if config is None:
        targets = [set(c) for c in s2.cells]
        return all(any(set(c) <= t for t in targets) for c in s.cells)
    polys = [VPolytope(config.n, tuple(config.points[i] for i in c)) for c in s2.cells]
    return all(
        any(all(point_in_polytope(config.points[i], q).inside for i in c) for q in polys) for c in s.cells
    )


# -- enumeration ---------------------------------------------------------------


class _Enumerator:
    def __init__(self, config: PointConfiguration, cap: int):
        self.config = config
        n = config.n
        pts = config.points
        self.simplices = [
            s for s in combinations(range(len(pts)), n + 1)
            if normalized_volume([pts[i] for i in s]) != 0
        ]
        if len(self.simplices) > cap:
            raise EnumerationCapExceeded(cap, len(self.simplices))
        self._compat: dict[tuple[Cell, Cell], bool] = {}
        self.boundary_sets = [on for _, _, on in config.hull.facets]

    def compatible(self, s: Cell, t: Cell) -> bool:
        key = (s, t) if s < t else (t, s)
        hit = self._compat.get(key)
        if hit is None:
            hit = self._compat[key] = _separable(self.config, s, t)
        return hit

    def on_boundary(self, facet: Cell) -> bool:
        return any(set(facet) <= on for on in self.boundary_sets)

    def run(self) -> list[Subdivision]:
        pts = self.config.points
        root = min(self.config.vertex_labels)
        out: set[tuple[Cell, ...]] = set()
        for s in self.simplices:
            if root in s:
                self._extend([s], Counter(self._facets(s)), out)
        target = self.config.volume
        result = []
        for cells in sorted(out):
            vol = sum((volume([pts[i] for i in c]) for c in cells), Fraction(0))
            if vol != target:
                raise SubdivisionError(f"enumerated cells {cells} have volume {vol}")
            result.append(Subdivision(cells, True))
        return result

    @staticmethod
    def _facets(s: Cell):
        return [s[:k] + s[k + 1:] for k in range(len(s))]

    def _extend(self, chosen: list[Cell], counts: Counter, out: set) -> None:
        open_facet = None
        for s in sorted(chosen):
            for k, f in enumerate(self._facets(s)):
                if counts[f] == 1 and not self.on_boundary(f):
                    if open_facet is None or f < open_facet[0]:
                        open_facet = (f, s[k])
        if open_facet is None:
            out.add(tuple(sorted(chosen)))
            return
        facet, apex = open_facet
        pts = self.config.points
        base = [pts[i] for i in facet]
        side = _orientation(base, pts[apex])
        for w in range(len(pts)):
            if w in facet or _orientation(base, pts[w]) != -side:
                continue
            t = tuple(sorted(facet + (w,)))
            if all(self.compatible(t, c) for c in chosen):
                chosen.append(t)
                counts.update(self._facets(t))
                self._extend(chosen, counts, out)
                counts.subtract(self._facets(t))
                chosen.pop()


def enumerate_triangulations(config: PointConfiguration, cap: int = DEFAULT_CAP) -> list[Subdivision]:
    """All triangulations of (Q, A), regular or not, in canonical order.

    Search by facet propagation: starting from each simplex at a fixed
    vertex of Q, an interior facet that only one chosen simplex owns forces
    a simplex on its other side; candidates must meet every chosen simplex
    in a common face.  Raises :class:`EnumerationCapExceeded` when the
    number of full-dimensional simplices exceeds ``cap``.
    """
    return _Enumerator(config, cap).run()


# -- regularity ----------------------------------------------------------------


def _fold_row(config: PointConfiguration, cell: Cell, j: int):
    """``w_j`` minus the affine interpolant of ``w`` on ``cell`` at ``a_j``.

    Also returns the barycentric coordinates of ``a_j`` with respect to
    ``cell``.
    """
    pts = config.points
    mat = [[pts[i][k] for i in cell] for k in range(config.n)] + [[1] * len(cell)]
    lam = solve(mat, list(pts[j]) + [1])
    m = [Fraction(0)] * len(pts)
    m[j] = Fraction(1)
    for i, l in zip(cell, lam):
        m[i] -= l
    return tuple(m), lam


def folding_rows(config: PointConfiguration, tri: Subdivision, local: bool = True) -> list[tuple[Fraction, ...]]:
    """Linear functionals ``m`` with ``tri`` induced by ``w`` iff ``m . w > 0`` for all.

    With ``local=False`` there is one row per (maximal simplex C, label j
    not in C).  The default local system keeps one row per interior wall
    (the apex of one side against the other simplex) and one per unused
    label (against a simplex containing it); a strictly locally convex
    piecewise-linear function on a convex domain is strictly convex, so
    both systems cut out the same open cone.
    """
    rows = []
    if not local:
        for cell in tri.cells:
            for j in range(len(config)):
                if j not in cell:
                    rows.append(_fold_row(config, cell, j)[0])
        return rows
    owner: dict[Cell, list[Cell]] = {}
    for cell in tri.cells:
        for k in range(len(cell)):
            owner.setdefault(cell[:k] + cell[k + 1:], []).append(cell)
    for facet, cells in sorted(owner.items()):
        if len(cells) == 2:
            c1, c2 = cells
            (apex,) = set(c2) - set(facet)
            rows.append(_fold_row(config, c1, apex)[0])
    used = tri.used_labels
    for j in range(len(config)):
        if j in used:
            continue
        for cell in tri.cells:
            row, lam = _fold_row(config, cell, j)
            if all(l >= 0 for l in lam):
                rows.append(row)
                break
        else:
            raise SubdivisionError(f"label {j} lies in no simplex of {tri}")
    return rows


@dataclass(frozen=True)
class Regularity:
    regular: bool
    # integer heights inducing the triangulation, if regular
    heights: tuple[int, ...] | None = None
    # y >= 0, sum(y) = 1 with sum_k y_k * folding_rows[k] == 0, if not
    certificate: tuple[Fraction, ...] | None = None


def is_regular(config: PointConfiguration, tri: Subdivision) -> Regularity:
    """Decide regularity by maximizing a uniform slack over the folding rows.

    Heights may be shifted by a constant without changing anything, so the
    LP works with nonnegative heights.
    """
    rows = folding_rows(config, tri)
    size = len(config)
    if not rows:
        return Regularity(True, heights=(0,) * size)
    a_ub = [[-x for x in m] + [1] for m in rows]
    b_ub = [0] * len(rows)
    a_ub.append([0] * size + [1])
    b_ub.append(1)
    res = linprog([0] * size + [1], a_ub, b_ub)
    if res.status != OPTIMAL:
        raise SubdivisionError("regularity LP failed")
    if res.value > 0:
        w = primitive(res.x[:size])
        induced = regular_subdivision(config, w)
        if induced != tri:
            raise SubdivisionError(f"witness {w} induces {induced}, not {tri}")
        return Regularity(True, heights=w)
    a_eq = [[m[i] for m in rows] for i in range(size)] + [[1] * len(rows)]
    b_eq = [0] * size + [1]
    cert = linprog([0] * len(rows), A_eq=a_eq, b_eq=b_eq)
    if cert.status != OPTIMAL:
        raise SubdivisionError("no non-regularity certificate for a non-regular triangulation")
    return Regularity(False, certificate=cert.x)


def verify_nonregularity(config: PointConfiguration, tri: Subdivision, certificate: Sequence[Fraction]) -> bool:
    rows = folding_rows(config, tri)
    if len(certificate) != len(rows) or any(y < 0 for y in certificate) or sum(certificate) != 1:
        return False
    return all(sum((y * m[i] for y, m in zip(certificate, rows)), Fraction(0)) == 0 for i in range(len(config)))


# -- secondary fan walk -------------------------------------------------------


def _start_triangulation(config: PointConfiguration) -> Subdivision:
    base = 2
    while True:
        sub = regular_subdivision(config, [base**j for j in range(len(config))])
        if sub.is_triangulation:
            return sub
        base += 1


def regular_triangulations_by_walk(config: PointConfiguration) -> list[Subdivision]:
    """Regular triangulations reached by crossing walls of the secondary fan.

    Independent of :func:`enumerate_triangulations`: starts from a placing
    triangulation and, for every wall of each secondary cone, steps from a
    relative-interior point of the wall into the neighbouring cone.
    """
    start = _start_triangulation(config)
    seen = {start}
    queue = [start]
    size = len(config)
    while queue:
        tri = queue.pop()
        rows = folding_rows(config, tri)
        groups: dict[tuple[int, ...], list[int]] = {}
        for k, m in enumerate(rows):
            groups.setdefault(primitive(m), []).append(k)
        for g in sorted(groups):
            members = set(groups[g])
            others = [m for k, m in enumerate(rows) if k not in members]
            a_ub = [[-x for x in m] + [1] for m in others] + [[0] * size + [1]]
            b_ub = [0] * len(others) + [1]
            res = linprog([0] * size + [1], a_ub, b_ub, [list(g) + [0]], [0])
            if res.status != OPTIMAL or res.value <= 0:
                continue
            wall = res.x[:size]
            step = Fraction(1)
            while True:
                w = [a - step * b for a, b in zip(wall, g)]
                nxt = regular_subdivision(config, w, verify=False)
                if nxt.is_triangulation and nxt != tri and all(
                    dot(m, wall) >= 0 for m in folding_rows(config, nxt)
                ):
                    break
                step /= 2
            if nxt not in seen:
                check_subdivision(config, nxt)
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda s: s.cells)


def coarse_subdivisions(config: PointConfiguration, secondary=None) -> list[tuple[Subdivision, tuple[int, ...]]]:
    """Coarse subdivisions with a representative height vector each.

    Every facet normal of the secondary polytope is a height function whose
    regular subdivision corresponds to that facet.
    """
    if secondary is None:
        from .gkz import secondary_polytope

        secondary = secondary_polytope(config)
    out: dict[Subdivision, tuple[int, ...]] = {}
    for k, (normal, _, _) in enumerate(secondary.hull.facets):
        out.setdefault(secondary.facet_subdivision[k], normal)
    trivial = trivial_subdivision(config)
    return [(s, w) for s, w in sorted(out.items(), key=lambda kv: kv[0].cells) if s != trivial]
