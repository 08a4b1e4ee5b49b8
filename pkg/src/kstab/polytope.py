"""Exact rational lattice-polytope geometry.

Everything in this module is computed over `fractions.Fraction`; no floating
point is used anywhere.  The central object is a full-dimensional polytope
given by its vertices (V-representation) with a derived irredundant facet
description (H-representation), together with exact volume, barycenter,
triangulation and integration of affine / piecewise-linear convex functions
over the polytope and (for reflexive polytopes) over its boundary with the
lattice-normalized facet measure.

Dimensions of interest are small (n <= 4), so facet enumeration is a
brute-force scan over point subsets and vertex enumeration over constraint
subsets; no asymptotically clever convex-hull machinery is warranted.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DegeneratePolytope,
    EmptyInput,
    FunctionUndefined,
    NotReflexive,
    OriginNotInterior,
)
from .rational import Vec, dot, format_vec, rational, rational_vec

__all__ = [
    "AffineFn",
    "PLConvexFn",
    "LatticePolytope",
    "Triangulation",
    "make_polytope",
    "dual",
    "is_reflexive",
    "triangulate",
    "volume",
    "barycenter",
    "integrate_pl",
    "integrate_boundary",
    "pl_range",
    "active_cells",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# exact linear algebra (small dense systems over Fraction)
# ---------------------------------------------------------------------------

def _row_reduce(rows: list[list[Fraction]]) -> int:
    """In-place forward elimination; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = prow[col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_of(vectors: Sequence[Sequence[Fraction]]) -> int:
    return _row_reduce([list(v) for v in vectors])


def affine_rank(points: Sequence[Vec]) -> int:
    """Dimension of the affine hull of the points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank_of([[a - b for a, b in zip(p, base)] for p in points[1:]])


def _det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if n == 3:
        a, b, c = mat[0]
        d, e, f = mat[1]
        g, h, i = mat[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # generic fraction-free-ish expansion for n == 4 (n never exceeds 4 here)
    total = _ZERO
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _solve_square(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve an n x n system exactly; None if singular."""
    n = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        inv = prow[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col] / inv
                aug[r] = [a - factor * b for a, b in zip(aug[r], prow)]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _integerize(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive rational to a primitive
    integer vector."""
    denom = math.lcm(*(f.denominator for f in vec)) if vec else 1
    ints = [int(f * denom) for f in vec]
    g = math.gcd(*ints)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def _hyperplane_normal(diffs: list[Sequence[Fraction]], n: int) -> tuple[int, ...] | None:
    """Primitive integer normal of the hyperplane spanned by n-1 difference
    vectors, via cofactor minors; None if they do not span a hyperplane."""
    mat = [_integerize(d) if any(x.denominator != 1 for x in d) else tuple(int(x) for x in d)
           for d in diffs]
    normal = []
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in mat]
        det = _det([[Fraction(x) for x in row] for row in minor])
        normal.append(det if j % 2 == 0 else -det)
    if all(c == 0 for c in normal):
        return None
    ints = [int(c) for c in normal]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


# ---------------------------------------------------------------------------
# affine and piecewise-linear convex functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineFn:
    """y |-> <gradient, y> + constant, with exact rational coefficients."""

    gradient: Vec
    constant: Fraction

    def __init__(self, gradient, constant=0):
        object.__setattr__(self, "gradient", rational_vec(gradient))
        object.__setattr__(self, "constant", rational(constant))

    def __call__(self, y: Sequence[Fraction]) -> Fraction:
        return dot(self.gradient, y) + self.constant

    def to_json(self) -> dict:
        return {"a": format_vec(self.gradient), "c": str(self.constant)}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineFn":
        return cls(obj["a"], obj.get("c", 0))


class PLConvexFn:
    """Convex piecewise-linear function given as a max of affine pieces.

    Canonical form: pieces are sorted and exact duplicates removed; a piece
    with the same gradient as another but a smaller constant can never achieve
    the max and is dropped.  Pruning of pieces that are inactive on a given
    polytope is relative to that polytope and happens inside the operations
    that take one (see `active_cells`).
    """

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[AffineFn]):
        items = [p if isinstance(p, AffineFn) else AffineFn(*p) for p in pieces]
        if not items:
            raise FunctionUndefined("a piecewise-linear function needs at least one piece")
        best: dict[Vec, Fraction] = {}
        for p in items:
            cur = best.get(p.gradient)
            if cur is None or p.constant > cur:
                best[p.gradient] = p.constant
        self.pieces = tuple(AffineFn(g, c) for g, c in sorted(best.items()))

    def __call__(self, y: Sequence[Fraction]) -> Fraction:
        return max(p(y) for p in self.pieces)

    def __eq__(self, other):
        return isinstance(other, PLConvexFn) and self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __repr__(self):
        return f"PLConvexFn({list(self.pieces)!r})"

    def shift(self, c) -> "PLConvexFn":
        c = rational(c)
        return PLConvexFn([AffineFn(p.gradient, p.constant + c) for p in self.pieces])

    def scale(self, c) -> "PLConvexFn":
        c = rational(c)
        if c <= 0:
            raise ValueError("scale factor must be positive to preserve convexity")
        return PLConvexFn([AffineFn([c * g for g in p.gradient], c * p.constant)
                           for p in self.pieces])

    def add_affine(self, ell: AffineFn) -> "PLConvexFn":
        return PLConvexFn([
            AffineFn([a + b for a, b in zip(p.gradient, ell.gradient)],
                     p.constant + ell.constant)
            for p in self.pieces
        ])

    def to_json(self) -> dict:
        return {"pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, obj: dict) -> "PLConvexFn":
        return cls([AffineFn.from_json(p) for p in obj["pieces"]])


def as_pl(f) -> PLConvexFn:
    if isinstance(f, PLConvexFn):
        return f
    if isinstance(f, AffineFn):
        return PLConvexFn([f])
    raise TypeError(f"expected AffineFn or PLConvexFn, got {type(f).__name__}")


# ---------------------------------------------------------------------------
# the polytope itself
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional polytope with exact V- and H-representations.

    `facets[i] = (normal, offset)` encodes the inequality
    ``<normal, y> >= -offset`` with a primitive integer normal.  Vertices are
    deduplicated extreme points in lexicographic order.  Despite the name,
    rational vertices are allowed (duals of non-reflexive polytopes are
    rational); `is_lattice` tells the two cases apart.
    """

    dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]

    # -- basic queries ------------------------------------------------------

    @cached_property
    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)

    def contains(self, y: Sequence[Fraction]) -> bool:
        y = rational_vec(y)
        return all(dot(rational_vec(v), y) >= -a for v, a in self.facets)

    def strictly_contains(self, y: Sequence[Fraction]) -> bool:
        y = rational_vec(y)
        return all(dot(rational_vec(v), y) > -a for v, a in self.facets)

    @cached_property
    def origin_interior(self) -> bool:
        return all(a > 0 for _, a in self.facets)

    def facet_vertices(self, i: int) -> tuple[Vec, ...]:
        normal, offset = self.facets[i]
        nv = rational_vec(normal)
        return tuple(v for v in self.vertices if dot(nv, v) == -offset)

    # -- derived geometry ---------------------------------------------------

    @cached_property
    def reflexive(self) -> bool:
        return (self.is_lattice
                and self.origin_interior
                and all(a == 1 for _, a in self.facets))

    @cached_property
    def triangulation(self) -> "Triangulation":
        simplices = _triangulate_points(list(self.vertices), self.dim)
        return Triangulation(tuple(simplices), tuple("interior" for _ in simplices))

    @cached_property
    def volume(self) -> Fraction:
        nfact = math.factorial(self.dim)
        total = _ZERO
        for s in self.triangulation.simplices:
            total += abs(_simplex_det(s)) / nfact
        return total

    @cached_property
    def barycenter(self) -> Vec:
        nfact = math.factorial(self.dim)
        acc = [_ZERO] * self.dim
        for s in self.triangulation.simplices:
            vol = abs(_simplex_det(s)) / nfact
            for k in range(self.dim):
                acc[k] += vol * sum(p[k] for p in s) / (self.dim + 1)
        vol_total = self.volume
        return tuple(a / vol_total for a in acc)

    def facet_triangulation(self, i: int) -> "Triangulation":
        pts = list(self.facet_vertices(i))
        simplices = _triangulate_points(pts, self.dim - 1)
        return Triangulation(tuple(simplices), tuple(i for _ in simplices))

    def dual(self) -> "LatticePolytope":
        return dual(self)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[str(c) for c in v] for v in self.vertices],
            "facets": [{"normal": list(n), "offset": str(a)} for n, a in self.facets],
        }

    @classmethod
    def from_json(cls, obj) -> "LatticePolytope":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return make_polytope(obj["vertices"])

    def __repr__(self):
        kind = "reflexive " if self.reflexive else ""
        return (f"<{kind}{self.dim}-d polytope, {len(self.vertices)} vertices, "
                f"{len(self.facets)} facets>")


@dataclass(frozen=True)
class Triangulation:
    """Simplices with pairwise disjoint interiors covering a region.

    Tags record what each simplex covers: "interior", a facet index, or a
    (piece, region) pair for refinements by the active pieces of a
    piecewise-linear function.
    """

    simplices: tuple[tuple[Vec, ...], ...]
    tags: tuple[object, ...]

    def __len__(self):
        return len(self.simplices)


def _simplex_det(simplex: Sequence[Vec]) -> Fraction:
    base = simplex[0]
    mat = [[a - b for a, b in zip(p, base)] for p in simplex[1:]]
    return _det(mat)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _facets_from_points(pts: list[Vec], n: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """All facet inequalities of conv(pts), assumed full-dimensional.

    Every facet of the hull is spanned by n affinely independent input points,
    so scanning n-subsets finds them all.
    """
    facets: dict[tuple[tuple[int, ...], Fraction], None] = {}
    for subset in itertools.combinations(range(len(pts)), n):
        base = pts[subset[0]]
        diffs = [[pts[i][k] - base[k] for k in range(n)] for i in subset[1:]]
        normal = _hyperplane_normal(diffs, n) if n > 1 else (1,)
        if normal is None:
            continue
        nv = rational_vec(normal)
        c = dot(nv, base)
        lo = hi = False
        for p in pts:
            d = dot(nv, p) - c
            if d > 0:
                hi = True
            elif d < 0:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if not hi:
            normal = tuple(-x for x in normal)
            c = -c
        facets[(normal, -c)] = None
    return sorted(facets)


def make_polytope(points: Iterable[Sequence]) -> LatticePolytope:
    """Build the polytope with canonical V-rep and derived primitive H-rep.

    Non-extreme input points are dropped.  Raises EmptyInput for an empty
    list and DegeneratePolytope when the points do not affinely span R^n.
    """
    pts: list[Vec] = []
    seen = set()
    for p in points:
        v = rational_vec(p)
        if v not in seen:
            seen.add(v)
            pts.append(v)
    if not pts:
        raise EmptyInput("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have inconsistent dimensions")
    if n == 0 or affine_rank(pts) < n:
        raise DegeneratePolytope(
            f"points span an affine subspace of dimension {affine_rank(pts)} < {n}")
    facets = _facets_from_points(pts, n)
    vertices = []
    for p in pts:
        active = [f[0] for f in facets if dot(rational_vec(f[0]), p) == -f[1]]
        if len(active) >= n and rank_of([rational_vec(a) for a in active]) == n:
            vertices.append(p)
    vertices.sort()
    poly = LatticePolytope(dim=n, vertices=tuple(vertices), facets=tuple(facets))
    _cross_validate(poly)
    return poly


def _cross_validate(P: LatticePolytope) -> None:
    for v in P.vertices:
        if not P.contains(v):
            raise DegeneratePolytope("internal error: vertex violates an inequality")
    for i, (normal, offset) in enumerate(P.facets):
        on = P.facet_vertices(i)
        if len(on) < P.dim or affine_rank(list(on)) != P.dim - 1:
            raise DegeneratePolytope(
                "internal error: facet is not spanned by vertices")


def vertex_enumerate(
    inequalities: Sequence[tuple[Sequence[Fraction], Fraction]],
    n: int,
    equalities: Sequence[tuple[Sequence[Fraction], Fraction]] = (),
) -> list[Vec]:
    """Vertices of {y : <a,y> >= -b for all inequalities, <a,y> = -b for all
    equalities} by brute force over tight constraint subsets.

    The feasible set must be bounded (callers guarantee this; unbounded input
    simply yields the vertices of the closure of the bounded part, which the
    callers reject via rank/emptiness checks).
    """
    ineqs = [(rational_vec(a), rational(b)) for a, b in inequalities]
    eqs = [(rational_vec(a), rational(b)) for a, b in equalities]
    need = n - len(eqs)
    out: set[Vec] = set()
    for subset in itertools.combinations(range(len(ineqs)), need):
        rows = [list(a) for a, _ in eqs] + [list(ineqs[i][0]) for i in subset]
        rhs = [-b for _, b in eqs] + [-ineqs[i][1] for i in subset]
        sol = _solve_square(rows, rhs)
        if sol is None:
            continue
        y = tuple(sol)
        if all(dot(a, y) >= -b for a, b in ineqs):
            out.add(y)
    return sorted(out)


# ---------------------------------------------------------------------------
# duality and reflexivity
# ---------------------------------------------------------------------------

def dual(P: LatticePolytope) -> LatticePolytope:
    """Polar dual {x : <x,y> >= -1 for all y in P}; rational in general."""
    if not P.origin_interior:
        raise OriginNotInterior("the dual requires 0 in the interior")
    verts = [tuple(Fraction(c, 1) / a for c in normal) for normal, a in P.facets]
    return make_polytope(verts)


def is_reflexive(P: LatticePolytope) -> bool:
    """True iff P is a lattice polytope with 0 interior and every facet at
    lattice distance 1 (equivalently, the dual is again a lattice polytope)."""
    return P.reflexive


# ---------------------------------------------------------------------------
# triangulation (placing fan from the first canonical vertex)
# ---------------------------------------------------------------------------

def _affine_coordinates(pts: list[Vec], d: int) -> list[Vec]:
    """Exact coordinates of the points in a basis of their affine hull."""
    base = pts[0]
    diffs = [[p[k] - base[k] for k in range(len(base))] for p in pts]
    # select d independent difference vectors as the basis
    basis: list[list[Fraction]] = []
    idx: list[int] = []
    for i, dvec in enumerate(diffs):
        if rank_of(basis + [dvec]) > len(basis):
            basis.append(dvec)
            idx.append(i)
        if len(basis) == d:
            break
    # coordinates alpha solve  B^T alpha = (p - base) restricted to d
    # independent coordinate rows of B^T
    cols = []
    col_rank: list[list[Fraction]] = []
    for k in range(len(base)):
        row = [basis[j][k] for j in range(d)]
        if rank_of(col_rank + [row]) > len(col_rank):
            col_rank.append(row)
            cols.append(k)
        if len(cols) == d:
            break
    out = []
    for p, dvec in zip(pts, diffs):
        rhs = [dvec[k] for k in cols]
        sol = _solve_square([list(r) for r in col_rank], rhs)
        out.append(tuple(sol))
    return out


def _triangulate_points(pts: list[Vec], d: int) -> list[tuple[Vec, ...]]:
    """Triangulate conv(pts) (affine dimension d) by coning the first
    lexicographic vertex over the triangulated facets that avoid it."""
    pts = sorted(set(pts))
    if d == 0:
        return [tuple(pts)]
    if len(pts) == d + 1:
        return [tuple(pts)]
    n = len(pts[0])
    if d == n:
        coords = pts
    else:
        coords = _affine_coordinates(pts, d)
    back = dict(zip(coords, pts))
    facets = _facets_from_points(list(coords), d)
    v0 = min(coords)
    out: list[tuple[Vec, ...]] = []
    for normal, offset in facets:
        nv = rational_vec(normal)
        if dot(nv, v0) == -offset:
            continue
        face_pts = [c for c in coords if dot(nv, c) == -offset]
        for sub in _triangulate_points(face_pts, d - 1):
            out.append((back[v0],) + tuple(back[c] for c in sub))
    return out


def triangulate(P: LatticePolytope) -> Triangulation:
    return P.triangulation


def volume(P: LatticePolytope) -> Fraction:
    return P.volume


def barycenter(P: LatticePolytope) -> Vec:
    return P.barycenter


# ---------------------------------------------------------------------------
# refinement by active pieces and exact integration
# ---------------------------------------------------------------------------

def _piece_inequalities(f: PLConvexFn, i: int):
    """Inequalities cutting out {y : piece i achieves the max}."""
    out = []
    gi, ci = f.pieces[i].gradient, f.pieces[i].constant
    for j, pj in enumerate(f.pieces):
        if j == i:
            continue
        w = [a - b for a, b in zip(gi, pj.gradient)]
        # <g_i - g_j, y> >= c_j - c_i ; scale to a primitive integer normal
        normal = _integerize(w)
        scale = None
        for a, b in zip(normal, w):
            if b != 0:
                scale = Fraction(a, 1) / b
                break
        if scale is None:
            # identical gradients cannot survive canonicalization
            raise AssertionError("duplicate gradient in canonical PLConvexFn")
        out.append((normal, -scale * (pj.constant - ci)))
    return out


def active_cells(P: LatticePolytope, f) -> list[tuple[int, list[Vec]]]:
    """Partition of P into the full-dimensional closures of the regions where
    each piece of f achieves the max; pieces active only on measure-zero sets
    are omitted.  Returns (piece index, cell vertices) pairs."""
    f = as_pl(f)
    if len(f.pieces) == 1:
        return [(0, list(P.vertices))]
    cells = []
    base_ineqs = [(rational_vec(n), a) for n, a in P.facets]
    for i in range(len(f.pieces)):
        ineqs = base_ineqs + _piece_inequalities(f, i)
        verts = vertex_enumerate(ineqs, P.dim)
        if len(verts) >= P.dim + 1 and affine_rank(verts) == P.dim:
            cells.append((i, verts))
    return cells


def _facet_cells(P: LatticePolytope, facet_index: int, f: PLConvexFn):
    """Refinement of one facet by active pieces: (piece, cell vertices) with
    cells of affine dimension n-1 inside the facet hyperplane."""
    n = P.dim
    normal, offset = P.facets[facet_index]
    eq = [(rational_vec(normal), offset)]
    base_ineqs = [(rational_vec(nf), af) for k, (nf, af) in enumerate(P.facets)
                  if k != facet_index]
    if len(f.pieces) == 1:
        return [(0, list(P.facet_vertices(facet_index)))]
    out = []
    for i in range(len(f.pieces)):
        ineqs = base_ineqs + _piece_inequalities(f, i)
        verts = vertex_enumerate(ineqs, n, equalities=eq)
        if len(verts) >= n and affine_rank(verts) == n - 1:
            out.append((i, verts))
    return out


def _integrate_affine_over_cell(cell: list[Vec], piece: AffineFn, n: int) -> Fraction:
    """Exact integral of an affine function over a full-dimensional cell:
    the mean of an affine function over a simplex is its value at the simplex
    barycenter."""
    nfact = math.factorial(n)
    total = _ZERO
    for s in _triangulate_points(cell, n):
        vol = abs(_simplex_det(s)) / nfact
        if vol == 0:
            continue
        centroid = tuple(sum(p[k] for p in s) / (n + 1) for k in range(n))
        total += vol * piece(centroid)
    return total


def _integrate_affine_over_facet_cell(cell: list[Vec], piece: AffineFn, n: int) -> Fraction:
    """Exact integral against the lattice facet measure:  for a facet simplex
    S at lattice distance 1,  sigma(S) = n * vol_n(cone(0, S))."""
    if n == 1:
        (pt,) = cell
        return piece(pt)
    nm1fact = math.factorial(n - 1)
    total = _ZERO
    for s in _triangulate_points(cell, n - 1):
        cone_det = _det([list(p) for p in s])
        sigma = abs(cone_det) / nm1fact  # == n * |det| / n!
        if sigma == 0:
            continue
        centroid = tuple(sum(p[k] for p in s) / n for k in range(n))
        total += sigma * piece(centroid)
    return total


def integrate_pl(P: LatticePolytope, f, *, facet: int | None = None) -> Fraction:
    """Exact integral of an affine or PL-convex function.

    Over P (facet=None) the measure is Euclidean; over a facet it is the
    lattice-normalized boundary measure, only defined when P is reflexive
    (every facet at lattice distance 1); otherwise NotReflexive is raised.
    """
    f = as_pl(f)
    if facet is None:
        return sum((_integrate_affine_over_cell(cell, f.pieces[i], P.dim)
                    for i, cell in active_cells(P, f)), _ZERO)
    if not P.reflexive:
        raise NotReflexive(
            "the lattice boundary measure is only defined for reflexive polytopes")
    if P.dim == 1:
        # 0-dimensional facet: the lattice measure is the counting measure
        (pt,) = P.facet_vertices(facet)
        return f(pt)
    return sum((_integrate_affine_over_facet_cell(cell, f.pieces[i], P.dim)
                for i, cell in _facet_cells(P, facet, f)), _ZERO)


def integrate_boundary(P: LatticePolytope, f) -> Fraction:
    """Exact integral of f over the whole boundary with the lattice measure."""
    return sum((integrate_pl(P, f, facet=i) for i in range(len(P.facets))), _ZERO)


def boundary_measure(P: LatticePolytope) -> Fraction:
    return integrate_boundary(P, AffineFn([0] * P.dim, 1))


def pl_range(P: LatticePolytope, f) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of a convex PL function over P.

    The max of a convex function is attained at a vertex of P; the min at a
    vertex of the refinement of P by the active pieces.
    """
    f = as_pl(f)
    fmax = max(f(v) for v in P.vertices)
    fmin = min(f(v) for _, cell in active_cells(P, f) for v in cell)
    return fmin, fmax
