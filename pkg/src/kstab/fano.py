"""Dictionary between reflexive polytopes and anticanonically polarized toric
Fano varieties, plus the barycenter K-polystability decision.

Convention: the input polytope IS the moment (weight) polytope of the
anticanonical bundle, so K-polystability is literally the test
"barycenter == 0"; the fan of the variety lives on the dual side and its rays
are the primitive facet normals of P.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotReflexive, OriginNotInterior, RedundantRay
from .polytope import (
    AffineFn,
    LatticePolytope,
    affine_rank,
    make_polytope,
    vertex_enumerate,
)
from .rational import Vec, format_rational, format_vec

__all__ = ["ToricFano", "StabilityVerdict", "from_polytope", "from_fan",
           "decide_kps", "fan_rays"]

KPOLYSTABLE = "KPolystable"
KUNSTABLE = "KUnstable"


@dataclass(frozen=True)
class ToricFano:
    """Toric Fano variety encoded by the moment polytope of its anticanonical
    bundle; `degree` is the top self-intersection of that bundle,
    n! * vol(P)."""

    polytope: LatticePolytope
    dim: int
    degree: Fraction

    def __repr__(self):
        return f"<toric Fano, n={self.dim}, degree {self.degree}>"


@dataclass(frozen=True)
class StabilityVerdict:
    status: str
    barycenter: Vec
    witness: AffineFn | None

    @property
    def polystable(self) -> bool:
        return self.status == KPOLYSTABLE

    def to_json(self, degree: Fraction | None = None) -> dict:
        out = {
            "status": self.status,
            "barycenter": format_vec(self.barycenter),
            "witness": self.witness.to_json() if self.witness else None,
        }
        if degree is not None:
            out["degree"] = format_rational(degree)
        return out


def from_polytope(P: LatticePolytope) -> ToricFano:
    """The toric Fano variety whose anticanonical moment polytope is P."""
    if not P.reflexive:
        raise NotReflexive("the moment polytope of a toric Fano must be reflexive")
    return ToricFano(polytope=P, dim=P.dim,
                     degree=math.factorial(P.dim) * P.volume)


def fan_rays(X: ToricFano) -> tuple[tuple[int, ...], ...]:
    """Primitive generators of the fan rays = facet normals of P = vertices
    of the dual polytope."""
    return tuple(normal for normal, _ in X.polytope.facets)


def from_fan(rays) -> ToricFano:
    """Inverse dictionary: P = {y : <r, y> >= -1 for every ray r}.

    Requires the rays to positively span (equivalently 0 interior to their
    hull), each ray to cut out a facet, and the resulting polytope to be
    reflexive.
    """
    rays = [tuple(int(c) for c in r) for r in rays]
    if not rays:
        raise RedundantRay("no rays given")
    n = len(rays[0])
    for r in rays:
        if math.gcd(*r) != 1:
            raise RedundantRay(f"ray {r} is not primitive")
    hull = make_polytope(rays) if affine_rank([tuple(Fraction(c) for c in r)
                                               for r in rays]) == n else None
    if hull is None or not hull.origin_interior:
        raise OriginNotInterior("rays do not positively span the space")
    ineqs = [(r, Fraction(1)) for r in rays]
    verts = vertex_enumerate(ineqs, n)
    if len(verts) < n + 1 or affine_rank(verts) < n:
        raise RedundantRay("rays do not cut out a full-dimensional polytope")
    P = make_polytope(verts)
    normals = {normal for normal, _ in P.facets}
    for r in rays:
        if r not in normals:
            raise RedundantRay(f"ray {r} cuts no facet")
    if not P.reflexive:
        raise NotReflexive("the fan is not the face fan of a reflexive dual")
    return from_polytope(P)


def decide_kps(X: ToricFano) -> StabilityVerdict:
    """Exact barycenter test; an unstable verdict carries the destabilizing
    linear function with gradient -barycenter as witness."""
    b = X.polytope.barycenter
    if all(c == 0 for c in b):
        return StabilityVerdict(status=KPOLYSTABLE, barycenter=b, witness=None)
    witness = AffineFn([-c for c in b], 0)
    return StabilityVerdict(status=KUNSTABLE, barycenter=b, witness=witness)
