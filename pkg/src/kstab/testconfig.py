"""Toric test configurations and their combinatorial invariants.

A toric test configuration of a toric Fano X_P is encoded by a rational
piecewise-linear convex function f on the moment polytope P.  This module
evaluates, in exact rational arithmetic:

  * the Donaldson-Futaki invariant
        DF(f) = -(1/vol P) ( int_dP f dsigma - n int_P f dmu ),
    normalized so that DF(<a,.>) = -<a, barycenter(P)> (the classical Futaki
    character) and so that -DF equals the Ding slope for product
    configurations;
  * the Ding invariant DING(f) = mean_P(f) - f(0), the closed-form candidate
    for the asymptotic Ding slope (confirmed numerically by the geodesic
    module);
  * the non-negative defect q_hat = -DF - DING;
  * the correction term q from log-resolution data,
        q = max_i (m_i - c_i - 1)/m_i + (1/L^n) sum_i c_i (L'^n . E_i);
  * L-infinity norms of test configurations and the entropy upper bound
        lambda <= n V - (1/2) sup (DF / ||.||)^2
    over destabilizing configurations.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidMultiplicity, OriginNotInterior
from .fano import ToricFano, decide_kps
from .polytope import (
    AffineFn,
    LatticePolytope,
    PLConvexFn,
    as_pl,
    integrate_boundary,
    integrate_pl,
    pl_range,
)
from .rational import format_rational, rational

__all__ = [
    "ResolutionComponent",
    "ResolutionData",
    "DFReport",
    "df",
    "ding_invariant",
    "q_hat",
    "q_eval",
    "linfty_norm",
    "lambda_bound",
    "is_product",
    "df_report",
]

_ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# resolution data for the q formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResolutionComponent:
    """One reduced component of the resolved central fiber: multiplicity m of
    the pulled-back fiber coordinate, vanishing order c of the chosen adjoint
    section, and the intersection number L'^n . E."""

    multiplicity: int
    vanishing_order: Fraction
    intersection: Fraction

    def __init__(self, multiplicity, vanishing_order, intersection):
        object.__setattr__(self, "multiplicity", int(multiplicity))
        object.__setattr__(self, "vanishing_order", rational(vanishing_order))
        object.__setattr__(self, "intersection", rational(intersection))


@dataclass(frozen=True)
class ResolutionData:
    components: tuple[ResolutionComponent, ...]
    l_top: Fraction  # L^n > 0

    def __init__(self, components, l_top):
        comps = tuple(c if isinstance(c, ResolutionComponent)
                      else ResolutionComponent(*c) for c in components)
        if not comps:
            raise InvalidMultiplicity("resolution data needs at least one component")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "l_top", rational(l_top))
        if self.l_top <= 0:
            raise InvalidMultiplicity(f"L^n must be positive, got {self.l_top}")

    @classmethod
    def from_json(cls, obj: dict) -> "ResolutionData":
        comps = [ResolutionComponent(c["m"], c.get("c", 0), c.get("lprime_n_dot_E", 0))
                 for c in obj["components"]]
        return cls(comps, obj["l_n"])

    def to_json(self) -> dict:
        return {
            "l_n": format_rational(self.l_top),
            "components": [
                {"m": c.multiplicity,
                 "c": format_rational(c.vanishing_order),
                 "lprime_n_dot_E": format_rational(c.intersection)}
                for c in self.components
            ],
        }


def q_eval(data: ResolutionData) -> Fraction:
    """Evaluate q = max_i (m_i - c_i - 1)/m_i + (1/L^n) sum_i c_i (L'^n . E_i).

    Warns (does not error) when the result is negative, which cannot happen
    for data coming from an actual adjoint trivializing section.
    """
    for comp in data.components:
        if comp.multiplicity < 1:
            raise InvalidMultiplicity(
                f"multiplicity must be >= 1, got {comp.multiplicity}")
    lelong = max(Fraction(c.multiplicity - 1, c.multiplicity) - c.vanishing_order / c.multiplicity
                 for c in data.components)
    correction = sum((c.vanishing_order * c.intersection for c in data.components),
                     _ZERO) / data.l_top
    q = lelong + correction
    if q < 0:
        warnings.warn(f"q = {q} < 0: the supplied resolution data cannot come "
                      "from a trivializing adjoint section", stacklevel=2)
    return q


# ---------------------------------------------------------------------------
# combinatorial invariants of a PL convex function on P
# ---------------------------------------------------------------------------

def df(X: ToricFano, f) -> Fraction:
    """Donaldson-Futaki invariant; <= 0 for all convex f iff K-polystable."""
    f = as_pl(f)
    P = X.polytope
    boundary = integrate_boundary(P, f)
    interior = integrate_pl(P, f)
    return -(boundary - P.dim * interior) / P.volume


def ding_invariant(X: ToricFano, f) -> Fraction:
    """Mean of f over P minus its value at the origin: the exact asymptotic
    slope of the Ding functional along the geodesic ray directed by f."""
    f = as_pl(f)
    P = X.polytope
    if not P.origin_interior:
        raise OriginNotInterior("the Ding invariant needs 0 interior to P")
    origin = (_ZERO,) * P.dim
    return integrate_pl(P, f) / P.volume - f(origin)


def q_hat(X: ToricFano, f) -> Fraction:
    """Defect -DF - DING; non-negative for every convex f, zero exactly when
    the induced degeneration keeps a reduced anticanonical central fiber."""
    return -df(X, f) - ding_invariant(X, f)


def is_product(f, P: LatticePolytope) -> bool:
    """True iff f agrees with a single affine function on all of P.

    A piece dominates on P iff it dominates at every vertex (differences of
    affine functions are affine, so their minimum over P sits at a vertex).
    """
    f = as_pl(f)
    for i, piece in enumerate(f.pieces):
        if all(piece(v) >= f(v) for v in P.vertices):
            return True
    return False


def linfty_norm(X: ToricFano, f) -> tuple[Fraction, Fraction]:
    """L-infinity data of the test configuration: (raw, normalized) where
    raw = max_P |f| and normalized = (max_P f - min_P f) / 2, the quotient
    norm modulo constants (invariant under base change and twists)."""
    f = as_pl(f)
    fmin, fmax = pl_range(X.polytope, f)
    return max(abs(fmin), abs(fmax)), (fmax - fmin) / 2


def lambda_bound(X: ToricFano, candidates=()) -> Fraction:
    """Upper bound n V - (1/2) max (DF / ||.||)^2 over the destabilizing
    candidates (DF > 0, nonzero normalized norm).

    The canonical linear witness from the barycenter criterion is always
    included; user candidates sharpen the bound.  Returns n V when nothing
    destabilizes.
    """
    cands = [as_pl(c) for c in candidates]
    verdict = decide_kps(X)
    if verdict.witness is not None:
        cands.append(as_pl(verdict.witness))
    best = None
    for f in cands:
        value = df(X, f)
        if value <= 0:
            continue
        _, normalized = linfty_norm(X, f)
        if normalized == 0:
            continue
        ratio = (value / normalized) ** 2
        if best is None or ratio > best:
            best = ratio
    bound = X.dim * X.degree
    if best is not None:
        bound -= best / 2
    return bound


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DFReport:
    """All exact invariants of one (X, f) pair.

    `linfty` is the normalized (quotient-norm) value, so `normalized_df` is
    invariant under f -> f + const and f -> c f (c > 0); it is None when f is
    constant on P.
    """

    df: Fraction
    ding: Fraction
    q_hat: Fraction
    linfty: Fraction
    normalized_df: Fraction | None
    is_product: bool

    def to_json(self) -> dict:
        return {
            "df": format_rational(self.df),
            "ding": format_rational(self.ding),
            "q_hat": format_rational(self.q_hat),
            "linfty": format_rational(self.linfty),
            "normalized_df": (None if self.normalized_df is None
                              else format_rational(self.normalized_df)),
            "is_product": self.is_product,
        }


def df_report(X: ToricFano, f) -> DFReport:
    f = as_pl(f)
    value = df(X, f)
    ding = ding_invariant(X, f)
    _, normalized = linfty_norm(X, f)
    return DFReport(
        df=value,
        ding=ding,
        q_hat=-value - ding,
        linfty=normalized,
        normalized_df=None if normalized == 0 else value / normalized,
        is_product=is_product(f, X.polytope),
    )
