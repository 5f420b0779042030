"""Reflection of a plane wave arriving along the real axis.

The observer sits at f = r*e^{i*theta}, r > 1. The reflection point solves

    r*e^{-i*theta}*w^4 - w^3 + w - r*e^{i*theta} = 0,

whose four roots all lie on the unit circle. Root selection follows the
physics: the incoming horizontal ray must hit the lit side first, the
reflected segment must clear the mirror, and among the survivors the
plane-wave path functional |f - w| - Re w is minimal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateLeadingCoefficient, InvalidObserver, NoRootOnCircle, RootAtOne, ShadowRegion
from .numeric import (
    DEFAULT_TOLERANCES,
    Tolerances,
    ensure_real,
    on_unit_circle,
    project_to_circle,
    segment_clears_disk,
    wrap_angle,
)
from .quartic import (
    QuarticCoeffs,
    RealQuarticNature,
    RootNature,
    RootSet,
    infinity_real_coeffs,
    real_quartic_invariants,
    solve_quartic,
)

__all__ = [
    "ObserverPolar",
    "InfinityResult",
    "infinity_quartic_coeffs",
    "infinity_reflection",
    "mobius_real_image",
    "verify_circle_theorem",
]

_ROOT_AT_ONE_EPS = 1e-12
_ANGLE_SLACK = 1e-9


@dataclass(frozen=True)
class ObserverPolar:
    """Observation point r*e^{i*theta} outside the mirror; theta is stored
    reduced to (-pi, pi]."""

    r: float
    theta: float

    def __post_init__(self) -> None:
        r = ensure_real(self.r, "r")
        theta = ensure_real(self.theta, "theta")
        if r <= 1.0:
            raise InvalidObserver(f"observer radius must exceed 1, got {r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", wrap_angle(theta))

    @property
    def point(self) -> complex:
        return self.r * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class InfinityResult:
    """Selected reflection point plus the full root picture.

    mobius_images holds Re(i*(1 + w_k)/(1 - w_k)) for the four roots, or None
    when a root sits at the map's pole w = 1 (the on-axis case).
    path_defect is |f - w| - Re w, the plane-wave travel functional up to a
    constant. degenerate_axis marks theta = 0, where the answer is w = 1.
    """

    w: complex
    phi: float
    all_roots: RootSet
    mobius_images: Optional[tuple[float, float, float, float]]
    path_defect: float
    reality_residual: float
    degenerate_axis: bool


def infinity_quartic_coeffs(obs: ObserverPolar) -> QuarticCoeffs:
    """Coefficients r*e^{-i*theta}, -1, 0, 1, -r*e^{i*theta}."""
    phase = cmath.exp(1j * obs.theta)
    return QuarticCoeffs(
        c4=obs.r * phase.conjugate(),
        c3=-1.0 + 0j,
        c2=0j,
        c1=1.0 + 0j,
        c0=-obs.r * phase,
    )


def _conjugated_rootset(roots: RootSet) -> RootSet:
    order = sorted(
        range(len(roots.roots)),
        key=lambda k: (cmath.phase(roots.roots[k].conjugate()), abs(roots.roots[k])),
    )
    return RootSet(
        roots=tuple(roots.roots[k].conjugate() for k in order),
        residuals=tuple(roots.residuals[k] for k in order),
        polish_iterations=tuple(roots.polish_iterations[k] for k in order),
        min_separation=roots.min_separation,
    )


def _reality_residual(f: complex, w: complex) -> float:
    return abs(((f - w) / (w * w)).imag)


def infinity_reflection(
    obs: ObserverPolar, tol: Tolerances = DEFAULT_TOLERANCES
) -> InfinityResult:
    """Physical reflection point for a plane wave arriving from the +x side.

    Negative angles reduce to positive ones by conjugation. theta = 0 is the
    degenerate on-axis case with w = 1. For |theta| <= pi/2 the selected root
    has phi in [0, pi/2] (up to conjugation); for observers beyond pi/2 a
    root is returned only if one survives the physical filters, otherwise
    ShadowRegion is raised.
    """
    theta = obs.theta
    theta_c = abs(theta)
    canonical = ObserverPolar(obs.r, theta_c) if theta != theta_c else obs
    roots_c = solve_quartic(infinity_quartic_coeffs(canonical), tol)

    if theta == 0.0:
        w = 1.0 + 0j
        all_roots = roots_c
        degenerate = True
    else:
        degenerate = False
        f_c = canonical.point
        candidates: list[tuple[complex, float]] = []
        for root in roots_c.roots:
            if not on_unit_circle(root, tol):
                continue
            wp = project_to_circle(root)
            phi = cmath.phase(wp)
            if theta_c <= math.pi / 2.0 and not (
                -_ANGLE_SLACK <= phi <= math.pi / 2.0 + _ANGLE_SLACK
            ):
                continue
            if wp.real < -tol.unit_circle_tol:
                continue  # unlit: the incoming ray hits the far side first
            if not segment_clears_disk(wp, f_c):
                continue
            candidates.append((wp, abs(f_c - wp) - wp.real))
        if not candidates:
            if theta_c > math.pi / 2.0:
                raise ShadowRegion(
                    f"no physically valid reflection for theta = {theta:.6g}"
                )
            raise NoRootOnCircle("no root passed the physical filters")
        w = min(candidates, key=lambda t: t[1])[0]
        if theta < 0.0:
            w = w.conjugate()
        all_roots = _conjugated_rootset(roots_c) if theta < 0.0 else roots_c

    images: Optional[tuple[float, float, float, float]]
    if any(abs(root - 1.0) < _ROOT_AT_ONE_EPS for root in all_roots.roots):
        images = None
    else:
        images = mobius_real_image(all_roots)

    f = obs.point
    return InfinityResult(
        w=w,
        phi=cmath.phase(w),
        all_roots=all_roots,
        mobius_images=images,
        path_defect=abs(f - w) - w.real,
        reality_residual=_reality_residual(f, w),
        degenerate_axis=degenerate,
    )


def mobius_real_image(roots: RootSet) -> tuple[float, ...]:
    """Images i*(1 + w)/(1 - w) of the roots; real for roots on the circle.

    Raises RootAtOne when a root sits at the pole of the map.
    """
    out = []
    for w in roots.roots:
        if abs(w - 1.0) < _ROOT_AT_ONE_EPS:
            raise RootAtOne("root at w = 1 has no finite image")
        out.append((1j * (1.0 + w) / (1.0 - w)).real)
    return tuple(out)


def verify_circle_theorem(obs: ObserverPolar, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Check, by two independent routes, that all four reflection roots lie
    on the unit circle: the real-coefficient image quartic must classify as
    FourRealDistinct and the solved roots must pass the circle test.
    """
    if obs.theta == 0.0 or abs(obs.theta) == math.pi:
        raise DegenerateLeadingCoefficient(
            "theta = 0 (mod pi): the image quartic degenerates"
        )
    nature: RealQuarticNature = real_quartic_invariants(
        *infinity_real_coeffs(obs.r, obs.theta)
    )
    if nature.classification is not RootNature.FOUR_REAL_DISTINCT:
        return False
    roots = solve_quartic(infinity_quartic_coeffs(obs), tol)
    return all(on_unit_circle(w, tol) for w in roots.roots)
