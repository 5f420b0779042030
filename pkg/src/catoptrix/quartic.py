"""Closed-form quartic solving with Newton polishing, and real-quartic root classification.

The solver runs the Cardano-Ferrari chain in complex arithmetic (so complex
coefficients are first class), then polishes every root with Newton steps on
the original polynomial. Closed form alone loses digits near repeated roots;
the polish restores them.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DegenerateLeadingCoefficient, InvalidObserver, NoConvergence
from .numeric import DEFAULT_TOLERANCES, Tolerances, ensure_point, ensure_real

__all__ = [
    "QuarticCoeffs",
    "RootSet",
    "RootNature",
    "RealQuarticNature",
    "solve_quartic",
    "polished_roots",
    "real_quartic_invariants",
    "infinity_real_coeffs",
]

_MAX_POLISH_ITERATIONS = 50
_CLOSE_PAIR_THRESHOLD = 1e-7


@dataclass(frozen=True)
class QuarticCoeffs:
    """Coefficients of c4*w^4 + c3*w^3 + c2*w^2 + c1*w + c0.

    c4 may be zero here; degeneracy is rejected at solve time so callers can
    build degree-dropped instances and route them to the reduced solver.
    """

    c4: complex
    c3: complex
    c2: complex
    c1: complex
    c0: complex

    def __post_init__(self) -> None:
        for name in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, ensure_point(getattr(self, name), name))

    def as_tuple(self) -> tuple[complex, complex, complex, complex, complex]:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)

    def __call__(self, w: complex) -> complex:
        return _horner(self.as_tuple(), w)


@dataclass(frozen=True)
class RootSet:
    """Polished roots sorted by ascending principal argument, ties by modulus.

    residuals[k] is |p(roots[k])| recomputed from the coefficients the set was
    solved from. min_separation flags clustered (near-multiple) roots; no
    deflation is attempted for them.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    polish_iterations: tuple[int, ...]
    min_separation: float

    @property
    def has_close_pair(self) -> bool:
        return self.min_separation < _CLOSE_PAIR_THRESHOLD


class RootNature(enum.Enum):
    FOUR_REAL_DISTINCT = "FourRealDistinct"
    NOT_FOUR_REAL_DISTINCT = "NotFourRealDistinct"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class RealQuarticNature:
    """Sign invariants of a real quartic: four real distinct roots iff
    delta > 0, p < 0 and d < 0."""

    delta: float
    p: float
    d: float
    classification: RootNature


def _horner(coeffs: tuple[complex, ...], w: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * w + c
    return acc


def _horner_pair(coeffs: tuple[complex, ...], w: complex) -> tuple[complex, complex]:
    """Value and derivative in one pass."""
    b = coeffs[0]
    c = 0j
    for a in coeffs[1:]:
        c = c * w + b
        b = b * w + a
    return b, c


def _cbrt(z: complex) -> complex:
    """Principal complex cube root via polar form."""
    if z == 0:
        return 0j
    return abs(z) ** (1.0 / 3.0) * cmath.exp(1j * cmath.phase(z) / 3.0)


def _solve_monic_quadratic(b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of x^2 + b*x + c, cancellation-safe."""
    s = cmath.sqrt(b * b - 4.0 * c)
    # pick the sign that avoids subtracting nearly equal quantities
    if (b.conjugate() * s).real < 0.0:
        s = -s
    q = -0.5 * (b + s)
    if q == 0:
        return 0j, -b
    return q, c / q

def _solve_monic_cubic(b: complex, c: complex, d: complex) -> tuple[complex, complex, complex]:
    """Roots of x^3 + b*x^2 + c*x + d by Cardano.

    The two cube roots must satisfy u*v = -p/3; taking independent principal
    roots breaks that, so v is derived from u.
    """
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    s = cmath.sqrt(disc)
    u3a = -q / 2.0 + s
    u3b = -q / 2.0 - s
    u = _cbrt(u3a) if abs(u3a) >= abs(u3b) else _cbrt(u3b)
    if u == 0:
        return -shift, -shift, -shift
    v = -p / (3.0 * u)
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    omega2 = omega.conjugate()
    return (u + v - shift, omega * u + omega2 * v - shift, omega2 * u + omega * v - shift)


def _ferrari(coeffs: tuple[complex, ...]) -> list[complex]:
    """Closed-form roots of a degree-4 polynomial, leading coefficient nonzero."""
    c4, c3, c2, c1, c0 = coeffs
    A = c3 / c4
    B = c2 / c4
    C = c1 / c4
    D = c0 / c4
    shift = A / 4.0
    # depressed quartic y^4 + p*y^2 + q*y + r
    p = B - 3.0 * A * A / 8.0
    q = C + A * A * A / 8.0 - A * B / 2.0
    r = D - 3.0 * A ** 4 / 256.0 + A * A * B / 16.0 - A * C / 4.0

    scale = max(1.0, abs(p), abs(r))
    if abs(q) <= 1e-14 * scale:
        z1, z2 = _solve_monic_quadratic(p, r)
        s1 = cmath.sqrt(z1)
        s2 = cmath.sqrt(z2)
        ys = [s1, -s1, s2, -s2]
    else:
        m_roots = _solve_monic_cubic(-p / 2.0, -r, p * r / 2.0 - q * q / 8.0)
        # the square-root argument 2m - p must stay far from zero; the
        # resolvent root maximizing it avoids catastrophic cancellation
        m = max(m_roots, key=lambda mm: abs(2.0 * mm - p))
        alpha = cmath.sqrt(2.0 * m - p)
        beta = -q / (2.0 * alpha)
        y1, y2 = _solve_monic_quadratic(-alpha, m - beta)
        y3, y4 = _solve_monic_quadratic(alpha, m + beta)
        ys = [y1, y2, y3, y4]
    return [y - shift for y in ys]


def _polish(coeffs: tuple[complex, ...], w: complex, base_bound: float) -> tuple[complex, float, int]:
    """Newton-polish one root; returns (root, residual, iterations used).

    The acceptance bound grows with |root|^degree: below that, float64 cannot
    even evaluate the polynomial, so a flat bound would be unreachable for
    roots far outside the unit disk.
    """
    deriv_stall = 1e-290
    degree = len(coeffs) - 1

    def bound_at(z: complex) -> float:
        return base_bound * max(1.0, abs(z)) ** degree

    best_w = w
    best_res = abs(_horner(coeffs, w))
    iters = 0
    cur = w
    for _ in range(_MAX_POLISH_ITERATIONS):
        f, df = _horner_pair(coeffs, cur)
        res = abs(f)
        if res < best_res:
            best_res = res
            best_w = cur
        if res <= bound_at(cur) or abs(df) < deriv_stall:
            break
        cur = cur - f / df
        iters += 1
    else:
        f = _horner(coeffs, cur)
        if abs(f) < best_res:
            best_res = abs(f)
            best_w = cur
    if best_res > bound_at(best_w):
        raise NoConvergence(
            f"root polishing stalled at residual {best_res:.3e} "
            f"(bound {bound_at(best_w):.3e})"
        )
    return best_w, best_res, iters


def _sorted_rootset(coeffs: tuple[complex, ...], roots: list[complex], tol: Tolerances) -> RootSet:
    bound = tol.residual_tol * max(1.0, max(abs(c) for c in coeffs))
    polished = [_polish(coeffs, w, bound) for w in roots]
    polished.sort(key=lambda t: (cmath.phase(t[0]), abs(t[0])))
    rs = tuple(t[0] for t in polished)
    res = tuple(abs(_horner(coeffs, w)) for w in rs)
    its = tuple(t[2] for t in polished)
    n = len(rs)
    min_sep = math.inf
    for i in range(n):
        for j in range(i + 1, n):
            min_sep = min(min_sep, abs(rs[i] - rs[j]))
    return RootSet(roots=rs, residuals=res, polish_iterations=its, min_separation=min_sep)


def solve_quartic(q: QuarticCoeffs, tol: Tolerances = DEFAULT_TOLERANCES) -> RootSet:
    """Solve a complex-coefficient quartic.

    Parameters
    ----------
    q   : coefficients, q.c4 must be nonzero
    tol : residual_tol bounds the accepted |p(root)|, relative to the largest
          coefficient magnitude

    Raises
    ------
    DegenerateLeadingCoefficient if q.c4 == 0, NoConvergence if a root cannot
    be polished below the residual bound within 50 Newton steps.
    """
    if q.c4 == 0:
        raise DegenerateLeadingCoefficient("quartic leading coefficient is zero")
    coeffs = q.as_tuple()
    return _sorted_rootset(coeffs, _ferrari(coeffs), tol)


def polished_roots(coeffs: tuple[complex, ...], tol: Tolerances = DEFAULT_TOLERANCES) -> RootSet:
    """Roots of a polynomial of degree 1..4 given as (c_n, ..., c_0), c_n != 0.

    Used for the degree-dropped instances of the reflection quartics; the
    degree-4 case routes through the Ferrari chain.
    """
    coeffs = tuple(complex(c) for c in coeffs)
    if not coeffs or coeffs[0] == 0:
        raise DegenerateLeadingCoefficient("leading coefficient is zero")
    deg = len(coeffs) - 1
    lead = coeffs[0]
    if deg == 1:
        raw = [-coeffs[1] / lead]
    elif deg == 2:
        raw = list(_solve_monic_quadratic(coeffs[1] / lead, coeffs[2] / lead))
    elif deg == 3:
        raw = list(_solve_monic_cubic(coeffs[1] / lead, coeffs[2] / lead, coeffs[3] / lead))
    elif deg == 4:
        raw = _ferrari(coeffs)
    else:
        raise ValueError(f"degree {deg} not supported")
    return _sorted_rootset(coeffs, raw, tol)


def real_quartic_invariants(a: float, b: float, c: float, d: float, e: float) -> RealQuarticNature:
    """Discriminant-family invariants of a*x^4 + b*x^3 + c*x^2 + d*x + e.

    The quartic has four distinct real roots iff delta > 0, p < 0 and d < 0;
    delta == 0 marks repeated roots (classified Degenerate).
    """
    a = ensure_real(a, "a")
    b = ensure_real(b, "b")
    c = ensure_real(c, "c")
    d = ensure_real(d, "d")
    e = ensure_real(e, "e")
    if a == 0.0:
        raise DegenerateLeadingCoefficient("leading coefficient a is zero")
    delta = (
        256.0 * e ** 3 * a ** 3
        + (-192.0 * e * e * d * b - 128.0 * e * e * c * c + 144.0 * e * d * d * c - 27.0 * d ** 4) * a * a
        + (
            (144.0 * e * e * c - 6.0 * e * d * d) * b * b
            + (-80.0 * e * d * c * c + 18.0 * d ** 3 * c) * b
            + 16.0 * e * c ** 4
            - 4.0 * d * d * c ** 3
        ) * a
        - 27.0 * e * e * b ** 4
        + (18.0 * e * d * c - 4.0 * d ** 3) * b ** 3
        + (-4.0 * e * c ** 3 + d * d * c * c) * b * b
    )
    p = 8.0 * a * c - 3.0 * b * b
    dd = 64.0 * a ** 3 * e - 16.0 * a * a * c * c + 16.0 * a * b * b * c - 16.0 * a * a * d * b - 3.0 * b ** 4
    if delta == 0.0:
        cls = RootNature.DEGENERATE
    elif delta > 0.0 and p < 0.0 and dd < 0.0:
        cls = RootNature.FOUR_REAL_DISTINCT
    else:
        cls = RootNature.NOT_FOUR_REAL_DISTINCT
    return RealQuarticNature(delta=delta, p=p, d=dd, classification=cls)


def infinity_real_coeffs(r: float, theta: float) -> tuple[float, float, float, float, float]:
    """Real-coefficient quartic whose roots are the Moebius images
    i*(1 + w_k)/(1 - w_k) of the source-at-infinity reflection roots w_k.

    Expanding (z + i)^4 * p((z - i)/(z + i)) for the reflection quartic p and
    dividing by -2i gives

        r*sin(t)*z^4 + 2*(2r*cos(t) - 1)*z^3 - 6r*sin(t)*z^2
            - 2*(2r*cos(t) + 1)*z + r*sin(t) = 0.

    The leading coefficient vanishes for theta = 0 (mod pi), where the map
    degenerates.
    """
    r = ensure_real(r, "r")
    theta = ensure_real(theta, "theta")
    if r <= 1.0:
        raise InvalidObserver(f"observer radius must exceed 1, got {r}")
    st = math.sin(theta)
    ct = math.cos(theta)
    a = r * st
    b = 2.0 * (2.0 * r * ct - 1.0)
    c = -6.0 * r * st
    d = -2.0 * (2.0 * r * ct + 1.0)
    e = r * st
    return (a, b, c, d, e)
