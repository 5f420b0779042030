"""Reflection of a plane wave (source at infinity) off the circular mirror.

Parallel rays arrive from the +x direction. For an observer at r*e^{i*theta}
the reflection point solves r*e^{-i*theta} w^4 - w^3 + w - r*e^{i*theta} = 0,
and remarkably all four roots land on the unit circle. The physical root is
picked by Fermat's principle: it minimizes |f - w| - Re w over the lit,
unobstructed candidates.
"""

import math
from pathlib import Path

from catoptrix import (
    ObserverPolar,
    infinity_quartic_coeffs,
    infinity_reflection,
    infinity_real_coeffs,
    real_quartic_invariants,
    verify_circle_theorem,
)
from catoptrix.svg import infinity_figure

OUT = Path(__file__).parent / "output"

obs = ObserverPolar(2.0, math.pi / 4)
print(f"observer f = {obs.point:.6f}  (r = {obs.r}, theta = {obs.theta:.6f})")

q = infinity_quartic_coeffs(obs)
print(f"\nquartic coefficients: c4 = {q.c4:.6f}, c3 = {q.c3}, c1 = {q.c1}, c0 = {q.c0:.6f}")

res = infinity_reflection(obs)
print("\nfour roots, all on the unit circle:")
for w in res.all_roots.roots:
    print(f"  w = {w:+.12f}   | |w| - 1 | = {abs(abs(w) - 1.0):.2e}")

print(f"\nselected root  w = {res.w:.12f}  (phi = {res.phi:.12f})")
print(f"path defect    |f - w| - Re w = {res.path_defect:.12f}")
print(f"reality check  |Im((f - w)/w^2)| = {res.reality_residual:.2e}")

print("\ntwo-route proof that the roots are on the circle:")
a, b, c, d, e = infinity_real_coeffs(obs.r, obs.theta)
print(f"  image quartic (real coefficients): a={a:.6f} b={b:.6f} c={c:.6f} d={d:.6f} e={e:.6f}")
nat = real_quartic_invariants(a, b, c, d, e)
print(f"  delta = {nat.delta:.6g} > 0, P = {nat.p:.6g} < 0, D = {nat.d:.6g} < 0")
print(f"  -> {nat.classification.value}: all Moebius images i(1+w)/(1-w) are real:")
for z in res.mobius_images:
    print(f"     {z:+.12f}")
print(f"  verify_circle_theorem: {verify_circle_theorem(obs)}")

print("\nthe on-axis observer is degenerate (the ray arrives straight overhead):")
axial = infinity_reflection(ObserverPolar(2.0, 0.0))
print(f"  theta = 0 -> w = {axial.w}, degenerate_axis = {axial.degenerate_axis}")

print("\nnegative angles mirror positive ones:")
minus = infinity_reflection(ObserverPolar(2.0, -math.pi / 4))
print(f"  w(-theta) = {minus.w:.12f} = conj(w(theta)): deviation {abs(minus.w - res.w.conjugate()):.2e}")

OUT.mkdir(exist_ok=True)
path = OUT / "plane_wave_reflection.svg"
path.write_text(infinity_figure(obs, res))
print(f"\nfigure written to {path}")
