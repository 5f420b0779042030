"""Reflection inside the circular mirror, step by step.

A light signal leaves z1, bounces off the unit-circle mirror, and reaches z2.
The bounce point is a root of a quartic; among its on-circle roots the
physical one minimizes the focal sum |z1 - w| + |z2 - w|. That minimal sum
also gives the triangular ratio metric of the pair and the maximal inscribed
ellipse with foci z1, z2.
"""

import cmath
from pathlib import Path

from catoptrix import (
    ellipse_params,
    interior_quartic_coeffs,
    minimizing_root,
    s_metric,
)
from catoptrix.svg import interior_figure

OUT = Path(__file__).parent / "output"

z1 = 0.4 + 0.0j
z2 = 0.3j

print(f"source   z1 = {z1}")
print(f"observer z2 = {z2}")

q = interior_quartic_coeffs(z1, z2)
print("\nreflection quartic c4 w^4 + c3 w^3 + c2 w^2 + c1 w + c0 with")
for name, c in zip(("c4", "c3", "c2", "c1", "c0"), q.as_tuple()):
    print(f"  {name} = {c}")

res = minimizing_root(z1, z2)
print("\nall four roots (sorted by argument) and whether they sit on the circle:")
for w, on_circle, resid in zip(res.candidates.roots, res.on_circle_mask, res.candidates.residuals):
    marker = "on circle " if on_circle else "off circle"
    print(f"  w = {w:+.12f}   {marker}   |p(w)| = {resid:.2e}")

print(f"\nminimizing root  w = {res.w:.12f}  (arg w = {cmath.phase(res.w):.12f})")
print(f"focal sum        |z1-w| + |z2-w| = {res.focal_sum:.12f}")
print(f"metric           s(z1, z2) = {res.s_value:.12f}")
print(f"reflection law   |Im((z1-w)(z2-w)/w^2)| = {res.reflection_residual:.2e}")

ep = ellipse_params(z1, z2)
print("\nmaximal inscribed ellipse with foci z1, z2:")
print(f"  semi-major = {ep.major:.12f}, semi-minor = {ep.minor:.12f}")
print(f"  eccentricity = {ep.eccentricity:.12f}  (equals the metric)")

# two families with closed forms: diametral pairs and pairs through the origin
print("\nclosed forms:")
for t in (0.25, 0.5, 0.75):
    print(f"  s({t}, {-t}) = {s_metric(t, -t):.12f}   (= t: contact at +-1)")
for x in (0.25, 0.5, 0.75):
    print(f"  s(0, {x})  = {s_metric(0, x):.12f}   (= x/(2-x): contact at 1)")

OUT.mkdir(exist_ok=True)
path = OUT / "interior_reflection.svg"
path.write_text(interior_figure(z1, z2, res, ep))
print(f"\nfigure written to {path}")
