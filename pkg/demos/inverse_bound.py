"""Why the affine family is the practical one for inversion.

Recovering the foreground's target luminance from an observed value divides
by the opacity.  The power family's opacity vanishes at s=0, so the inverse
blows up; the affine family keeps it bounded by 1/a0.

Run: python3 demos/inverse_bound.py
"""

from lumablend import (
    DEFAULT_AFFINE,
    DEFAULT_POWER,
    SingularOpacityError,
    inverse_range_bound,
    invert,
    opacity,
)

l_o, i_a = 0.2, 0.8
print(f"observed luminance {l_o}, average illumination {i_a}\n")
print(f"{'s':>8}  {'power y':>10}  {'power inverse':>14}  {'affine y':>9}  {'affine inverse':>14}")
for k in range(1, 9):
    s = 10.0**-k
    yp = opacity(DEFAULT_POWER, s)
    ya = opacity(DEFAULT_AFFINE, s)
    try:
        ip = f"{invert(l_o, i_a, yp, epsilon=1e-4):14.3f}"
    except SingularOpacityError:
        ip = f"{'(singular)':>14}"
    print(f"{s:8.0e}  {yp:10.5f}  {ip}  {ya:9.5f}  {invert(l_o, i_a, ya):14.3f}")

print(f"\naffine amplification is bounded by 1/min(a0,a1) = "
      f"{inverse_range_bound(DEFAULT_AFFINE):.4f}")
