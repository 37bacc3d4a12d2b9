"""Plot the opacity families: gamma-style constants, the tuned quadratic
power curve, and its affine shortcut.

Run: python3 demos/opacity_curves.py  (writes opacity_curves.png)
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from lumablend import BezierPolynomial, PowerOpacity, DEFAULT_AFFINE, DEFAULT_POWER, opacity

s = np.linspace(0.0, 1.0, 400)

fig, axes = plt.subplots(1, 2, figsize=(10, 4))

# Constant exponents are plain gamma curves.
for exponent in (0.25, 0.5, 1.0, 2.0):
    model = PowerOpacity(BezierPolynomial((exponent,)))
    axes[0].plot(s, [opacity(model, float(t)) for t in s], label=f"s^{exponent}")
axes[0].set_title("constant exponents")
axes[0].legend()

# The tuned quadratic exponent against its affine shortcut: nearly straight
# except near s=0, where the power form dives to zero as it must.
axes[1].plot(s, [opacity(DEFAULT_POWER, float(t)) for t in s], label="quadratic power")
axes[1].plot(s, [opacity(DEFAULT_AFFINE, float(t)) for t in s], "--", label="affine 0.4s+0.6")
axes[1].set_title("tuned model vs affine shortcut")
axes[1].legend()

for ax in axes:
    ax.set_xlabel("relative size s")
    ax.set_ylabel("opacity y")

fig.tight_layout()
fig.savefig("opacity_curves.png", dpi=120)
print("wrote opacity_curves.png")
