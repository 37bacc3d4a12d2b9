"""Render the six-panel comparison at one relative size.

Top row: the uniform control band (same gray everywhere) over white, 10-band,
and continuous backgrounds.  Bottom row: the corrected band, whose actual
pixel values vary with the background so that it *looks* uniform.

Run: python3 demos/six_panel.py  (writes six_panel.png)
"""

from lumablend import DEFAULT_POWER, montage, panel_grid
from lumablend.raster import write_png

panels = panel_grid(s=0.10, l_p=0.5, model=DEFAULT_POWER, width=450, height=300)
for label, mode, _ in panels:
    print(f"panel: {label} / {mode.value}")

write_png("six_panel.png", montage([img for _, _, img in panels]))
print("wrote six_panel.png")
