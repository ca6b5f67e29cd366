"""Reproduce the thermal-vs-squeezed lifetime comparison figure.

Tabulates the separability functional delta against normalized time r for a
unit-squeezed system in (a) two thermal baths and (b) the same baths with one
mode squeezed at s_e = 0.5, writes the table to CSV, and renders a plot.

Requires matplotlib for the plot; the CSV alone needs only the library.
"""

import numpy as np

from squeezedbath import figure1_table, separation_time, write_figure1
from squeezedbath.sweep import figure1_scenarios

out_csv = "lifetime_comparison.csv"
out_png = "lifetime_comparison.png"

grid, delta_thermal, delta_squeezed = figure1_table(points=401)
write_figure1(out_csv, points=401)
print(f"wrote {grid.size} rows to {out_csv}")

thermal, squeezed = figure1_scenarios()
r_star_thermal = separation_time(thermal)
r_star_squeezed = separation_time(squeezed)
print(f"death time, thermal baths:        r* = {r_star_thermal:.6f}")
print(f"death time, one mode squeezed:    r* = {r_star_squeezed:.6f}")
print("the squeezed-bath state separates earlier: phase-sensitive noise "
      "shortens the entangled phase")

# the two curves start together at r=0 (environment not felt yet) and the
# squeezed one stays above until both meet again at full thermalization
assert delta_squeezed[0] == delta_thermal[0]
assert np.all(delta_squeezed >= delta_thermal - 1e-9)

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

fig, ax = plt.subplots(figsize=(7, 5))
ax.plot(grid, delta_thermal, "k--", label="thermal baths ($s_{e1}=s_{e2}=0$)")
ax.plot(grid, delta_squeezed, "b-", label="one squeezed mode ($s_{e1}=0.5$)")
ax.axhline(0.0, color="0.6", lw=0.8)
ax.axvline(r_star_thermal, color="k", ls=":", lw=0.8)
ax.axvline(r_star_squeezed, color="b", ls=":", lw=0.8)
ax.set_xlabel("normalized time $r$")
ax.set_ylabel(r"separability $\delta$")
ax.set_title(r"$s_c = 1$, $\bar n = 1$: entangled while $\delta < 0$")
ax.legend()
fig.tight_layout()
fig.savefig(out_png, dpi=150)
print(f"wrote {out_png}")
