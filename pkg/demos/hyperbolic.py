"""The Game of Life rule on a patch of the {8,3} tiling by regular octagons.

Writes hyperbolic.svg (the Poincare disk) next to this script.
"""

from pathlib import Path

from gsetca.hyperbolic import build_patch, hyp_gol_step, render_svg

patch = build_patch(4)
print("cells per ring:", patch.layer_counts(), "total", len(patch))
print("neighbors of the centre:", patch.neighbors(0))

# three octagons around one vertex each see a sum of 3, so they form a still life
a = patch.neighbors(0)[0]
b = next(n for n in patch.neighbors(0) if n in patch.neighbors(a))
alive = {0, a, b}
for k in range(4):
    print(f"step {k}: {sorted(alive)}")
    alive = hyp_gol_step(patch, alive)

out = Path(__file__).with_name("hyperbolic.svg")
out.write_text(render_svg(patch, {0, a, b}), encoding="utf-8")
print("wrote", out.name)
