"""Fairy Lights: each lattice point swaps its state with the point above or below it.

Even points (a+b even) read upward and odd points read downward, so applying the
automaton twice gives back the starting configuration.  The coordinate of an odd
point is a half turn rather than a translation, which is what makes the swap possible.
"""

from gsetca import builtin, coordinate, run, step
from gsetca.automaton import BINARY, Window, random_configurations
from gsetca.io import render_text

fl = builtin("fairy-lights")
for cell in [(2, 4), (1, 0)]:
    print(f"coordinate of {cell}: {coordinate(fl.coordsys, cell)}")

x = random_configurations(BINARY, 1, seed=1, radius=4)[0]
w = Window((-5, -5), (5, 5))
print("x")
print(render_text(x, fl.states, w))
print("tau(x)")
print(render_text(step(fl, x), fl.states, w))
print("tau(tau(x)) == x:", run(fl, x, 2) == x)
