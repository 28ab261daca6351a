"""A glider in the Game of Life returns to its shape after four steps, one cell diagonally over."""

from gsetca import Configuration, builtin, run, step
from gsetca.automaton import Window
from gsetca.io import render_text

gol = builtin("game-of-life")
x = Configuration.of("0", [(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)])
window = Window((-1, -1), (4, 4))

for k in range(5):
    print(f"step {k}")
    print(render_text(x, gol.states, window))
    x = step(gol, x)

start = Configuration.of("0", [(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)])
moved = Configuration.of("0", [(a + 1, b + 1) for a, b in start.support])
print("after 4 steps == start moved by (1,1):", run(gol, start, 4) == moved)
