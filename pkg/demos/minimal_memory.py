"""Minimal memory sets.

A Game of Life triple padded with a far cell the rule never reads shrinks back
to the 9 Moore cells, and the minimal memory set is mapped onto itself by the
eight symmetries of the origin cell.
"""

from gsetca import builtin, minimize, step, useful_cells
from gsetca.automaton import BINARY, random_configurations
from gsetca.group import act, format_isometry, stabilizer
from gsetca.zoo import padded_game_of_life

padded = padded_game_of_life((5, 5))
print("padded memory:", list(padded.memory))
small = minimize(padded)
print("useful cells:", list(useful_cells(padded)))
agree = all(step(small, x) == step(padded, x) for x in random_configurations(BINARY, 50, seed=0))
print("minimized triple agrees on 50 random configurations:", agree)

m0 = set(small.memory)
u = builtin("game-of-life").universe
for s in stabilizer((0, 0), u):
    print(f"{format_isometry(s):>9} maps M0 onto itself: {set(act(s, b, u) for b in m0) == m0}")
