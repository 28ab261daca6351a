"""A state shift whose rule is not invariant under its obstruction set.

For the wedge coordinate system, the finite set S of stabilizer elements that
can arise from pairs of coordinates contains a quarter turn about the centre
of the origin cell.  The one-cell rule is not invariant under it, so the
automaton commutes with no transitive group of isometries.  It is still
reversible: the paired shift undoes it.
"""

from gsetca import builtin, equivariance_check, s_set, verify_inverse
from gsetca.group import format_isometry

tau = builtin("state-shift-44")
print("S up to radius 2:", sorted(format_isometry(s) for s in s_set(tau, 2)))
print(equivariance_check(tau, 2).to_text())
print(verify_inverse(tau, builtin("state-shift-44-inverse"), trials=100, seed=0).to_text())

print()
print("For comparison, the Game of Life:")
print(equivariance_check(builtin("game-of-life"), 2).to_text())
