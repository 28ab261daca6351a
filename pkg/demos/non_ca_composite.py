"""Composing an automaton with itself need not give an automaton.

The state shift of the quadrant-rotation example reads the cell above, in the
frame of each cell's coordinate.  Its square moves states in a way no single
memory set and rule can describe: the candidate triple built by the composition
construction disagrees with tau o tau.
"""

from gsetca import Configuration, builtin, compose_triples, step, verify_composition

tau = builtin("state-shift-d")
candidate = compose_triples(tau, tau)
print("candidate memory:", list(candidate.memory))

x = Configuration.of("0", [(1, 2)])
print("tau(tau(x)) at (1,0):", step(tau, step(tau, x))[(1, 0)])
print("candidate(x) at (1,0):", step(candidate, x)[(1, 0)], "(it reads", candidate.read_cells((1, 0)), ")")
print(verify_composition(tau, tau, candidate, trials=100, seed=0).to_text())
