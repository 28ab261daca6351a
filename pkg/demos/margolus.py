"""The Margolus billiard ball automaton as the composition of two block rules.

tau0 acts on the 2x2 blocks with even corners, tau1 on the staggered blocks.
Both are involutions.  Their composition tau1 o tau0 is again a cellular
automaton; compose_triples builds its triple (16 memory cells) and a seeded
random check confirms it.  The reverse composition undoes it.
"""

from gsetca import Configuration, builtin, compose_triples, step, verify_composition, verify_inverse

t0, t1 = builtin("margolus-tau0"), builtin("margolus-tau1")
print("single cell at (0,0) under tau0:", sorted(step(t0, Configuration.of("0", [(0, 0)])).support))

billiard = compose_triples(t1, t0)
print("composed memory size:", len(billiard.memory))
print(verify_composition(t1, t0, billiard, trials=100, seed=0).to_text())
print(verify_inverse(billiard, compose_triples(t0, t1), trials=100, seed=1).to_text())

# two live cells on a block diagonal split into two balls flying apart
x = Configuration.of("0", [(0, 0), (1, 1)])
for k in range(4):
    print(f"step {k}: {sorted(x.support)}")
    x = step(billiard, x)
