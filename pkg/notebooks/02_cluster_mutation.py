"""
Mutating surface seeds
======================
"""

#%%
from braidorder.cluster import mutate_sequence, positivity_audit, surface_preset

torus = surface_preset("torus-1")
print(torus.matrix.as_lists())

#%%
trace = mutate_sequence(torus, [1, 2, 3, 1])
for k, seed in zip((None,) + trace.directions, trace.seeds):
    print(k, seed.texts())

#%%
# evaluating at x = (1, 1, 1) gives Markov triples
from fractions import Fraction

def at_ones(p):
    return sum(Fraction(c) for _, c in p.items())

print([int(at_ones(v)) for v in trace.seeds[-1].variables])

#%%
for name in ("torus-1", "annulus-2"):
    report = positivity_audit(surface_preset(name), 4)
    print(name, report.explored, "seeds,", len(report.variables), "variables, passed:", report.passed)
