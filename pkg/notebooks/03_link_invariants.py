"""
Invariants of braid closures
============================
"""

#%%
from braidorder import BraidWord
from braidorder.invariants import braid_closure, homfly, homfly_to_jones, jones, stabilize, writhe
from braidorder.laurent import canonical_text

knots = {
    "unknot": BraidWord(2, (1,)),
    "hopf": BraidWord(2, (1, 1)),
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
}
for name, b in knots.items():
    d = braid_closure(b)
    print(f"{name:13s} w={writhe(d):+d} V={canonical_text(jones(b).poly)}  P={canonical_text(homfly(b).poly)}")

#%%
# the Markov moves do not change anything
b = knots["figure-eight"]
print(jones(stabilize(b)) == jones(b), homfly(stabilize(b, -1)) == homfly(b))

#%%
# HOMFLY specializes to Jones
print(all(homfly_to_jones(homfly(b).poly) == jones(b).poly for b in knots.values()))
