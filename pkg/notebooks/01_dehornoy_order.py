"""
Ordering braids
===============

Handle reduction decides the sign of a braid; the lamination action gives
the same answer by a completely different route.
"""

#%%
import random

from braidorder import BraidWord, dehornoy_compare, dehornoy_sign, handle_reduce, lamination_sign

b = BraidWord(3, (-1, 2, 1))
print(b.text(), "->", handle_reduce(b).text())
print(dehornoy_sign(b))

#%%
# sigma_2 sits below sigma_1, and both sit above the identity
s1, s2, e = BraidWord(3, (1,)), BraidWord(3, (2,)), BraidWord(3, ())
print(dehornoy_compare(s2, s1), dehornoy_compare(e, s2))

#%%
# sort a handful of random braids and check the lamination oracle on each
rng = random.Random(0)
words = [BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(6))) for _ in range(8)]
for w in words:
    assert lamination_sign(w).verdict is dehornoy_sign(w).verdict
print(sum(dehornoy_sign(w).verdict.value == "Positive" for w in words), "of", len(words), "positive")
