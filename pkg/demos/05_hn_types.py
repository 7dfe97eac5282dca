"""
Harder--Narasimhan types of bounded codimension
===============================================

The unstable strata are indexed by sequences of blocks with decreasing
slopes.  Bounding the codimension leaves finitely many.
"""

from collections import Counter

from realmoduli.hntypes import types_with_codim

for mu, c in types_with_codim(3, 1, 2, 8):
    print(f"codim {c:2d}  {mu.blocks}")

# %%
# How the count grows with the codimension bound.
for cap in (5, 10, 20, 40):
    hist = Counter(len(mu) for mu, _ in types_with_codim(4, 1, 3, cap))
    print(f"cap={cap:3d}  types by length: {dict(sorted(hist.items()))}")
