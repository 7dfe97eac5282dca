"""
Hodge numbers of a moduli space
===============================

The bivariate recursion gives the full Hodge array.  Printed as a diamond
it shows the symmetries ``h^{p,q} = h^{q,p} = h^{N-p,N-q}``.
"""

from realmoduli import dim_moduli, hodge_biseries

g, r, d = 2, 2, 1
top = dim_moduli(g, r)
h = hodge_biseries(g, r, d)

width = 6 * (top + 1)
for total in range(2 * top + 1):
    row = [h.coeff(p, total - p) for p in range(total + 1) if p <= top and total - p <= top]
    print("".join(f"{c:6d}" for c in row).center(width))

# %%
# Evaluating at (-1, 1) gives the signature; at (1, 1) the total Betti number.
print("\nsignature:         ", h.evaluate(-1, 1))
print("total Betti number:", h.evaluate(1, 1))
