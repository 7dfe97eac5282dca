"""
Real moduli of bundles over a maximal curve
===========================================

Over a curve with the maximal number ``g + 1`` of real circles, the mod 2
Betti numbers of the real moduli space equal the Hodge numbers of the
complex one summed along columns.  We check this on a small grid.
"""

from realmoduli import report

# %%
# One cell in detail: rank 2, degree 1, genus 2.
rep = report(2, 3, 2, 1)
print("complex Poincaré polynomial:", rep.poincare_complex.trimmed())
print("Hodge polynomial at (t, 1):  ", rep.hodge_t1.trimmed())
print("real Poincaré polynomial:    ", rep.poincare_real.trimmed())
print("expressive:", rep.hodge_expressive, " maximal:", rep.maximal)

# %%
# The same identity across ranks 2 to 4 in genus 2 and 3.
for g in (2, 3):
    for r in (2, 3, 4):
        rep = report(g, g + 1, r, 1, with_hodge_xy=False)
        print(f"g={g} r={r}  dim={rep.dim_complex:3d}  total Betti={rep.total_betti_complex:>12}  expressive={rep.hodge_expressive}")

# %%
# Fixing the determinant divides out the Picard factor on both sides.
rep = report(3, 4, 3, 1, with_hodge_xy=False)
print("fixed determinant, Hodge:", rep.fixed_det_hodge_t1.trimmed())
print("fixed determinant, real: ", rep.fixed_det_real.trimmed())
