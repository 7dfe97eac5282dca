"""
Fewer real circles, fewer real Betti numbers
============================================

When the curve has ``n <= g`` real circles the real moduli space falls
short of the Smith--Thom bound.  The table shows the totals.
"""

from realmoduli import report

for g in (2, 3):
    for r in (2, 3):
        for n in range(1, g + 2):
            rep = report(g, n, r, 1, with_hodge_xy=False)
            print(
                f"g={g} r={r} n={n}  real={rep.total_betti_real:>10}  complex={rep.total_betti_complex:>10}"
                f"  fixed det: {rep.fixed_det_total_real:>7} / {rep.fixed_det_total_complex:<7}"
                f"  maximal={rep.maximal}"
            )
        print()
