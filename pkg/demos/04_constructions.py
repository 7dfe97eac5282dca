"""
Expressive and non-expressive classical varieties
=================================================

Grassmannians, Picard varieties, symmetric powers of curves, double planes
and a few tabulated surfaces, each with its verdict.
"""

from realmoduli.constructions import (
    GALLERY,
    blowup,
    combine_product,
    curve,
    grassmannian,
    harnack_double_cover,
    pic,
    point,
    sym_power_curve,
    surface_gallery,
)


def show(v):
    print(f"{v.label:<40} H(t,1)={v.hodge_t1.trimmed()!s:<22} P(real)={v.poincare_real.trimmed()!s:<22}"
          f" expressive={v.hodge_expressive!s:<5} maximal={v.maximal}")


show(grassmannian(2, 4))
show(grassmannian(3, 6))
show(pic(2, 3, 0))
show(pic(2, 1, 0))
show(pic(1, 0, 0))
show(sym_power_curve(2, 3, 3))
show(sym_power_curve(2, 2, 3))
for k in (1, 2, 3, 4):
    show(harnack_double_cover(k))
for name in sorted(GALLERY):
    show(surface_gallery(name))

# %%
# The rules compose.
show(combine_product(pic(2, 3, 0), grassmannian(1, 2)))
show(blowup(harnack_double_cover(2), point(), 2))
show(blowup(grassmannian(1, 4), curve(1, 2), 2))
