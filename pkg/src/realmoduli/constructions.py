"""Closed-form data for classical real varieties and the rules that combine them.

Each constructor returns a :class:`VarietyData` carrying the Hodge polynomial
at ``(x, y) = (t, 1)`` and the mod 2 Poincaré polynomial of the real locus.
Torsion-freeness of integral cohomology is a declared attribute, propagated
through products, projective bundles and blow-ups; it is never computed.
Where the full Hodge array is known it is carried along as well, which gives
access to the complex Poincaré polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .series import BiSeries, UniSeries, eval_at, mul, pow_binom, specialize

__all__ = [
    "VarietyData",
    "gaussian_binomial",
    "point",
    "curve",
    "pic",
    "grassmannian",
    "projective_space",
    "combine_product",
    "proj_bundle",
    "blowup",
    "sym_power_curve",
    "harnack_double_cover",
    "surface_gallery",
    "GALLERY",
]


def _poly(coeffs) -> UniSeries:
    coeffs = list(coeffs) or [0]
    return UniSeries(tuple(coeffs))


def _pmul(a: UniSeries, b: UniSeries) -> UniSeries:
    cap = a.cap + b.cap
    return mul(UniSeries.from_poly(a.coeffs, cap), UniSeries.from_poly(b.coeffs, cap), cap)


def _padd(a: UniSeries, b: UniSeries) -> UniSeries:
    cap = max(a.cap, b.cap)
    return UniSeries.from_poly(a.coeffs, cap) + UniSeries.from_poly(b.coeffs, cap)


def _bimul(a: BiSeries, b: BiSeries) -> BiSeries:
    cap = a.cap + b.cap
    return mul(BiSeries.from_dict(dict(a.terms()), cap), BiSeries.from_dict(dict(b.terms()), cap), cap)


def _diamond(rows: dict, dim: int) -> BiSeries:
    return BiSeries.from_dict(rows, 2 * dim)


@dataclass(frozen=True)
class VarietyData:
    dim: int
    hodge_t1: UniSeries
    poincare_real: UniSeries
    torsion_free: bool = True
    label: str = ""
    hodge_xy: Optional[BiSeries] = field(default=None, compare=False)

    @property
    def hodge_expressive(self) -> bool:
        return self.torsion_free and self.hodge_t1.trimmed() == self.poincare_real.trimmed()

    @property
    def total_betti_complex(self) -> int:
        # sum of all Hodge numbers = H(1, 1)
        return eval_at(self.hodge_t1, 1)

    @property
    def total_betti_real(self) -> int:
        return eval_at(self.poincare_real, 1)

    @property
    def maximal(self) -> bool:
        return self.total_betti_real == self.total_betti_complex

    @property
    def euler_real(self) -> int:
        return eval_at(self.poincare_real, -1)

    @property
    def signature(self) -> int:
        # H(t, 1) at t = -1 is H(-1, 1)
        return eval_at(self.hodge_t1, -1)

    @property
    def chi_eq_sigma(self) -> bool:
        return self.euler_real == self.signature

    @property
    def poincare_complex(self) -> Optional[UniSeries]:
        if self.hodge_xy is None:
            return None
        return specialize(self.hodge_xy, "tt")


def gaussian_binomial(m: int, k: int) -> list:
    """Coefficients of the Gaussian binomial ``[m choose k]_t``.

    Uses ``[m, k] = [m-1, k-1] + t^k [m-1, k]``.
    """
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    # row[j] holds [i choose j] as a coefficient list
    row = [[1]]
    for i in range(1, m + 1):
        new = []
        for j in range(min(i, k) + 1):
            left = row[j - 1] if j >= 1 else []
            right = [0] * j + row[j] if j < len(row) else []
            size = max(len(left), len(right))
            new.append([(left[s] if s < len(left) else 0) + (right[s] if s < len(right) else 0) for s in range(size)])
        row = new
    return row[k]


def point() -> VarietyData:
    one = _poly([1])
    return VarietyData(0, one, one, True, "point", _diamond({(0, 0): 1}, 0))


def curve(g: int, n: int) -> VarietyData:
    """A real curve of genus ``g`` whose real locus has ``n`` circles."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if not 0 <= n <= g + 1:
        raise ValueError(f"n must satisfy 0 <= n <= g+1 (got n={n}, g={g})")
    hxy = _diamond({(0, 0): 1, (1, 0): g, (0, 1): g, (1, 1): 1}, 1)
    return VarietyData(1, _poly([g + 1, g + 1]), _poly([n, n]), True, f"curve(g={g}, n={n})", hxy)


def pic(g: int, n: int, d: int) -> VarietyData:
    """Picard variety ``Pic^d(C)`` of a real curve of genus ``g`` with ``n`` real circles.

    With no real points (``n = 0``) the real locus depends on parities: empty
    when ``g`` and ``d`` are both odd, ``2 (1+t)^g`` when ``g`` is odd and ``d``
    even, and ``(1+t)^g`` when ``g`` is even.
    """
    if g < 1:
        raise ValueError("genus must satisfy g >= 1")
    if not 0 <= n <= g + 1:
        raise ValueError(f"n must satisfy 0 <= n <= g+1 (got n={n}, g={g})")
    base = pow_binom(1, g, g)
    if n >= 1:
        real = base * 2 ** (n - 1)
    elif g % 2 == 1 and d % 2 == 1:
        real = base * 0
    elif g % 2 == 1:
        real = base * 2
    else:
        real = base
    hxy = _bimul(pow_binom((1, 0), g, g), pow_binom((0, 1), g, g))
    return VarietyData(g, base * 2**g, real, True, f"Pic^{d}(g={g}, n={n})", hxy)


def grassmannian(k: int, m: int) -> VarietyData:
    """Grassmannian of ``k``-planes in ``m``-space with its standard real structure."""
    coeffs = gaussian_binomial(m, k)
    poly = _poly(coeffs)
    dim = k * (m - k)
    hxy = _diamond({(i, i): c for i, c in enumerate(coeffs)}, dim)
    return VarietyData(dim, poly, poly, True, f"Gr({k}, {m})", hxy)


def projective_space(m: int) -> VarietyData:
    """``P^m`` with the standard conjugation."""
    v = grassmannian(1, m + 1)
    return replace(v, label=f"P^{m}")


def combine_product(a: VarietyData, b: VarietyData) -> VarietyData:
    hxy = None
    if a.hodge_xy is not None and b.hodge_xy is not None:
        hxy = _bimul(a.hodge_xy, b.hodge_xy)
    return VarietyData(
        a.dim + b.dim,
        _pmul(a.hodge_t1, b.hodge_t1),
        _pmul(a.poincare_real, b.poincare_real),
        a.torsion_free and b.torsion_free,
        f"{a.label} x {b.label}",
        hxy,
    )


def proj_bundle(base: VarietyData, rank: int) -> VarietyData:
    """Projectivization of a real rank ``rank`` vector bundle over ``base``.

    Both polynomials are multiplied by ``1 + t + ... + t^(rank-1)``.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    if not base.torsion_free:
        raise ValueError("projective bundle rule needs a torsion-free base")
    fiber = _poly([1] * rank)
    hxy = None
    if base.hodge_xy is not None:
        hxy = _bimul(base.hodge_xy, _diamond({(i, i): 1 for i in range(rank)}, rank - 1))
    return VarietyData(
        base.dim + rank - 1,
        _pmul(base.hodge_t1, fiber),
        _pmul(base.poincare_real, fiber),
        True,
        f"P(E_{rank}) over {base.label}",
        hxy,
    )


def blowup(x: VarietyData, y: VarietyData, codim: int) -> VarietyData:
    """Blow up ``x`` along a smooth real subvariety ``y`` of codimension ``codim``."""
    if codim < 2:
        raise ValueError("blow-up centre must have codimension at least 2")
    if y.dim + codim != x.dim:
        raise ValueError(f"dimension mismatch: dim Y + codim = {y.dim + codim} but dim X = {x.dim}")
    ring = _poly([0] + [1] * (codim - 1))
    hxy = None
    if x.hodge_xy is not None and y.hodge_xy is not None:
        extra = _bimul(y.hodge_xy, _diamond({(i, i): 1 for i in range(1, codim)}, codim - 1))
        cap = max(x.hodge_xy.cap, extra.cap)
        hxy = BiSeries.from_dict(dict(x.hodge_xy.terms()), cap) + BiSeries.from_dict(dict(extra.terms()), cap)
    return VarietyData(
        x.dim,
        _padd(x.hodge_t1, _pmul(ring, y.hodge_t1)),
        _padd(x.poincare_real, _pmul(ring, y.poincare_real)),
        x.torsion_free and y.torsion_free,
        f"Bl_{{{y.label}}} {x.label}",
        hxy,
    )


def sym_power_curve(g: int, n: int, k: int) -> VarietyData:
    """``k``-th symmetric power of a real curve, for ``k >= 2g - 1``.

    In that range it is a projective bundle of rank ``k - g + 1`` over the
    Picard variety.  Smaller ``k`` is rejected.
    """
    if k < 2 * g - 1:
        raise ValueError(f"symmetric powers are only modelled for k >= 2g-1 = {2 * g - 1}")
    if not 1 <= n <= g + 1:
        raise ValueError(f"n must satisfy 1 <= n <= g+1 (got n={n}, g={g})")
    v = proj_bundle(pic(g, n, k), k - g + 1)
    return replace(v, label=f"C^[{k}](g={g}, n={n})")


def harnack_double_cover(k: int) -> VarietyData:
    """Double plane ``w^2 = P(x, y, z)`` branched along a Harnack curve of degree ``2k``."""
    if k < 1:
        raise ValueError("k must be positive")
    outer = (k - 1) * (k - 2) // 2
    mid = 3 * k * (k - 1) + 2
    poly = _poly([outer + 1, mid, outer + 1])
    hxy = _diamond({(0, 0): 1, (2, 0): outer, (1, 1): mid, (0, 2): outer, (2, 2): 1}, 2)
    return VarietyData(2, poly, poly, True, f"Harnack double cover (k={k})", hxy)


_ABELIAN = {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (1, 1): 4, (0, 2): 1, (2, 1): 2, (1, 2): 2, (2, 2): 1}
_K3 = {(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1, (2, 2): 1}


def _spheres_plus(spheres: int, genus: int) -> list:
    # P_t of (spheres) S^2 plus one orientable surface of the given genus
    return [spheres + 1, 2 * genus, spheres + 1]


GALLERY = {
    # real locus: four disjoint tori
    "abelian_maximal": (_ABELIAN, [4, 8, 4]),
    # the three maximal K3 topological types
    "k3_expressive": (_K3, _spheres_plus(1, 10)),
    "k3_maximal_5spheres": (_K3, _spheres_plus(5, 6)),
    "k3_maximal_9spheres": (_K3, _spheres_plus(9, 2)),
}


def surface_gallery(name: str) -> VarietyData:
    """Tabulated maximal abelian and K3 surfaces."""
    try:
        diamond, real = GALLERY[name]
    except KeyError:
        raise ValueError(f"unknown gallery surface {name!r}; choose from {sorted(GALLERY)}") from None
    hxy = _diamond(diamond, 2)
    return VarietyData(2, specialize(hxy, "t1").truncate(2), _poly(real), True, name, hxy)
