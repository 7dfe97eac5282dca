"""Poincaré and Hodge polynomials of moduli of vector bundles on a curve.

Four recursions over Harder--Narasimhan types share one shape::

    Q(r, d) = head(r) - sum_{mu != ss} u^{codim(mu)} / (1 - u)^(l(mu) - 1) * prod_i Q(r_i, d_i)

with the formal variable ``u`` equal to

* ``t^2`` for the complex Poincaré series (:func:`q_complex`),
* ``xy`` for the Hodge series (:func:`hodge_biseries`),
* ``t`` for the ``(x, y) = (t, 1)`` specialization (:func:`hodge_t1`),
* ``t`` for the mod 2 Poincaré series of the real locus (:func:`q_real`).

``head(r)`` is ``(1 - u)`` times the Poincaré (or Hodge) series of the whole
moduli stack.  All series are truncated; only HN types whose shifted term
reaches below the cap are summed, and each product is formed at the reduced
cap ``cap - deg(u^codim)``.  Sub-results are memoized by ``(r, d, cap)``;
with ``normalize=True`` the degree is first reduced mod ``r``, which is valid
because tensoring by a line bundle shifts every block degree and leaves all
codimensions unchanged.

For coprime ``(r, d)`` the series are the polynomials of the smooth
projective moduli space ``M(r, d)`` of complex dimension ``r^2 (g-1) + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional

from .hntypes import CurveData, types_with_codim
from .series import (
    BiSeries,
    NotPolynomialError,
    UniSeries,
    eval_at,
    exact_quotient,
    geom_factor,
    mul,
    palindrome_check,
    pow_binom,
    specialize,
)

__all__ = [
    "InvariantError",
    "ModuliReport",
    "dim_moduli",
    "dim_fixed_det",
    "stack_series_complex",
    "stack_series_real",
    "stack_series_hodge",
    "q_complex",
    "hodge_biseries",
    "hodge_t1",
    "q_real",
    "fixed_det",
    "report",
    "clear_caches",
]


class InvariantError(RuntimeError):
    """A computed polynomial violates a property it must satisfy (duality, Smith--Thom, ...)."""


def dim_moduli(g: int, r: int) -> int:
    """Complex dimension of ``M(r, d)`` for coprime ``(r, d)``."""
    return r * r * (g - 1) + 1


def dim_fixed_det(g: int, r: int) -> int:
    """Complex dimension of the fixed-determinant space ``M(r, L)``."""
    return (r * r - 1) * (g - 1)


def _check_genus(g: int) -> None:
    if g < 1:
        raise ValueError("genus must satisfy g >= 1")


def _check_rank(r: int) -> None:
    if r < 1:
        raise ValueError("rank must satisfy r >= 1")


def _genus_one_guard(g: int, r: int, d: int) -> None:
    if g == 1 and gcd(r, d) != 1:
        raise ValueError("genus 1 is only supported for coprime (r, d)")


def _default_cap(g: int, r: int, d: int, cap, complex_degree: bool) -> int:
    if cap is not None:
        if cap < 0:
            raise ValueError("cap must be non-negative")
        return cap
    if gcd(r, d) != 1:
        raise ValueError("an explicit cap is required when gcd(r, d) > 1")
    n = dim_moduli(g, r)
    return 2 * n + 2 if complex_degree else n + 2


def _deg_key(r: int, d: int, normalize: bool) -> int:
    return d % r if normalize else d


# -- stack series -----------------------------------------------------------


def stack_series_complex(g: int, r: int, cap: int) -> UniSeries:
    """Poincaré series of the stack of all rank ``r`` bundles (independent of the degree)."""
    _check_genus(g)
    _check_rank(r)
    s = geom_factor(pow_binom(1, 2 * g, cap), 2, -1)
    for i in range(2, r + 1):
        s = mul(s, pow_binom(2 * i - 1, 2 * g, cap))
        s = geom_factor(geom_factor(s, 2 * i - 2, -1), 2 * i, -1)
    return s


def stack_series_real(g: int, n: int, r: int, cap: int) -> UniSeries:
    """Mod 2 Poincaré series of the real locus of the stack of rank ``r`` bundles.

    ``n`` is the number of real circles of the curve; the locus has
    ``2^(n-1)`` components, hence the leading factor.
    """
    _check_genus(g)
    _check_rank(r)
    CurveData(g, n).check_real()
    s = geom_factor(pow_binom(1, g, cap) * 2 ** (n - 1), 1, -1)
    for i in range(2, r + 1):
        s = mul(s, pow_binom(2 * i - 1, g + 1 - n, cap))
        s = mul(s, pow_binom(i - 1, n - 1, cap))
        s = mul(s, pow_binom(i, n - 1, cap))
        s = geom_factor(geom_factor(s, i - 1, -1), i, -1)
    return s


def stack_series_hodge(g: int, r: int, cap: int) -> BiSeries:
    """Hodge series ``G(x, y)`` of the stack of rank ``r`` bundles."""
    _check_genus(g)
    _check_rank(r)
    s = mul(pow_binom((1, 0), g, cap), pow_binom((0, 1), g, cap))
    s = geom_factor(s, (1, 1), -1)
    for i in range(2, r + 1):
        s = mul(s, pow_binom((i - 1, i), g, cap))
        s = mul(s, pow_binom((i, i - 1), g, cap))
        s = geom_factor(geom_factor(s, (i - 1, i - 1), -1), (i, i), -1)
    return s


def _head_t1(g: int, r: int, cap: int) -> UniSeries:
    # (1 - xy) G(x, y) at x = t, y = 1
    s = pow_binom(1, g, cap) * 2**g
    for i in range(2, r + 1):
        s = mul(s, pow_binom(i - 1, g, cap))
        s = mul(s, pow_binom(i, g, cap))
        s = geom_factor(geom_factor(s, i - 1, -1), i, -1)
    return s


# -- recursions -------------------------------------------------------------


def _subtract_strata_uni(head, r, d, g, cap, step, sub):
    """``head - sum_mu t^(step*codim) / (1 - t^step)^(l-1) * prod sub(r_i, d_i)``."""
    out = list(head.coeffs)
    for mu, c in types_with_codim(r, d, g, cap // step):
        shift = step * c
        room = cap - shift
        term = UniSeries.one(room)
        for ri, di in mu:
            term = mul(term, sub(ri, di).truncate(room))
        term = geom_factor(term, step, -(len(mu) - 1))
        for i, v in enumerate(term.coeffs):
            out[i + shift] -= v
    return UniSeries(tuple(out))


@lru_cache(maxsize=None)
def _q_complex(g: int, r: int, d: int, cap: int, normalize: bool) -> UniSeries:
    if r == 1:
        return pow_binom(1, 2 * g, cap)
    head = geom_factor(stack_series_complex(g, r, cap), 2, 1)
    return _subtract_strata_uni(
        head, r, d, g, cap, 2,
        lambda ri, di: _q_complex(g, ri, _deg_key(ri, di, normalize), cap, normalize),
    )


@lru_cache(maxsize=None)
def _hodge_t1(g: int, r: int, d: int, cap: int, normalize: bool) -> UniSeries:
    if r == 1:
        return pow_binom(1, g, cap) * 2**g
    return _subtract_strata_uni(
        _head_t1(g, r, cap), r, d, g, cap, 1,
        lambda ri, di: _hodge_t1(g, ri, _deg_key(ri, di, normalize), cap, normalize),
    )


@lru_cache(maxsize=None)
def _q_real(g: int, n: int, r: int, d: int, cap: int, normalize: bool) -> UniSeries:
    if r == 1:
        return pow_binom(1, g, cap) * 2 ** (n - 1)
    head = geom_factor(stack_series_real(g, n, r, cap), 1, 1)
    return _subtract_strata_uni(
        head, r, d, g, cap, 1,
        lambda ri, di: _q_real(g, n, ri, _deg_key(ri, di, normalize), cap, normalize),
    )


@lru_cache(maxsize=None)
def _hodge_xy(g: int, r: int, d: int, cap: int, normalize: bool) -> BiSeries:
    if r == 1:
        return mul(pow_binom((1, 0), g, cap), pow_binom((0, 1), g, cap))
    out = [list(row) for row in geom_factor(stack_series_hodge(g, r, cap), (1, 1), 1).coeffs]
    for mu, c in types_with_codim(r, d, g, cap // 2):
        room = cap - 2 * c
        term = BiSeries.one(room)
        for ri, di in mu:
            term = mul(term, _hodge_xy(g, ri, _deg_key(ri, di, normalize), cap, normalize).truncate(room))
        term = geom_factor(term, (1, 1), -(len(mu) - 1))
        for i, row in enumerate(term.coeffs):
            dst = out[i + c]
            for j, v in enumerate(row):
                dst[j + c] -= v
    return BiSeries(tuple(map(tuple, out)))


def q_complex(g: int, r: int, d: int, cap: int | None = None, *, normalize: bool = False) -> UniSeries:
    """``(1 - t^2)`` times the Poincaré series of the semistable stack.

    For coprime ``(r, d)`` this is the Poincaré polynomial of ``M(r, d)``.
    The default cap is ``2N + 2`` with ``N`` the complex dimension.
    """
    _check_genus(g)
    _check_rank(r)
    _genus_one_guard(g, r, d)
    cap = _default_cap(g, r, d, cap, True)
    if g == 1:
        return UniSeries.from_poly((1, 2, 1), cap)
    return _q_complex(g, r, _deg_key(r, d, normalize), cap, normalize)


def hodge_biseries(g: int, r: int, d: int, cap: int | None = None, *, normalize: bool = False) -> BiSeries:
    """Bivariate analogue of :func:`q_complex`; the Hodge polynomial of ``M(r, d)`` when coprime."""
    _check_genus(g)
    _check_rank(r)
    _genus_one_guard(g, r, d)
    cap = _default_cap(g, r, d, cap, True)
    if g == 1:
        return BiSeries.from_dict({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}, cap)
    return _hodge_xy(g, r, _deg_key(r, d, normalize), cap, normalize)


def hodge_t1(g: int, r: int, d: int, cap: int | None = None, *, normalize: bool = False) -> UniSeries:
    """The Hodge series at ``(x, y) = (t, 1)``, computed by its own one-variable recursion.

    The head term is ``(1 - xy) G(x, y)`` at ``x = t, y = 1``, i.e.
    ``2^g (1+t)^g prod_{i=2}^r (1+t^(i-1))^g (1+t^i)^g / ((1-t^(i-1))(1-t^i))``.
    """
    _check_genus(g)
    _check_rank(r)
    _genus_one_guard(g, r, d)
    cap = _default_cap(g, r, d, cap, False)
    if g == 1:
        return UniSeries.from_poly((2, 2), cap)
    return _hodge_t1(g, r, _deg_key(r, d, normalize), cap, normalize)


def q_real(g: int, n: int, r: int, d: int, cap: int | None = None, *, normalize: bool = False) -> UniSeries:
    """``(1 - t)`` times the mod 2 Poincaré series of the real semistable stack.

    For coprime ``(r, d)`` this is the mod 2 Poincaré polynomial of the real
    locus of ``M(r, d)`` over a curve with ``n`` real circles.  In genus 1 the
    moduli space is the curve itself and ``n (1 + t)`` is returned.
    """
    _check_genus(g)
    _check_rank(r)
    CurveData(g, n).check_real()
    _genus_one_guard(g, r, d)
    cap = _default_cap(g, r, d, cap, False)
    if g == 1:
        return UniSeries.from_poly((n, n), cap)
    return _q_real(g, n, r, _deg_key(r, d, normalize), cap, normalize)


def _divide_fixed_det(g: int, n: int, ht: UniSeries, qr: UniSeries) -> tuple:
    pic_hodge = pow_binom(1, g, ht.cap) * 2**g
    pic_real = pow_binom(1, g, qr.cap) * 2 ** (n - 1)
    return exact_quotient(ht, pic_hodge), exact_quotient(qr, pic_real)


def fixed_det(g: int, n: int, r: int, d: int, cap: int | None = None, *, normalize: bool = False) -> tuple:
    """Polynomials of the fixed-determinant space ``M(r, L)``.

    Returns ``(hodge_t1, poincare_real)`` obtained by dividing out the
    Picard factors ``2^g (1+t)^g`` and ``2^(n-1) (1+t)^g``.  Both divisions
    must be exact.
    """
    if gcd(r, d) != 1:
        raise ValueError("fixed-determinant polynomials need gcd(r, d) = 1")
    cap = _default_cap(g, r, d, cap, False)
    top = dim_moduli(g, r)
    ht = hodge_t1(g, r, d, cap, normalize=normalize)
    qr = q_real(g, n, r, d, cap, normalize=normalize)
    for name, s in (("hodge_t1", ht), ("q_real", qr)):
        if cap >= top and s.degree() > top:
            raise NotPolynomialError(f"{name} has nonzero coefficients above degree {top}")
    return _divide_fixed_det(g, n, ht, qr)


def clear_caches() -> None:
    """Drop every memoized recursion result."""
    for f in (_q_complex, _hodge_t1, _q_real, _hodge_xy, types_with_codim):
        f.cache_clear()


# -- report -----------------------------------------------------------------


@dataclass
class ModuliReport:
    """Everything computed for one cell ``(g, n, r, d)`` with ``gcd(r, d) = 1``."""

    g: int
    n: int
    r: int
    d: int
    dim_complex: int
    poincare_complex: UniSeries
    hodge_t1: UniSeries
    poincare_real: UniSeries
    fixed_det_hodge_t1: UniSeries
    fixed_det_real: UniSeries
    hodge_expressive: bool
    maximal: bool
    chi_eq_sigma: bool
    b0_real: int
    total_betti_complex: int
    total_betti_real: int
    euler_real: int
    signature: int
    hodge_xy: Optional[BiSeries] = field(default=None, repr=False)

    @property
    def fixed_det_total_complex(self) -> int:
        return eval_at(self.fixed_det_hodge_t1, 1)

    @property
    def fixed_det_total_real(self) -> int:
        return eval_at(self.fixed_det_real, 1)


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise InvariantError(message)


def report(g: int, n: int, r: int, d: int, *, with_hodge_xy: bool = True, normalize: bool = False) -> ModuliReport:
    """Compute all polynomials for ``M(r, d)`` over a real curve and render the verdicts.

    Complex series are computed at cap ``2N + 2`` and the others at ``N + 2``;
    the two guard degrees must come out zero.  Duality, Hodge symmetry,
    ``b_0 = 2^(n-1)``, non-negativity and the Smith--Thom inequality are all
    checked, and :class:`InvariantError` is raised if any fails.

    The signature is read off the Hodge array at ``(x, y) = (-1, 1)``; with
    ``with_hodge_xy=False`` it comes from ``hodge_t1`` at ``t = -1`` instead.
    """
    CurveData(g, n).check_real()
    _check_rank(r)
    if gcd(r, d) != 1:
        raise ValueError(f"report needs coprime rank and degree (gcd({r}, {d}) = {gcd(r, d)})")
    top = dim_moduli(g, r)
    cap_c, cap_r = 2 * top + 2, top + 2

    qc = q_complex(g, r, d, cap_c, normalize=normalize)
    ht = hodge_t1(g, r, d, cap_r, normalize=normalize)
    qr = q_real(g, n, r, d, cap_r, normalize=normalize)
    hxy = hodge_biseries(g, r, d, cap_c, normalize=normalize) if with_hodge_xy else None

    _require(palindrome_check(qc, 2 * top), f"Poincaré polynomial is not a palindrome of degree {2 * top}")
    for name, s in (("hodge_t1", ht), ("poincare_real", qr)):
        _require(s.degree() <= top, f"{name} has nonzero coefficients above degree {top}")
        _require(s.is_nonnegative(), f"{name} has a negative coefficient")
    _require(qc.is_nonnegative(), "poincare_complex has a negative coefficient")
    if hxy is not None:
        mx, my = hxy.max_degrees()
        _require(mx <= top and my <= top, f"Hodge array extends beyond degree {top}")
        _require(hxy.is_nonnegative(), "Hodge array has a negative entry")
        _require(hxy.is_symmetric(), "Hodge array is not symmetric under x <-> y")
        _require(specialize(hxy, "tt") == qc, "Hodge array at x = y = t differs from the Poincaré polynomial")
        _require(specialize(hxy, "t1").truncate(cap_r) == ht, "Hodge array at (t, 1) differs from hodge_t1")

    b0 = qr[0]
    _require(b0 == 2 ** (n - 1), f"b_0 of the real locus is {b0}, expected 2^(n-1) = {2 ** (n - 1)}")
    total_c = eval_at(qc, 1, degree=2 * top)
    total_r = eval_at(qr, 1, degree=top)
    _require(total_r <= total_c, "Smith-Thom inequality violated")
    fd_h, fd_r = _divide_fixed_det(g, n, ht, qr)

    chi = eval_at(qr, -1, degree=top)
    sigma = hxy.evaluate(-1, 1) if hxy is not None else eval_at(ht, -1, degree=top)

    return ModuliReport(
        g=g, n=n, r=r, d=d,
        dim_complex=top,
        poincare_complex=qc,
        hodge_t1=ht,
        poincare_real=qr,
        fixed_det_hodge_t1=fd_h,
        fixed_det_real=fd_r,
        hodge_expressive=qr == ht,
        maximal=total_r == total_c,
        chi_eq_sigma=chi == sigma,
        b0_real=b0,
        total_betti_complex=total_c,
        total_betti_real=total_r,
        euler_real=chi,
        signature=sigma,
        hodge_xy=hxy,
    )
