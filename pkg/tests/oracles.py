"""Independent reference computations used to freeze expected values.

Nothing here touches the recursion engine or the DFS enumerator: rank-2
cells are evaluated from closed forms (the HN sum over ``((1,k),(1,d-k))``
is a geometric series) with sympy, HN types by brute-force scanning, and
Gaussian binomials by counting subsets.
"""

from itertools import combinations, product

import sympy as sp

t, x, y, s = sp.symbols("t x y s")


def uni_coeffs(expr, cap):
    ser = sp.series(expr, t, 0, cap + 1).removeO()
    poly = sp.Poly(sp.expand(ser), t)
    return [int(poly.coeff_monomial(t**i)) for i in range(cap + 1)]


def bi_coeffs(expr, cap):
    """Coefficients ``c[i][j]`` for ``i + j <= cap`` via the grading ``x -> s x, y -> s y``."""
    graded = expr.subs({x: s * x, y: s * y}, simultaneous=True)
    ser = sp.expand(sp.series(graded, s, 0, cap + 1).removeO())
    poly = sp.Poly(ser, s, x, y)
    return [[int(poly.coeff_monomial(s ** (i + j) * x**i * y**j)) for j in range(cap + 1 - i)] for i in range(cap + 1)]


def _rank2_offset(g, d):
    k0 = d // 2 + 1
    return 2 * k0 - d + g - 1


def rank2_complex(g, d, cap):
    e0 = _rank2_offset(g, d)
    head = (1 + t) ** (2 * g) * (1 + t**3) ** (2 * g) / ((1 - t**2) * (1 - t**4))
    strata = t ** (2 * e0) / (1 - t**4) * (1 + t) ** (4 * g) / (1 - t**2)
    return uni_coeffs(head - strata, cap)


def rank2_t1(g, d, cap):
    e0 = _rank2_offset(g, d)
    head = 2**g * (1 + t) ** (2 * g) * (1 + t**2) ** g / ((1 - t) * (1 - t**2))
    strata = t**e0 / (1 - t**2) * 4**g * (1 + t) ** (2 * g) / (1 - t)
    return uni_coeffs(head - strata, cap)


def rank2_real(g, n, d, cap):
    e0 = _rank2_offset(g, d)
    head = (
        2 ** (n - 1) * (1 + t) ** g * (1 + t**3) ** (g + 1 - n) * (1 + t) ** (n - 1) * (1 + t**2) ** (n - 1)
        / ((1 - t) * (1 - t**2))
    )
    strata = t**e0 / (1 - t**2) * 4 ** (n - 1) * (1 + t) ** (2 * g) / (1 - t)
    return uni_coeffs(head - strata, cap)


def rank2_hodge(g, d, cap):
    e0 = _rank2_offset(g, d)
    u = x * y
    head = (1 + x) ** g * (1 + y) ** g * (1 + x * y**2) ** g * (1 + x**2 * y) ** g / ((1 - u) * (1 - u**2))
    strata = u**e0 / (1 - u**2) * (1 + x) ** (2 * g) * (1 + y) ** (2 * g) / (1 - u)
    return bi_coeffs(head - strata, cap)


def stack_complex(g, r, cap):
    expr = (1 + t) ** (2 * g) / (1 - t**2)
    for i in range(2, r + 1):
        expr *= (1 + t ** (2 * i - 1)) ** (2 * g) / ((1 - t ** (2 * i - 2)) * (1 - t ** (2 * i)))
    return uni_coeffs(expr, cap)


def stack_real(g, n, r, cap):
    expr = 2 ** (n - 1) * (1 + t) ** g / (1 - t)
    for i in range(2, r + 1):
        expr *= (
            (1 + t ** (2 * i - 1)) ** (g + 1 - n) * (1 + t ** (i - 1)) ** (n - 1) * (1 + t**i) ** (n - 1)
            / ((1 - t ** (i - 1)) * (1 - t**i))
        )
    return uni_coeffs(expr, cap)


def compositions(r):
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in compositions(r - first):
            yield (first,) + rest


def brute_hn_types(r, d, g, cap):
    """``{blocks: codim}`` for every type with at least two blocks and codim <= cap.

    Every block slope lies in ``[-(|d| + cap), |d| + cap]`` (the first and last
    blocks' cross terms are each at most ``cap``), so ``|d_i| <= r (|d| + cap)``.
    """
    window = r * (abs(d) + cap)
    found = {}
    for ranks in compositions(r):
        if len(ranks) < 2:
            continue
        for head in product(range(-window, window + 1), repeat=len(ranks) - 1):
            degs = head + (d - sum(head),)
            if any(d1 * r2 <= d2 * r1 for r1, d1, r2, d2 in zip(ranks, degs, ranks[1:], degs[1:])):
                continue
            c = sum(
                ranks[j] * degs[i] - ranks[i] * degs[j] + ranks[i] * ranks[j] * (g - 1)
                for i in range(len(ranks))
                for j in range(i + 1, len(ranks))
            )
            if c <= cap:
                found[tuple(zip(ranks, degs))] = c
    return found


def schubert_count(m, k):
    """Generating polynomial of ``sum(a_i - i)`` over k-subsets of ``range(m)``."""
    out = [0] * (k * (m - k) + 1)
    for subset in combinations(range(m), k):
        out[sum(a - i for i, a in enumerate(subset))] += 1
    return out


def gaussian_rec(m, k):
    """``[m, k] = [m-1, k] + t^(m-k) [m-1, k-1]``."""
    if k == 0 or k == m:
        return [1]
    a = gaussian_rec(m - 1, k)
    b = [0] * (m - k) + gaussian_rec(m - 1, k - 1)
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]
