"""Truncated formal power series in one and two variables over the integers.

Every Poincaré and Hodge polynomial handled by the package lives in one of
two dense, immutable containers:

* :class:`UniSeries` -- ``c[0] + c[1] t + ... + c[cap] t^cap``
* :class:`BiSeries`  -- ``sum c[i][j] x^i y^j`` over ``i + j <= cap``

Coefficients are plain Python ints, so there is no overflow and no floating
point anywhere.  Results of arithmetic never carry terms above the cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

__all__ = [
    "UniSeries",
    "BiSeries",
    "NotPolynomialError",
    "InexactDivisionError",
    "mul",
    "geom_factor",
    "pow_binom",
    "specialize",
    "eval_at",
    "palindrome_check",
    "exact_quotient",
]


class NotPolynomialError(ValueError):
    """A series expected to be a polynomial has nonzero coefficients above its degree."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


@dataclass(frozen=True)
class UniSeries:
    """Univariate series truncated at degree ``cap`` (inclusive)."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_poly(cls, coeffs: Sequence[int], cap: int) -> "UniSeries":
        """Pad or truncate a coefficient list to exactly ``cap + 1`` entries."""
        if cap < 0:
            raise ValueError("cap must be non-negative")
        head = list(coeffs[: cap + 1])
        return cls(tuple(head) + (0,) * (cap + 1 - len(head)))

    @classmethod
    def zero(cls, cap: int) -> "UniSeries":
        return cls.from_poly((), cap)

    @classmethod
    def one(cls, cap: int) -> "UniSeries":
        return cls.from_poly((1,), cap)

    @classmethod
    def monomial(cls, k: int, cap: int, coeff: int = 1) -> "UniSeries":
        out = [0] * (cap + 1)
        if k <= cap:
            out[k] = coeff
        return cls(tuple(out))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, cap: int) -> "UniSeries":
        if cap > self.cap:
            raise ValueError(f"cannot raise cap from {self.cap} to {cap}")
        return UniSeries(self.coeffs[: cap + 1])

    def shift(self, k: int) -> "UniSeries":
        """Multiply by ``t^k`` keeping the cap."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return UniSeries.from_poly((0,) * k + self.coeffs, self.cap)

    def degree(self) -> int:
        """Index of the last nonzero coefficient, ``-1`` for the zero series."""
        for i in range(self.cap, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def trimmed(self) -> list:
        """Coefficient list with trailing zeros removed."""
        return list(self.coeffs[: self.degree() + 1])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def evaluate(self, s: int) -> int:
        return sum(c * s**i for i, c in enumerate(self.coeffs))

    def _binary(self, other, op):
        if not isinstance(other, UniSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        return UniSeries(tuple(op(a, b) for a, b in zip(self.coeffs[: cap + 1], other.coeffs)))

    def __add__(self, other):
        return self._binary(other, int.__add__)

    def __sub__(self, other):
        return self._binary(other, int.__sub__)

    def __neg__(self):
        return UniSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return UniSeries(tuple(other * c for c in self.coeffs))
        if isinstance(other, UniSeries):
            return mul(self, other, min(self.cap, other.cap))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        terms = [f"{c}*t^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"UniSeries({body}; cap={self.cap})"


@dataclass(frozen=True)
class BiSeries:
    """Bivariate series truncated at total degree ``cap`` (inclusive).

    ``coeffs[i][j]`` is the coefficient of ``x^i y^j``; row ``i`` has
    ``cap + 1 - i`` entries.
    """

    coeffs: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in row) for row in self.coeffs)
        cap = len(rows) - 1
        if cap < 0:
            raise ValueError("a series needs at least the constant coefficient")
        for i, row in enumerate(rows):
            if len(row) != cap + 1 - i:
                raise ValueError(f"row {i} must have {cap + 1 - i} entries, got {len(row)}")
        object.__setattr__(self, "coeffs", rows)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_dict(cls, terms: dict, cap: int) -> "BiSeries":
        """Build from ``{(i, j): c}``; terms of total degree above ``cap`` are dropped."""
        rows = [[0] * (cap + 1 - i) for i in range(cap + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            if i + j <= cap:
                rows[i][j] += c
        return cls(tuple(map(tuple, rows)))

    @classmethod
    def zero(cls, cap: int) -> "BiSeries":
        return cls.from_dict({}, cap)

    @classmethod
    def one(cls, cap: int) -> "BiSeries":
        return cls.from_dict({(0, 0): 1}, cap)

    def coeff(self, i: int, j: int) -> int:
        if i < 0 or j < 0 or i + j > self.cap:
            raise IndexError(f"(x^{i} y^{j}) is outside total degree {self.cap}")
        return self.coeffs[i][j]

    def terms(self):
        """Iterate over ``((i, j), c)`` for nonzero coefficients."""
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield (i, j), c

    def truncate(self, cap: int) -> "BiSeries":
        if cap > self.cap:
            raise ValueError(f"cannot raise cap from {self.cap} to {cap}")
        return BiSeries(tuple(row[: cap + 1 - i] for i, row in enumerate(self.coeffs[: cap + 1])))

    def shift(self, kx: int, ky: int) -> "BiSeries":
        """Multiply by ``x^kx y^ky`` keeping the cap."""
        return BiSeries.from_dict({(i + kx, j + ky): c for (i, j), c in self.terms()}, self.cap)

    def swap(self) -> "BiSeries":
        """Exchange the roles of ``x`` and ``y``."""
        return BiSeries.from_dict({(j, i): c for (i, j), c in self.terms()}, self.cap)

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for row in self.coeffs for c in row)

    def max_degrees(self) -> tuple:
        """Largest ``x``- and ``y``-exponents carrying a nonzero coefficient."""
        mx = my = -1
        for (i, j), _ in self.terms():
            mx, my = max(mx, i), max(my, j)
        return mx, my

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.terms())

    def _binary(self, other, op):
        if not isinstance(other, BiSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        return BiSeries(
            tuple(
                tuple(op(a, b) for a, b in zip(ra[: cap + 1 - i], rb))
                for i, (ra, rb) in enumerate(zip(self.coeffs[: cap + 1], other.coeffs))
            )
        )

    def __add__(self, other):
        return self._binary(other, int.__add__)

    def __sub__(self, other):
        return self._binary(other, int.__sub__)

    def __neg__(self):
        return BiSeries(tuple(tuple(-c for c in row) for row in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return BiSeries(tuple(tuple(other * c for c in row) for row in self.coeffs))
        if isinstance(other, BiSeries):
            return mul(self, other, min(self.cap, other.cap))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        terms = [f"{c}*x^{i}*y^{j}" for (i, j), c in self.terms()]
        body = " + ".join(terms) if terms else "0"
        return f"BiSeries({body}; cap={self.cap})"


Series = Union[UniSeries, BiSeries]


def _check_cap(a: Series, b: Series, cap) -> int:
    if type(a) is not type(b):
        raise TypeError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if cap is None:
        return min(a.cap, b.cap)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if cap > a.cap or cap > b.cap:
        raise ValueError(f"cap {cap} exceeds operand caps ({a.cap}, {b.cap})")
    return cap


def mul(a: Series, b: Series, cap: int | None = None) -> Series:
    """Exact product of two series of the same kind, truncated at ``cap``."""
    cap = _check_cap(a, b, cap)
    if isinstance(a, UniSeries):
        out = [0] * (cap + 1)
        bc = b.coeffs
        for i, x in enumerate(a.coeffs[: cap + 1]):
            if x:
                for j, y in enumerate(bc[: cap + 1 - i]):
                    out[i + j] += x * y
        return UniSeries(tuple(out))

    out = [[0] * (cap + 1 - i) for i in range(cap + 1)]
    brows = b.coeffs
    for i1, ra in enumerate(a.coeffs[: cap + 1]):
        for j1, x in enumerate(ra[: cap + 1 - i1]):
            if not x:
                continue
            room = cap - i1 - j1
            for i2 in range(room + 1):
                ro = out[i1 + i2]
                for j2, y in enumerate(brows[i2][: room - i2 + 1]):
                    if y:
                        ro[j1 + j2] += x * y
    return BiSeries(tuple(map(tuple, out)))


def _exponents(a: Series, exps) -> tuple:
    if isinstance(exps, int):
        exps = (exps,)
    exps = tuple(int(e) for e in exps)
    want = 1 if isinstance(a, UniSeries) else 2
    if len(exps) != want:
        raise TypeError(f"{type(a).__name__} needs a monomial with {want} exponent(s), got {exps}")
    if any(e < 0 for e in exps):
        raise ValueError("monomial exponents must be non-negative")
    if sum(exps) == 0:
        raise ValueError("monomial must be non-constant: (1 - 1) cannot be inverted")
    return exps


def geom_factor(a: Series, exps, m: int, cap: int | None = None) -> Series:
    """Return ``a * (1 - monomial)^m`` truncated at ``cap``.

    Negative ``m`` multiplies by the geometric series ``(1 + u + u^2 + ...)^|m|``.
    Each unit step is a single in-place recurrence pass, so the cost is
    ``O(|m| * size)``.
    """
    exps = _exponents(a, exps)
    if cap is None:
        cap = a.cap
    if cap > a.cap:
        raise ValueError(f"cap {cap} exceeds operand cap {a.cap}")
    if isinstance(a, UniSeries):
        (k,) = exps
        c = list(a.coeffs[: cap + 1])
        for _ in range(-m):
            for i in range(k, cap + 1):
                c[i] += c[i - k]
        for _ in range(m):
            for i in range(cap, k - 1, -1):
                c[i] -= c[i - k]
        return UniSeries(tuple(c))

    k1, k2 = exps
    rows = [list(row[: cap + 1 - i]) for i, row in enumerate(a.coeffs[: cap + 1])]
    # lexicographic order on (i, j): the source index (i-k1, j-k2) always precedes (i, j)
    for _ in range(-m):
        for i in range(k1, cap + 1):
            src, dst = rows[i - k1], rows[i]
            for j in range(k2, cap + 1 - i):
                dst[j] += src[j - k2]
    for _ in range(m):
        for i in range(cap, k1 - 1, -1):
            src, dst = rows[i - k1], rows[i]
            for j in range(cap - i, k2 - 1, -1):
                dst[j] -= src[j - k2]
    return BiSeries(tuple(map(tuple, rows)))


def pow_binom(exps, e: int, cap: int) -> Series:
    """Expand ``(1 + monomial)^e`` truncated at ``cap``.

    An int (or 1-tuple) exponent gives a :class:`UniSeries`, a pair gives a
    :class:`BiSeries`.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if isinstance(exps, int):
        exps = (exps,)
    exps = tuple(exps)
    deg = sum(exps)
    if len(exps) == 1:
        out = [0] * (cap + 1)
        for m in range(e + 1):
            if m * deg > cap:
                break
            out[m * deg] += comb(e, m)
        return UniSeries(tuple(out))
    if len(exps) == 2:
        k1, k2 = exps
        terms = {}
        for m in range(e + 1):
            if m * deg > cap:
                break
            terms[(m * k1, m * k2)] = terms.get((m * k1, m * k2), 0) + comb(e, m)
        return BiSeries.from_dict(terms, cap)
    raise TypeError(f"monomial must have one or two exponents, got {exps}")


def specialize(a: BiSeries, mode: str) -> UniSeries:
    """Collapse a bivariate series to one variable.

    ``"tt"`` substitutes ``x = y = t``; ``"t1"`` substitutes ``x = t, y = 1``.
    The ``"t1"`` coefficient of ``t^i`` sums only the stored ``c[i][j]``, so it
    is complete only when the cap leaves room for every contributing ``j``.
    """
    if not isinstance(a, BiSeries):
        raise TypeError("specialize expects a BiSeries")
    out = [0] * (a.cap + 1)
    if mode == "tt":
        for (i, j), c in a.terms():
            out[i + j] += c
    elif mode == "t1":
        for i, row in enumerate(a.coeffs):
            out[i] = sum(row)
    else:
        raise ValueError(f"unknown specialization {mode!r}; use 'tt' or 't1'")
    return UniSeries(tuple(out))


def eval_at(a: UniSeries, s: int, degree: int | None = None) -> int:
    """Evaluate at ``t = s`` for ``s`` in ``{-1, +1}``.

    If ``degree`` is given, the series is asserted to be a polynomial of at
    most that degree and :class:`NotPolynomialError` is raised otherwise.
    """
    if s not in (-1, 1):
        raise ValueError("evaluation point must be -1 or +1")
    if degree is not None and a.degree() > degree:
        raise NotPolynomialError(
            f"coefficient of t^{a.degree()} is nonzero but the polynomial degree is at most {degree}"
        )
    return a.evaluate(s)


def palindrome_check(a: UniSeries, n: int) -> bool:
    """True iff ``a`` is a palindrome of degree ``n``: ``c[i] = c[n-i]`` and nothing above ``n``."""
    if a.cap < n:
        raise ValueError(f"cap {a.cap} is below the palindrome degree {n}")
    c = a.coeffs
    return all(c[i] == c[n - i] for i in range(n + 1)) and not any(c[n + 1 :])


def exact_quotient(a: UniSeries, b: UniSeries) -> UniSeries:
    """Divide polynomial ``a`` by polynomial ``b`` over the integers.

    Both are read as polynomials (trailing zeros ignored).  Raises
    :class:`InexactDivisionError` unless the quotient has integer
    coefficients and the remainder vanishes.  The result keeps ``a.cap``.
    """
    num, den = a.trimmed(), b.trimmed()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return UniSeries.zero(a.cap)
    lead = den[-1]
    quot = [0] * max(len(num) - len(den) + 1, 0)
    for k in range(len(num) - len(den), -1, -1):
        top = num[k + len(den) - 1]
        q, r = divmod(top, lead)
        if r:
            raise InexactDivisionError(f"leading coefficient {top} not divisible by {lead}")
        quot[k] = q
        if q:
            for i, c in enumerate(den):
                num[k + i] -= q * c
    if any(num):
        raise InexactDivisionError("nonzero remainder")
    return UniSeries.from_poly(quot, a.cap)
