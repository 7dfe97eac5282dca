import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realmoduli.series import (
    BiSeries,
    InexactDivisionError,
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

from oracles import t, uni_coeffs


def U(*coeffs, cap=None):
    cap = len(coeffs) - 1 if cap is None else cap
    return UniSeries.from_poly(coeffs, cap)


def B(terms, cap):
    return BiSeries.from_dict(terms, cap)


# -- construction ------------------------------------------------------------


def test_uniseries_invariants():
    a = U(1, 2, cap=4)
    assert a.cap == 4 and len(a.coeffs) == 5
    assert a.trimmed() == [1, 2]
    with pytest.raises(ValueError):
        UniSeries(())


def test_biseries_rows_are_triangular():
    b = B({(0, 0): 1, (2, 1): 5, (3, 3): 7}, 4)
    assert [len(row) for row in b.coeffs] == [5, 4, 3, 2, 1]
    assert b.coeff(2, 1) == 5
    # total degree 6 > cap was dropped
    assert all(c != 7 for row in b.coeffs for c in row)
    with pytest.raises(ValueError):
        BiSeries(((1, 2), (3, 4)))


# -- mul ---------------------------------------------------------------------


def test_mul_binomial_square():
    assert mul(U(1, 1, cap=4), U(1, 1, cap=4), 4) == U(1, 2, 1, cap=4)


def test_mul_identity():
    a = U(3, -1, 4, 1, 5)
    assert mul(a, UniSeries.one(4), 4) == a


@pytest.mark.parametrize("cap", [2, 3])
def test_mul_telescoping(cap):
    # (1 + t + t^2 + t^3)(1 - t) = 1 - t^4, and t^4 is beyond either cap
    a = U(1, 1, 1, 1, cap=cap)
    assert mul(a, U(1, -1, cap=cap), cap) == UniSeries.one(cap)


def test_mul_errors():
    with pytest.raises(TypeError):
        mul(U(1, 1), B({(0, 0): 1}, 1))
    with pytest.raises(ValueError):
        mul(U(1, 1), U(1, 1), 3)


def test_bivariate_mul_small():
    a = B({(0, 0): 1, (1, 0): 1}, 3)
    b = B({(0, 0): 1, (0, 1): 1}, 3)
    assert mul(a, b) == B({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}, 3)
    assert mul(a, b, 1) == B({(0, 0): 1, (1, 0): 1, (0, 1): 1}, 1)


# -- geom_factor ---------------------------------------------------------------


def test_geom_factor_geometric_series():
    assert geom_factor(UniSeries.one(5), 2, -1, 5) == U(1, 0, 1, 0, 1, 0)


def test_geom_factor_times_binomial():
    # expected values from sympy: (1+t)^4 / (1-t^2)
    expected = uni_coeffs((1 + t) ** 4 / (1 - t**2), 4)
    assert expected == [1, 4, 7, 8, 8]
    assert geom_factor(pow_binom(1, 4, 4), 2, -1, 4).coeffs == tuple(expected)


def test_geom_factor_bivariate():
    # 1/(1 - x y^2) up to total degree 7
    got = geom_factor(BiSeries.one(7), (1, 2), -1)
    assert got == B({(0, 0): 1, (1, 2): 1, (2, 4): 1}, 7)


def test_geom_factor_rejects_constant_monomial():
    with pytest.raises(ValueError):
        geom_factor(UniSeries.one(3), 0, -1)
    with pytest.raises(ValueError):
        geom_factor(BiSeries.one(3), (0, 0), 1)
    with pytest.raises(TypeError):
        geom_factor(BiSeries.one(3), 1, 1)


# -- pow_binom -----------------------------------------------------------------


def test_pow_binom_rows():
    assert pow_binom(1, 0, 3) == UniSeries.one(3)
    assert pow_binom(1, 4, 4) == U(1, 4, 6, 4, 1)
    assert pow_binom((1, 2), 2, 6) == B({(0, 0): 1, (1, 2): 2, (2, 4): 1}, 6)
    assert pow_binom(3, 2, 5) == U(1, 0, 0, 2, 0, 0)


# -- specialize / eval / palindrome -------------------------------------------------


def test_specialize_examples():
    a = B({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}, 2)
    assert specialize(a, "tt") == U(1, 2, 1)
    assert specialize(a, "t1") == U(2, 2, 0)
    with pytest.raises(ValueError):
        specialize(a, "xy")


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_specialize_picard(g):
    cap = 2 * g
    h = mul(pow_binom((1, 0), g, cap), pow_binom((0, 1), g, cap))
    assert specialize(h, "t1").truncate(g) == pow_binom(1, g, g) * 2**g


def test_eval_at():
    assert eval_at(U(1, 2, 1), 1) == 4
    for g in range(1, 6):
        assert eval_at(pow_binom(1, g, g), -1) == 0
    assert eval_at(U(2, 20, 2), -1) == -16
    with pytest.raises(ValueError):
        eval_at(U(1, 1), 2)
    with pytest.raises(NotPolynomialError):
        eval_at(U(1, 2, 1, 0, 5), 1, degree=2)
    assert eval_at(U(1, 2, 1, 0, 0), 1, degree=2) == 4


def test_palindrome_check():
    assert palindrome_check(U(1, 2, 1), 2)
    assert not palindrome_check(U(1, 1, 0), 2)
    assert not palindrome_check(U(1, 2, 1, 1), 2)
    with pytest.raises(ValueError):
        palindrome_check(U(1, 1), 2)


def test_exact_quotient():
    num = mul(U(1, 3, 3, 1, 0, 0, cap=6), pow_binom(1, 2, 6) * 4)
    assert exact_quotient(num, pow_binom(1, 2, 2) * 4) == U(1, 3, 3, 1, cap=6)
    with pytest.raises(InexactDivisionError):
        exact_quotient(U(1, 2, 2), U(1, 1))
    with pytest.raises(InexactDivisionError):
        exact_quotient(U(1, 1), U(2))


# -- properties ------------------------------------------------------------------

small_ints = st.integers(min_value=-20, max_value=20)


@st.composite
def uni(draw, cap=6):
    return UniSeries(tuple(draw(st.lists(small_ints, min_size=cap + 1, max_size=cap + 1))))


@st.composite
def bi(draw, cap=5):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, cap), st.integers(0, cap)), small_ints, max_size=12))
    return BiSeries.from_dict(terms, cap)


@given(uni(), uni(), uni())
def test_uni_ring_laws(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@settings(max_examples=40)
@given(bi(), bi(), bi())
def test_bi_ring_laws(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(uni(), uni(), st.integers(0, 6))
def test_uni_truncation_consistency(a, b, small):
    assert mul(a, b).truncate(small) == mul(a.truncate(small), b.truncate(small), small)


@settings(max_examples=40)
@given(bi(), bi(), st.integers(0, 5))
def test_bi_truncation_consistency(a, b, small):
    assert mul(a, b).truncate(small) == mul(a.truncate(small), b.truncate(small), small)


@given(uni(), st.integers(1, 4), st.integers(-3, 3))
def test_uni_geom_round_trip(a, k, m):
    assert geom_factor(geom_factor(a, k, m), k, -m) == a


@settings(max_examples=40)
@given(bi(), st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda e: sum(e) > 0), st.integers(-2, 2))
def test_bi_geom_round_trip(a, exps, m):
    assert geom_factor(geom_factor(a, exps, m), exps, -m) == a


@given(uni(), st.integers(1, 3), st.integers(1, 3))
def test_geom_matches_repeated_mul(a, k, m):
    one_minus = UniSeries.from_poly([1] + [0] * (k - 1) + [-1], a.cap)
    expect = a
    for _ in range(m):
        expect = mul(expect, one_minus)
    assert geom_factor(a, k, m) == expect


@settings(max_examples=40)
@given(bi(), bi())
def test_specialize_tt_commutes_with_mul(a, b):
    assert specialize(mul(a, b), "tt") == mul(specialize(a, "tt"), specialize(b, "tt"))


@given(st.integers(1, 4), st.integers(0, 6), st.integers(1, 3), st.integers(0, 12))
def test_nonnegativity_of_expansions(k, e, m, cap):
    s = pow_binom(k, e, cap)
    assert s.is_nonnegative()
    assert geom_factor(s, k, -m).is_nonnegative()
