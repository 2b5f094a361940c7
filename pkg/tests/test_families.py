import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classical_mops import combinatorics as cb
from classical_mops import families as fm
from classical_mops.arith import gamma, to_real, working_precision
from classical_mops.errors import IndexOutOfRange, InvalidParams
from classical_mops.oracle import MomentSystem
from classical_mops.verify import random_jp_params

from .conftest import close

JP2 = fm.JacobiPineiro((F(0), F(1, 2)), F(1, 4))
L1_2 = fm.LaguerreFirst((F(0), F(1, 2)))
L2_2 = fm.LaguerreSecond(F(1, 2), (F(1), F(2)))
H2 = fm.HermiteMultiple((F(-1), F(1)))
FAMILIES = [JP2, L1_2, L2_2, H2]


def sqrt_pi():
    return mpmath.sqrt(mpmath.pi)


def coeffs_close(poly, expected, tol="1e-60"):
    return len(poly.coeffs) == len(expected) and all(close(a, b, tol) for a, b in zip(poly.coeffs, expected))


# ------------------------------------------------------------------ params


@pytest.mark.parametrize(
    "build",
    [
        lambda: fm.JacobiPineiro((0, 1), F(1, 4)),
        lambda: fm.JacobiPineiro((0, F(1, 2)), -1),
        lambda: fm.LaguerreFirst((F(-3, 2), 0)),
        lambda: fm.LaguerreFirst((F(1, 3), F(4, 3))),
        lambda: fm.LaguerreSecond(F(1, 2), (1, 1)),
        lambda: fm.LaguerreSecond(F(1, 2), (1, -2)),
        lambda: fm.LaguerreSecond(-1, (1, 2)),
        lambda: fm.HermiteMultiple((1, 1)),
        lambda: fm.HermiteMultiple(()),
    ],
)
def test_invalid_params(build):
    with pytest.raises(InvalidParams):
        build()


def test_index_validation():
    with pytest.raises(IndexOutOfRange):
        fm.type_i_coefficients(H2, (1, 0), 3)
    with pytest.raises(ValueError):
        fm.type_ii_coefficients(H2, (1, 0, 0))
    with pytest.raises(ValueError):
        fm.nn_coefficients(H2, (1, 0), 1, (1, 1))


# ------------------------------------------------------------------ moments


def test_moment_examples():
    assert close(fm.moment(fm.JacobiPineiro((0, F(1, 2)), 0), 1, 0), 1)
    assert close(fm.moment(fm.JacobiPineiro((0, F(1, 2)), 0), 2, 0), F(2, 3))
    assert close(fm.moment(fm.LaguerreSecond(0, (1, 2)), 1, 0), 1)
    assert close(fm.moment(fm.HermiteMultiple((0, 1)), 1, 0), sqrt_pi())


@pytest.mark.parametrize("params", FAMILIES)
def test_moments_match_quadrature(params):
    weights = {
        fm.JacobiPineiro: lambda x, i: x ** to_real(params.alphas[i - 1]) * (1 - x) ** to_real(params.beta),
        fm.LaguerreFirst: lambda x, i: mpmath.exp(-x) * x ** to_real(params.alphas[i - 1]),
        fm.LaguerreSecond: lambda x, i: x ** to_real(params.alpha0) * mpmath.exp(-to_real(params.cs[i - 1]) * x),
        fm.HermiteMultiple: lambda x, i: mpmath.exp(-x * x + to_real(params.cs[i - 1]) * x),
    }[type(params)]
    interval = {fm.JacobiPineiro: [0, 1], fm.HermiteMultiple: [-mpmath.inf, 0, mpmath.inf]}.get(type(params), [0, mpmath.inf])
    with working_precision(80):
        for i in (1, 2):
            for k in (0, 1, 3):
                quad = mpmath.quad(lambda x: x**k * weights(x, i), interval)
                assert close(fm.moment(params, i, k), quad, "1e-15")


# ------------------------------------------------------------------ type II


def test_type_ii_examples():
    for params in FAMILIES:
        assert coeffs_close(fm.type_ii_coefficients(params, (0, 0)), [1])
    assert coeffs_close(fm.type_ii_coefficients(JP2, (1, 0)), [F(-4, 9), 1])
    assert coeffs_close(fm.type_ii_coefficients(L2_2, (1, 0)), [F(-3, 2), 1])
    assert coeffs_close(fm.type_ii_coefficients(H2, (1, 0)), [F(1, 2), 1])


FROZEN_TYPE_II = [
    (JP2, (1, 1), [F(8, 65), F(-58, 65), 1]),
    (L1_2, (2, 1), [-3, 12, F(-15, 2), 1]),
    (L2_2, (1, 1), [F(15, 8), F(-15, 4), 1]),
    (H2, (2, 1), [F(-3, 8), F(-7, 4), F(1, 2), 1]),
]


@pytest.mark.parametrize("params,n,expected", FROZEN_TYPE_II)
def test_type_ii_frozen(params, n, expected):
    assert coeffs_close(fm.type_ii_coefficients(params, n), expected)


# ------------------------------------------------------------------ type I


def test_type_i_examples():
    for params in FAMILIES:
        assert fm.type_i_coefficients(params, (1, 0), 2).is_zero
    c1 = mpmath.mpf(-1)
    assert coeffs_close(fm.type_i_coefficients(H2, (1, 0), 1), [mpmath.exp(-c1**2 / 4) / sqrt_pi()])
    assert coeffs_close(fm.type_i_coefficients(L2_2, (1, 0), 1), [1 / gamma(F(3, 2))])
    a1, b = mpmath.mpf(0), mpmath.mpf(1) / 4
    assert coeffs_close(fm.type_i_coefficients(JP2, (1, 0), 1), [gamma(a1 + b + 2) / (gamma(b + 1) * gamma(a1 + 1))])


FROZEN_TYPE_I = [
    (JP2, (1, 1), [["-12.375"], ["19.8222193540033702247696964303"]]),
    (L1_2, (2, 1), [["2", "2"], ["-4.51351666838205029558463561249"]]),
    (L2_2, (1, 1), [["1.50450555612735009852821187083"], ["-4.25538432428194856469275797263"]]),
    (H2, (2, 1), [["-0.878782578935444794093723954824"] * 2, ["0.439391289467722397046861977412"]]),
]


@pytest.mark.parametrize("params,n,expected", FROZEN_TYPE_I)
def test_type_i_frozen(params, n, expected):
    for i, want in enumerate(expected, start=1):
        assert coeffs_close(fm.type_i_coefficients(params, n, i), [mpmath.mpf(v) for v in want], "1e-28")


def test_classical_hermite():
    assert coeffs_close(fm.classical_hermite(0), [1])
    assert coeffs_close(fm.classical_hermite(2), [F(-1, 2), 0, 1])
    assert coeffs_close(fm.classical_hermite(3), [0, F(-3, 2), 0, 1])


@pytest.mark.parametrize("n", range(6))
def test_hermite_one_weight_is_classical(n):
    assert coeffs_close(fm.type_ii_coefficients(fm.HermiteMultiple((0,)), (n,)), fm.classical_hermite(n).coeffs)


# ------------------------------------------------------------------ recurrence


@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 2), st.sampled_from([(1, 2), (2, 1)]))
def test_hermite_nn_closed_values(n1, n2, k, pi):
    c = [mpmath.mpf(-1), mpmath.mpf(1)]
    got = fm.nn_coefficients(H2, (n1, n2), k, pi)
    assert close(got.b0, c[k - 1] / 2)
    if pi == (1, 2):
        assert close(got.bj[0], mpmath.mpf(n1 + n2) / 2)
        assert close(got.bj[1], n2 * (c[1] - c[0]) / 4)


def test_laguerre2_b0_example():
    params = fm.LaguerreSecond(0, (1, 2))
    assert close(fm.nn_coefficients(params, (1, 1), 1, (1, 2)).b0, F(9, 2))


def test_nn_zero_index_b0_is_moment_ratio():
    for params in FAMILIES:
        for k in (1, 2):
            got = fm.nn_coefficients(params, (0, 0), k, (1, 2))
            assert close(got.b0, fm.moment(params, k, 1) / fm.moment(params, k, 0))


# ------------------------------------------------------------------ step line


def test_hermite_step_line_examples():
    for n in range(8):
        assert close(fm.step_line_coefficients(H2, n, 0), H2.cs[n % 2] / 2)
    assert close(fm.step_line_coefficients(H2, 2, 1), 1)


@pytest.mark.parametrize("params", FAMILIES)
def test_step_line_zero_is_first_moment_ratio(params):
    assert close(fm.step_line_coefficients(params, 0, 0), fm.moment(params, 1, 1) / fm.moment(params, 1, 0))


def test_step_line_split_validates():
    with pytest.raises(IndexOutOfRange):
        fm.step_line_coefficients(H2, 1, 3)


# ------------------------------------------------------------------ lemma


def test_jp_lemma_examples():
    for m in range(4):
        assert close(fm.jp_lemma_closed_form(JP2, (0, 0), 1, m), 1)
        assert close(fm.jp_lemma_brute_force(JP2, (1, 0), 1, 0), fm.jp_lemma_closed_form(JP2, (1, 0), 1, 0))
    params = random_jp_params(random.Random(7), 3)
    for i in (1, 2, 3):
        assert close(fm.jp_lemma_brute_force(params, (1, 1, 1), i, 2), fm.jp_lemma_closed_form(params, (1, 1, 1), i, 2), "1e-40")


# ------------------------------------------------------------------ properties against the oracle


@st.composite
def jp_params(draw):
    return random_jp_params(random.Random(draw(st.integers(0, 10**6))), draw(st.integers(2, 3)))


@st.composite
def laguerre2_params(draw):
    p = draw(st.integers(2, 3))
    cs = draw(st.lists(st.fractions(F(1, 4), 4, max_denominator=6), min_size=p, max_size=p, unique=True))
    return fm.LaguerreSecond(draw(st.fractions(F(-1, 2), 3, max_denominator=6)), tuple(cs))


@st.composite
def hermite_params(draw):
    p = draw(st.integers(2, 3))
    cs = draw(st.lists(st.fractions(-3, 3, max_denominator=6), min_size=p, max_size=p, unique=True))
    return fm.HermiteMultiple(tuple(cs))


@st.composite
def laguerre1_params(draw):
    p = draw(st.integers(2, 3))
    base = draw(st.lists(st.fractions(F(-4, 5), 2, max_denominator=7), min_size=p, max_size=p))
    try:
        return fm.LaguerreFirst(tuple(base))
    except InvalidParams:
        return fm.LaguerreFirst((F(0), F(1, 3), F(2, 3))[:p])


any_params = st.one_of(jp_params(), laguerre1_params(), laguerre2_params(), hermite_params())


@given(any_params, st.data())
def test_closed_forms_agree_with_oracle(params, data):
    n = tuple(data.draw(st.integers(0, 2)) for _ in range(params.p))
    ms = MomentSystem(params)
    b = fm.type_ii_coefficients(params, n)
    assert b.degree == sum(n) and close(b.leading, 1)
    assert coeffs_close(b, ms.solve_type_ii(n).coeffs, "1e-40")
    if sum(n):
        for i, a in enumerate(ms.solve_type_i(n), start=1):
            mine = fm.type_i_coefficients(params, n, i)
            scale = max([abs(c) for c in a.coeffs] + [1])
            assert all(abs(x - y) <= mpmath.mpf("1e-40") * scale for x, y in zip(mine.coeffs, a.coeffs))
            assert mine.degree <= n[i - 1] - 1


@given(any_params, st.data())
def test_nn_coefficients_agree_with_oracle(params, data):
    n = tuple(data.draw(st.integers(0, 2)) for _ in range(params.p))
    k = data.draw(st.integers(1, params.p))
    pi = tuple(data.draw(st.permutations(range(1, params.p + 1))))
    got = fm.nn_coefficients(params, n, k, pi)
    ex = MomentSystem(params).extract_nn_coefficients(n, k, pi)
    for j in range(params.p + 1):
        if ex.determined[j]:
            assert close(got.component(j), ex.coefficients.component(j), "1e-40")


@given(any_params, st.integers(0, 8))
def test_step_line_is_nn_on_the_step_line(params, n):
    p = params.p
    m, k = divmod(n, p)
    nn = fm.nn_coefficients(params, cb.step_line_multiindex(n, p), k + 1, cb.step_line_permutation(k, p))
    for j in range(min(n, p) + 1):
        assert close(fm.step_line_coefficients(params, n, j), nn.component(j), "1e-40")
