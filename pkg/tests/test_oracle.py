import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classical_mops import families as fm
from classical_mops.errors import RouteMismatch, SingularSystem
from classical_mops.oracle import MomentSystem, extract_nn_coefficients, solve_full_pivot, solve_type_i, solve_type_ii

from .conftest import close

JP2 = fm.JacobiPineiro((F(0), F(1, 2)), F(1, 4))
H2 = fm.HermiteMultiple((F(-1), F(1)))


def test_solver_small_system():
    x = solve_full_pivot([[0, 2], [3, 1]], [4, 5])
    assert close(x[0], 1) and close(x[1], 2)


def test_solver_singular():
    with pytest.raises(SingularSystem):
        solve_full_pivot([[1, 2], [2, 4]], [1, 2])


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_solver_random_systems(size, seed):
    r = random.Random(seed)
    a = [[mpmath.mpf(r.randint(-9, 9)) + (size if i == j else 0) * 10 for j in range(size)] for i in range(size)]
    x = [mpmath.mpf(r.randint(-9, 9)) for _ in range(size)]
    b = [sum(a[i][j] * x[j] for j in range(size)) for i in range(size)]
    got = solve_full_pivot(a, b)
    assert all(close(g, w, "1e-60") for g, w in zip(got, x))


def test_type_ii_examples():
    ms = MomentSystem(JP2)
    assert solve_type_ii(ms, (0, 0)).coeffs == (1,)
    got = solve_type_ii(ms, (1, 0))
    assert close(got.coeffs[0], F(-4, 9)) and close(got.coeffs[1], 1)


def test_type_i_examples():
    ms = MomentSystem(JP2)
    a1, a2 = solve_type_i(ms, (1, 0))
    assert close(a1.coeffs[0], 1 / ms.moment(1, 0)) and a2.is_zero
    h1, h2 = solve_type_i(MomentSystem(H2), (1, 0))
    assert close(h1.coeffs[0], mpmath.exp(mpmath.mpf(-1) / 4) / mpmath.sqrt(mpmath.pi)) and h2.is_zero


def test_type_i_needs_positive_weight():
    with pytest.raises(ValueError):
        solve_type_i(MomentSystem(JP2), (0, 0))


def test_extract_zero_index():
    ms = MomentSystem(JP2)
    for k in (1, 2):
        ex = extract_nn_coefficients(ms, (0, 0), k, (1, 2))
        assert ex.determined == (True, False, False)
        assert close(ex.coefficients.b0, ms.moment(k, 1) / ms.moment(k, 0))
        assert ex.coefficients.bj == (0, 0)


def test_extract_hermite_example():
    ex = extract_nn_coefficients(MomentSystem(H2), (1, 1), 1, (1, 2))
    assert close(ex.coefficients.b0, F(-1, 2), "1e-60")
    assert close(ex.integral_route.b0, F(-1, 2), "1e-60")


@pytest.mark.parametrize("pi", [(1, 2), (2, 1)])
def test_extract_jp_example(pi):
    ms = MomentSystem(JP2)
    ex = extract_nn_coefficients(ms, (2, 1), 2, pi)
    want = fm.nn_coefficients(JP2, (2, 1), 2, pi)
    for j in range(3):
        assert close(ex.coefficients.component(j), want.component(j), "1e-30")


def test_route_mismatch_is_raised_at_impossible_tolerance():
    with pytest.raises(RouteMismatch):
        extract_nn_coefficients(MomentSystem(JP2), (2, 2), 1, (1, 2), tolerance=mpmath.mpf(0))


def test_moment_cache_is_keyed_by_precision():
    from classical_mops.arith import working_precision

    ms = MomentSystem(H2)
    with working_precision(64):
        low = ms.moment(1, 0)
    high = ms.moment(1, 0)
    assert high != low and close(high, low, "1e-18")
