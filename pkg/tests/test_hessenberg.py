from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classical_mops import families as fm
from classical_mops import hessenberg as hz
from classical_mops.acceptance import canonical_instances

from .conftest import close

H2 = fm.HermiteMultiple((F(-1), F(1)))
JP2 = fm.JacobiPineiro((F(0), F(1, 2)), F(1, 4))


def test_hermite_diagonal_example():
    T = hz.build(H2, 3)
    assert [T.entry(r, r) for r in range(3)] == [F(-1, 2), F(1, 2), F(-1, 2)]


def test_single_entry_section():
    for params in canonical_instances():
        T = hz.build(params, 1)
        assert close(T.entry(0, 0), fm.moment(params, 1, 1) / fm.moment(params, 1, 0))


def test_shape_and_band():
    T = hz.build(JP2, 8)
    dense = T.dense()
    for r in range(8):
        for c in range(8):
            if c == r + 1:
                assert dense[r][c] == 1
            elif c > r + 1 or r - c > JP2.p:
                assert dense[r][c] == 0
    assert T.bandwidth() == JP2.p + 2
    with pytest.raises(IndexError):
        T.entry(8, 0)


def test_sparse_and_dense_agree():
    T = hz.build(H2, 5)
    sparse = T.to_sparse()
    dense = T.to_dense()
    for j, vals in sparse["diagonals"].items():
        for c, v in enumerate(vals):
            assert dense[c + int(j)][c] == v
    assert sparse["superdiagonal"] == "1"


@pytest.mark.parametrize("params", canonical_instances())
def test_operator_identity(params):
    T = hz.build(params, 12)
    report = hz.check_operator_identity(T, params, hz.default_sample_points(params), "1e-28")
    assert report.passed, report


def test_smallest_window_at_zero():
    T = hz.build(H2, H2.p + 2)
    assert hz.check_operator_identity(T, H2, [0]).passed


def test_identity_detects_a_perturbed_entry():
    T = hz.build(JP2, 6)
    diagonals = list(T.diagonals)
    diagonals[0] = (diagonals[0][0] + mpmath.mpf("1e-10"),) + diagonals[0][1:]
    broken = hz.BandedHessenberg(T.N, T.p, tuple(diagonals))
    assert not hz.check_operator_identity(broken, JP2, ["1/2"]).passed


@given(st.integers(1, 8), st.sampled_from(canonical_instances()), st.fractions(-2, 2, max_denominator=5))
def test_characteristic_polynomial(N, params, x):
    assert hz.characteristic_polynomial_gap(params, N, [x]) < mpmath.mpf("1e-50")
