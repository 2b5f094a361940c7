from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from classical_mops import combinatorics as cb
from classical_mops.errors import IndexOutOfRange


@st.composite
def perms(draw, min_p=1, max_p=6):
    p = draw(st.integers(min_p, max_p))
    return tuple(draw(st.permutations(range(1, p + 1))))


def test_s_vector_examples():
    assert cb.s_vector((2, 3, 1), 0) == (0, 0, 0)
    assert cb.s_vector((4, 2, 1, 3), 2) == (0, 1, 0, 1)
    assert cb.s_vector((4, 2, 1, 3), 4) == (1, 1, 1, 1)


def test_s_set_examples():
    pi = (4, 2, 1, 3)
    assert cb.s_set(pi, 1) == {1, 2, 3, 4}
    assert cb.s_set(pi, 3) == {1, 3}
    assert cb.s_set(pi, 4) == {3}
    assert cb.s_complement(pi, 3) == {2, 4}


def test_step_line_examples():
    assert cb.step_line_multiindex(0, 3) == (0, 0, 0)
    assert cb.step_line_multiindex(4, 3) == (2, 1, 1)
    assert cb.step_line_multiindex(5, 2) == (3, 2)
    assert cb.step_line_permutation(0, 3) == (3, 2, 1)
    assert cb.step_line_permutation(2, 3) == (2, 1, 3)
    assert cb.step_line_permutation(1, 2) == (1, 2)


def test_extended_alpha_examples():
    alphas = (F(0), F(1, 2))
    assert cb.extended_alpha(alphas, 0) == -1
    assert cb.extended_alpha(alphas, 3) == alphas[0] + 1
    assert cb.extended_alpha(alphas, 6) == F(5, 2)


def test_validation():
    with pytest.raises(ValueError):
        cb.permutation((1, 1, 2))
    with pytest.raises(ValueError):
        cb.multi_index((1, -1))
    with pytest.raises(IndexOutOfRange):
        cb.unit(2, 3)
    with pytest.raises(IndexOutOfRange):
        cb.s_vector((1, 2), 3)
    with pytest.raises(IndexOutOfRange):
        cb.step_line_multiindex(-1, 2)


@given(perms())
def test_s_vectors_grow_by_one_unit(pi):
    p = len(pi)
    for j in range(1, p + 1):
        diff = cb.sub(cb.s_vector(pi, j), cb.s_vector(pi, j - 1))
        assert diff == cb.unit(p, pi[j - 1])


@given(perms())
def test_s_set_is_not_yet_decremented(pi):
    p = len(pi)
    for j in range(1, p + 1):
        assert cb.s_set(pi, j) == {i for i in range(1, p + 1) if cb.s_vector(pi, j - 1)[i - 1] == 0}
        assert len(cb.s_set(pi, j)) == p - j + 1


@given(perms())
def test_inverse(pi):
    inv = cb.inverse(pi)
    assert tuple(pi[inv[i] - 1] for i in range(len(pi))) == cb.identity(len(pi))


@given(st.integers(1, 6), st.integers(0, 60))
def test_step_line_walk(p, n):
    """Successive step-line points differ by one unit, and walking back follows the permutation."""
    here = cb.step_line_multiindex(n, p)
    assert sum(here) == n
    assert max(here) - min(here) <= 1
    nxt = cb.step_line_multiindex(n + 1, p)
    assert sum(1 for a, b in zip(here, nxt) if a != b) == 1
    k = n % p
    pi = cb.step_line_permutation(k, p)
    for j in range(p + 1):
        back = cb.sub(here, cb.s_vector(pi, j))
        if n - j >= 0:
            assert back == cb.step_line_multiindex(n - j, p)


@given(st.integers(1, 4), st.integers(0, 5))
def test_multi_indices_enumeration(p, w):
    got = list(cb.multi_indices(p, w))
    assert len(got) == len(set(got))
    assert all(sum(n) <= w for n in got)
    assert [sum(n) for n in got] == sorted(sum(n) for n in got)
    assert len(list(cb.box(p, 2))) == 3**p


def test_boundary_admissible_examples():
    assert cb.boundary_admissible((1, 0), (1, 2))
    assert not cb.boundary_admissible((1, 0), (2, 1))
    assert cb.boundary_admissible((0, 0), (2, 1))
    assert cb.boundary_admissible((2, 3), (2, 1))


@given(perms(max_p=4), st.data())
def test_boundary_admissible_means_zero_entries_last(pi, data):
    p = len(pi)
    n = tuple(data.draw(st.integers(0, 2)) for _ in range(p))
    zeros_positions = [pos for pos, i in enumerate(pi) if n[i - 1] == 0]
    nonzero_positions = [pos for pos, i in enumerate(pi) if n[i - 1] != 0]
    expected = not zeros_positions or not nonzero_positions or min(zeros_positions) > max(nonzero_positions)
    assert cb.boundary_admissible(n, pi) == expected
