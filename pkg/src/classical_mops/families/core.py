"""Family-generic entry points; each family module registers its implementations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from typing import Sequence

import mpmath

from .. import combinatorics as cb
from ..errors import IndexOutOfRange, InvalidParams
from ..polynomial import Polynomial


@dataclass(frozen=True)
class NNCoefficients:
    """``b0`` is ``b^0_n(k)``; ``bj[j-1]`` is ``b^j_n`` for ``j = 1..p``."""

    b0: mpmath.mpf
    bj: tuple

    def component(self, j: int):
        return self.b0 if j == 0 else self.bj[j - 1]

    def as_list(self) -> list:
        return [self.b0, *self.bj]


def check_multi_index(params, n: Sequence[int]) -> tuple[int, ...]:
    n = tuple(int(v) for v in n)
    if len(n) != params.p:
        raise InvalidParams(f"multi-index {n} has {len(n)} entries, family has p={params.p}")
    if not cb.is_valid(n):
        raise InvalidParams(f"multi-index {n} has a negative entry")
    return n


def check_weight_index(params, i: int) -> int:
    if not 1 <= i <= params.p:
        raise IndexOutOfRange(f"weight index {i} outside 1..{params.p}")
    return i


def check_permutation(params, pi: Sequence[int]) -> cb.Permutation:
    pi = cb.permutation(pi)
    if len(pi) != params.p:
        raise InvalidParams(f"permutation {pi} does not act on 1..{params.p}")
    return pi


def _unregistered(params, *_args):
    raise TypeError(f"unsupported family parameters: {type(params).__name__}")


@singledispatch
def moment(params, i: int, k: int) -> mpmath.mpf:
    """``integral of x**k w_i(x) dmu(x)`` over the family's support."""
    return _unregistered(params)


@singledispatch
def type_ii_coefficients(params, n) -> Polynomial:
    """Monic type II polynomial ``B_n`` in the monomial basis."""
    return _unregistered(params)


@singledispatch
def type_i_coefficients(params, n, i: int) -> Polynomial:
    """Type I polynomial ``A^(i)_n``; zero when ``n_i = 0``."""
    return _unregistered(params)


@singledispatch
def nn_coefficients(params, n, k: int, pi) -> NNCoefficients:
    """Nearest-neighbour recurrence coefficients at ``n`` for direction ``k`` and order ``pi``."""
    return _unregistered(params)


@singledispatch
def step_line_coefficients(params, n: int, j: int) -> mpmath.mpf:
    """``b^j_n`` along the step line (zero when ``n - j < 0`` for ``j >= 1``)."""
    return _unregistered(params)


def type_i_all(params, n) -> list[Polynomial]:
    return [type_i_coefficients(params, n, i) for i in range(1, params.p + 1)]


def step_line_split(n: int, p: int, j: int) -> tuple[int, int]:
    if n < 0:
        raise IndexOutOfRange(f"step-line index {n} is negative")
    if not 0 <= j <= p:
        raise IndexOutOfRange(f"j={j} outside 0..{p}")
    return divmod(n, p)
