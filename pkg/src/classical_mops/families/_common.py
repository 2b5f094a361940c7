"""Small numeric helpers shared by the family modules."""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import mpmath

from ..arith import to_real


def reals(values) -> list[mpmath.mpf]:
    return [to_real(v) for v in values]


def rising(x: mpmath.mpf, n: int) -> mpmath.mpf:
    out = mpmath.mpf(1)
    for j in range(n):
        out *= x + j
    return out


def rising_table(x: mpmath.mpf, upto: int) -> list[mpmath.mpf]:
    """``[(x)_0, ..., (x)_upto]``."""
    out = [mpmath.mpf(1)]
    for j in range(upto):
        out.append(out[-1] * (x + j))
    return out


def signed_binomial(n: int, l: int) -> int:
    """``(-n)_l / l!``."""
    return (-1) ** l * math.comb(n, l)


def bounded_indices(bounds: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors with ``0 <= l_q <= bounds[q]`` and ``sum(l) <= total``, lexicographically."""
    for ls in itertools.product(*(range(min(b, total) + 1) for b in bounds)):
        if sum(ls) <= total:
            yield ls


def suffix_sums(ls: Sequence[int]) -> list[int]:
    """``[L_1, ..., L_p, 0]`` with ``L_q = l_q + ... + l_p``."""
    out = [0] * (len(ls) + 1)
    for q in range(len(ls) - 1, -1, -1):
        out[q] = out[q + 1] + ls[q]
    return out


def prod(values) -> mpmath.mpf:
    out = mpmath.mpf(1)
    for v in values:
        out *= v
    return out
