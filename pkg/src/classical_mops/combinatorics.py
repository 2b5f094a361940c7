"""Multi-indices, subtraction orders and step-line bookkeeping.

Weight indices are 1-based throughout, so ``e(3, 1)`` is ``(1, 0, 0)`` and a
permutation is the tuple of its images ``(pi(1), ..., pi(p))``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import IndexOutOfRange

MultiIndex = tuple[int, ...]
Permutation = tuple[int, ...]


def multi_index(entries: Sequence[int]) -> MultiIndex:
    n = tuple(int(v) for v in entries)
    if not n:
        raise ValueError("a multi-index needs at least one entry")
    if any(v < 0 for v in n):
        raise ValueError(f"multi-index entries must be non-negative: {n}")
    return n


def weight(n: Sequence[int]) -> int:
    return sum(n)


def is_valid(n: Sequence[int]) -> bool:
    """False when some entry is negative (the corresponding polynomial is zero)."""
    return all(v >= 0 for v in n)


def unit(p: int, k: int) -> MultiIndex:
    if not 1 <= k <= p:
        raise IndexOutOfRange(f"weight index {k} outside 1..{p}")
    return tuple(1 if q == k else 0 for q in range(1, p + 1))


def add(n: Sequence[int], m: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(n, m, strict=True))


def sub(n: Sequence[int], m: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(n, m, strict=True))


def permutation(images: Sequence[int]) -> Permutation:
    pi = tuple(int(v) for v in images)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{len(pi)}")
    return pi


def identity(p: int) -> Permutation:
    return tuple(range(1, p + 1))


def reverse(p: int) -> Permutation:
    return tuple(range(p, 0, -1))


def inverse(pi: Permutation) -> Permutation:
    inv = [0] * len(pi)
    for pos, img in enumerate(pi, start=1):
        inv[img - 1] = pos
    return tuple(inv)


def s_vector(pi: Permutation, j: int) -> MultiIndex:
    """``s_j = e_{pi(1)} + ... + e_{pi(j)}``, with ``s_0 = 0``."""
    p = len(pi)
    if not 0 <= j <= p:
        raise IndexOutOfRange(f"j={j} outside 0..{p}")
    hit = set(pi[:j])
    return tuple(1 if q in hit else 0 for q in range(1, p + 1))


def s_set(pi: Permutation, j: int) -> frozenset[int]:
    """Indices not yet decremented after ``j-1`` steps: ``{i : j <= pi^{-1}(i)}``."""
    p = len(pi)
    if not 1 <= j <= p:
        raise IndexOutOfRange(f"j={j} outside 1..{p}")
    inv = inverse(pi)
    return frozenset(i for i in range(1, p + 1) if j <= inv[i - 1])


def s_complement(pi: Permutation, j: int) -> frozenset[int]:
    return frozenset(range(1, len(pi) + 1)) - s_set(pi, j)


def step_line_multiindex(n: int, p: int) -> MultiIndex:
    """``n = p*m + k`` maps to ``(m+1,)*k + (m,)*(p-k)``."""
    if p < 1:
        raise ValueError("p must be positive")
    if n < 0:
        raise IndexOutOfRange(f"step-line index {n} is negative")
    m, k = divmod(n, p)
    return (m + 1,) * k + (m,) * (p - k)


def step_line_permutation(k: int, p: int) -> Permutation:
    """Order in which walking back along the step line from ``p*m + k`` decrements entries.

    First the ``m+1`` block from position ``k`` down to 1, then the ``m``
    block from ``p`` down to ``k+1``.
    """
    if not 0 <= k < p:
        raise IndexOutOfRange(f"k={k} outside 0..{p - 1}")
    return tuple(range(k, 0, -1)) + tuple(range(p, k, -1))


def extended_alpha(alphas: Sequence, q: int):
    """``alpha_0 = -1`` and ``alpha_{a*p + r + 1} = alpha_{r+1} + a`` for ``q >= 1``."""
    if q < 0:
        raise IndexOutOfRange(f"q={q} must be non-negative")
    if q == 0:
        return -1
    a, r = divmod(q - 1, len(alphas))
    return alphas[r] + a


def multi_indices(p: int, max_weight: int, min_weight: int = 0) -> Iterator[MultiIndex]:
    """Every ``n`` in ``N_0^p`` with ``min_weight <= |n| <= max_weight``, by weight then lexicographically."""
    for w in range(min_weight, max_weight + 1):
        for n in itertools.product(range(w + 1), repeat=p):
            if sum(n) == w:
                yield n


def box(p: int, max_entry: int) -> Iterator[MultiIndex]:
    """Every ``n`` with all entries in ``0..max_entry``."""
    return itertools.product(range(max_entry + 1), repeat=p)


def componentwise_le(m: Sequence[int], n: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(m, n, strict=True))


def boundary_admissible(n: Sequence[int], pi: Permutation) -> bool:
    """True when every ``n - s_j`` with a negative entry has ``n_i = 0`` on all of ``S(pi, j)``.

    Equivalently ``pi`` decrements the zero entries of ``n`` last.  Only then
    do the coefficients ``b^j`` that multiply a polynomial below the lattice
    vanish, so the recurrence holds with the zero-polynomial convention.
    """
    for j in range(1, len(pi) + 1):
        if not is_valid(sub(n, s_vector(pi, j))) and any(n[i - 1] for i in s_set(pi, j)):
            return False
    return True
