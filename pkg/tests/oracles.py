"""Independent brute-force oracles used to cross-check the library.

Nothing here goes through the algebra or certificate code paths: tallies are
naive double loops, counts come from closed formulas computed on the spot.
"""
from __future__ import annotations

from typing import Dict, Sequence

from rshds.groups import FiniteGroup


def naive_difference_tally(group: FiniteGroup, elements: Sequence[int]) -> Dict[int, int]:
    """Multiset {x y^-1 : x, y in D} tallied by two explicit loops."""
    counts: Dict[int, int] = {}
    elems = list(elements)
    for x in elems:
        for y in elems:
            g = group.mul(x, group.inv(y))
            counts[g] = counts.get(g, 0) + 1
    return counts


def naive_product_tally(
    group: FiniteGroup, left: Sequence[int], right: Sequence[int]
) -> Dict[int, int]:
    """Multiset {x y : x in A, y in B}."""
    counts: Dict[int, int] = {}
    for x in left:
        for y in right:
            g = group.mul(x, y)
            counts[g] = counts.get(g, 0) + 1
    return counts


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


# A Latin square of order 5 with two-sided identity at 0 that is not a group:
# associativity fails, e.g. at the triple (1, 1, 2).
NONASSOCIATIVE_LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]
