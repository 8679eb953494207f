"""Highest-weight orders on multipartitions.

Two orders drive the theory: the coarse one compares total c-values,
the fine one asks for a box-by-box matching.  The fine order refines the
coarse one, which the test suite checks exhaustively on small ranks.
"""

from __future__ import annotations

from .params import CherednikParams, CValue, C_ZERO, cvalue_integer_difference
from .partitions import Multipartition


def c_lambda(lam: Multipartition, params: CherednikParams) -> CValue:
    total = C_ZERO
    for b in lam.boxes():
        total = total + params.c_of_box(b)
    return total


def leq_c(tau: Multipartition, xi: Multipartition, params: CherednikParams) -> bool:
    """tau <=_c xi: equality, or c_tau - c_xi a strictly positive integer."""
    if tau == xi:
        return True
    d = cvalue_integer_difference(c_lambda(tau, params), c_lambda(xi, params), params.kappa)
    return d is not None and d > 0


def box_leq(b1, b2, params: CherednikParams) -> bool:
    """b1 <= b2 in the box order: equivalent boxes whose c-difference
    c_{b1} - c_{b2} is a nonnegative integer (smaller boxes have the
    larger c-value)."""
    if not params.box_equivalent(b1, b2):
        return False
    d = cvalue_integer_difference(params.c_of_box(b1), params.c_of_box(b2), params.kappa)
    return d is not None and d >= 0


def preceq(lam: Multipartition, lam2: Multipartition, params: CherednikParams) -> bool:
    """lam precedes lam2 when their boxes admit a perfect matching with
    every box of lam below its partner in the box order."""
    if lam.size != lam2.size:
        return False
    left = list(lam.boxes())
    right = list(lam2.boxes())
    adj = [
        [j for j, b2 in enumerate(right) if box_leq(b1, b2, params)] for b1 in left
    ]
    return _max_bipartite_matching(adj, len(right)) == len(left)


def _max_bipartite_matching(adj: list[list[int]], n_right: int) -> int:
    match_right = [-1] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    count = 0
    for i in range(len(adj)):
        if augment(i, [False] * n_right):
            count += 1
    return count
