"""Built-in invariant suites behind the `selftest` subcommand.

Each check is a small assertion bundle over exhaustively enumerated
small inputs.  `quick` keeps every suite within a few seconds; `full`
widens the enumeration bounds.  The runner prints one line per check
and reports the failure count, so the CLI can exit nonzero on any red.
"""

from __future__ import annotations

import traceback
from fractions import Fraction
from typing import Callable

from .crystal import e_tilde, f_tilde, is_singular, km_depth, relevant_residues
from .fock import (
    b_minus_op,
    b_plus_op,
    basis_vector,
    e_z_op,
    embed_to_charged,
    f_z_op,
    inner_product,
    operator_matrix,
    plethysm_class,
    singular_subspace,
    wedge_f_op,
)
from .orders import leq_c, preceq
from .params import ChargeDifferenceWall, make_params
from .partitions import (
    Multipartition,
    Partition,
    divide_with_remainder,
    divide_with_remainder_search,
    enumerate_multipartitions,
    enumerate_partitions,
)
from .supports import WallCrossStep, support, wall_cross

GOLDEN = make_params(2, Fraction(-1, 2), [0, -1])


def _all_multipartitions(level: int, max_size: int):
    for n in range(max_size + 1):
        yield from enumerate_multipartitions(level, n)


def _sample_params(level: int):
    if level == 1:
        return [
            make_params(1, Fraction(-1, 2), [0]),
            make_params(1, Fraction(-1, 3), [0]),
        ]
    return [
        GOLDEN,
        make_params(2, Fraction(-1, 3), [0, 1]),
        make_params(2, None, [(0, 0), (1, 1)]),
    ]


def check_golden_signature(full: bool) -> None:
    from .crystal import reduce_signature, z_signature
    from .params import Residue

    lam = Multipartition([[2, 2], [3, 1, 1, 1]])
    z = Residue(0, 0)
    sig = z_signature(lam, z, GOLDEN)
    assert sig.word == "++-+-", sig.word
    assert reduce_signature(sig).word == "++-"
    assert e_tilde(lam, z, GOLDEN) == Multipartition([[2, 2], [3, 1, 1]])
    assert f_tilde(lam, z, GOLDEN) == Multipartition([[3, 2], [3, 1, 1, 1]])


def check_crystal_axioms(full: bool) -> None:
    bound = 5 if full else 4
    for level in (1, 2):
        for params in _sample_params(level):
            for lam in _all_multipartitions(level, bound):
                for z in relevant_residues(lam, params):
                    up = e_tilde(lam, z, params)
                    if up is not None:
                        assert up.size == lam.size - 1
                        assert f_tilde(up, z, params) == lam
                    down = f_tilde(lam, z, params)
                    if down is not None:
                        assert down.size == lam.size + 1
                        assert e_tilde(down, z, params) == lam


def check_level1_singular(full: bool) -> None:
    bound = 8 if full else 6
    for e in (2, 3):
        params = make_params(1, Fraction(-1, e), [0])
        for lam in _all_multipartitions(1, bound):
            divisible = all(part % e == 0 for part in lam.component(0).parts)
            assert is_singular(lam, params) == divisible, (lam, e)


def check_division(full: bool) -> None:
    bound = 12 if full else 8
    assert divide_with_remainder(Partition([7, 3, 1]), 3) == (
        Partition([1]),
        Partition([4, 3, 1]),
    )
    for n in range(bound + 1):
        for nu in enumerate_partitions(n):
            for e in (2, 3, 4):
                assert divide_with_remainder(nu, e) == divide_with_remainder_search(nu, e)


def check_heisenberg_models(full: bool) -> None:
    bound = 8 if full else 5
    for level, params in ((1, make_params(1, Fraction(-1, 2), [0])), (2, GOLDEN)):
        e = params.kappa.e
        for lam in _all_multipartitions(level, bound):
            for d in (1, 2):
                v = basis_vector(lam, lam.size + d * e)
                assert b_plus_op(v, d, params, "ribbon") == b_plus_op(
                    v, d, params, "wedge"
                ), (lam, d)
                assert b_minus_op(v, d, params, "ribbon") == b_minus_op(
                    v, d, params, "wedge"
                ), (lam, d)


def check_heisenberg_commutator(full: bool) -> None:
    bound = 5 if full else 4
    for level, params in ((1, make_params(1, Fraction(-1, 2), [0])), (2, GOLDEN)):
        e = params.kappa.e
        for d in (1, 2):
            for lam in _all_multipartitions(level, bound):
                v = basis_vector(lam, lam.size + d * e)
                lhs = b_minus_op(b_plus_op(v, d, params), d, params) - b_plus_op(
                    b_minus_op(v, d, params), d, params
                )
                assert lhs == v.scale(d * e * level), (lam, d)


def check_order_refinement(full: bool) -> None:
    bound = 5 if full else 4
    for level in (1, 2):
        for params in _sample_params(level):
            for n in range(bound + 1):
                basis = enumerate_multipartitions(level, n)
                for lam in basis:
                    for mu in basis:
                        if preceq(lam, mu, params):
                            assert leq_c(lam, mu, params), (lam, mu)


def check_support_table(full: bool) -> None:
    params = make_params(1, Fraction(-1, 2), [0])
    rows = {
        lam: support(lam, params) for lam in enumerate_multipartitions(1, 2)
    }
    two = rows[Multipartition([[2]])]
    assert (two.p, two.q, two.dim_support, two.finite_dimensional) == (0, 1, 0, True)
    col = rows[Multipartition([[1, 1]])]
    assert (col.p, col.q, col.dim_support, col.finite_dimensional) == (2, 0, 1, False)


def check_wallcross_bijection(full: bool) -> None:
    bound = 4 if full else 3
    params = make_params(2, None, [(0, 0), (0, 0)])
    step = WallCrossStep(ChargeDifferenceWall(0, 1, 0))
    for n in range(bound + 1):
        basis = enumerate_multipartitions(2, n)
        images = [wall_cross(lam, step, params) for lam in basis]
        assert sorted(i.sort_key() for i in images) == sorted(
            b.sort_key() for b in basis
        )
        for lam, image in zip(basis, images):
            assert image.size == lam.size


def check_fock_matrix(full: bool) -> None:
    params = make_params(1, Fraction(-1, 2), [0])
    rows, cols, entries = operator_matrix(
        lambda v: b_plus_op(v, 1, params), 1, 0, 2
    )
    assert cols == [Multipartition([[]])]
    coeffs = {rows[r].components[0]: val for (r, c), val in entries.items()}
    assert coeffs == {Partition([2]): 1, Partition([1, 1]): -1}


def check_plethysm_lowering(full: bool) -> None:
    for e in (2, 3):
        params = make_params(1, Fraction(-1, e), [0])
        vec = plethysm_class(Partition([1]), e)
        zs = {params.residue(b) for lam in vec.entries for b in lam.removable_boxes()}
        for z in zs:
            assert e_z_op(vec, z, params).is_zero(), (e, z)


def check_singular_dimension(full: bool) -> None:
    for e in (2, 3):
        params = make_params(1, Fraction(-1, e), [0])
        assert len(singular_subspace(1, 0, params)) == 1
        assert len(singular_subspace(1, 1, params)) == 0


def check_embed_intertwines(full: bool) -> None:
    bound = 4 if full else 3
    e = 2
    params = make_params(1, Fraction(-1, e), [0])
    charges = [bound + 1]
    for lam in _all_multipartitions(1, bound - 1):
        word = embed_to_charged(lam, charges)
        for z in relevant_residues(lam, params, removable=False):
            image = f_z_op(basis_vector(lam, bound), z, params)
            expected = {
                embed_to_charged(mu, charges): c for mu, c in image.entries.items()
            }
            content = (z.value + charges[0]) % e
            assert wedge_f_op(word, content, e) == expected, (lam, z)


def check_adjointness(full: bool) -> None:
    params = make_params(1, Fraction(-1, 2), [0])
    n, d = 3, 1
    e = params.kappa.e
    for lam in enumerate_multipartitions(1, n + d * e):
        for mu in enumerate_multipartitions(1, n):
            u = basis_vector(lam, n + d * e)
            v = basis_vector(mu, n + d * e)
            assert inner_product(b_minus_op(u, d, params), v) == inner_product(
                u, b_plus_op(v, d, params)
            )


CHECKS: list[tuple[str, Callable[[bool], None]]] = [
    ("golden-signature", check_golden_signature),
    ("crystal-axioms", check_crystal_axioms),
    ("level1-singular", check_level1_singular),
    ("division", check_division),
    ("heisenberg-models", check_heisenberg_models),
    ("heisenberg-commutator", check_heisenberg_commutator),
    ("order-refinement", check_order_refinement),
    ("support-table", check_support_table),
    ("wallcross-bijection", check_wallcross_bijection),
    ("fock-matrix", check_fock_matrix),
    ("plethysm-lowering", check_plethysm_lowering),
    ("singular-dimension", check_singular_dimension),
    ("embed-intertwines", check_embed_intertwines),
    ("adjointness", check_adjointness),
]


def run_selftest(depth: str = "quick", writer=print) -> int:
    """Run every check; returns the number of failures."""
    full = depth == "full"
    failures = 0
    for name, fn in CHECKS:
        try:
            fn(full)
        except Exception:
            failures += 1
            writer(f"FAIL {name}")
            writer(traceback.format_exc().rstrip())
        else:
            writer(f"ok   {name}")
    writer(f"{len(CHECKS) - failures}/{len(CHECKS)} checks passed ({depth})")
    return failures
