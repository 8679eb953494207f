"""Crystal operators on multipartitions via the signature rule.

For a residue z, the addable and removable z-boxes are listed in
ascending c-value (the "decreasing box order": smaller boxes carry the
larger c) with + for addable and - for removable.  Erasing consecutive
"-+" pairs leaves a reduced word "+...+-...-"; the raising operator
removes the box of the leftmost -, the lowering operator adds the box of
the rightmost +.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import AmbiguityError, InvalidInputError, UnsupportedParameterError
from .params import CherednikParams, Residue, c_sort_key
from .partitions import Box, Multipartition


def _check_crystal_params(params: CherednikParams) -> None:
    if params.kappa.is_rational and params.kappa.e == 1:
        raise UnsupportedParameterError(
            "integer kappa (denominator 1) has no crystal structure here"
        )


@dataclass(frozen=True)
class Signature:
    residue: Residue
    entries: tuple[tuple[Box, str], ...]

    @property
    def word(self) -> str:
        return "".join(sign for _, sign in self.entries)


def relevant_residues(
    lam: Multipartition,
    params: CherednikParams,
    addable: bool = True,
    removable: bool = True,
) -> list[Residue]:
    """Residues carried by the addable/removable boxes of lam, sorted."""
    seen = set()
    if addable:
        seen.update(params.residue(b) for b in lam.addable_boxes())
    if removable:
        seen.update(params.residue(b) for b in lam.removable_boxes())
    return sorted(seen, key=lambda r: (r.class_id, r.value))


def z_signature(
    lam: Multipartition,
    z: Residue,
    params: CherednikParams,
    strict_ties: bool = False,
) -> Signature:
    _check_crystal_params(params)
    entries = [
        (b, "+") for b in lam.addable_boxes() if params.residue(b) == z
    ] + [(b, "-") for b in lam.removable_boxes() if params.residue(b) == z]
    keyed = sorted(
        entries, key=lambda t: (c_sort_key(params.c_of_box(t[0]), params.kappa), t[0].comp)
    )
    if strict_ties:
        for (b1, _), (b2, _) in zip(keyed, keyed[1:]):
            k1 = c_sort_key(params.c_of_box(b1), params.kappa)
            k2 = c_sort_key(params.c_of_box(b2), params.kappa)
            if k1 == k2:
                raise AmbiguityError(
                    f"boxes {b1} and {b2} of {lam} share the c-value {k1}"
                )
    return Signature(z, tuple(keyed))


def reduce_signature(sig: Signature) -> Signature:
    stack: list[tuple[Box, str]] = []
    for entry in sig.entries:
        if entry[1] == "+" and stack and stack[-1][1] == "-":
            stack.pop()
        else:
            stack.append(entry)
    return Signature(sig.residue, tuple(stack))


def e_tilde(
    lam: Multipartition,
    z: Residue,
    params: CherednikParams,
    strict_ties: bool = False,
) -> Optional[Multipartition]:
    reduced = reduce_signature(z_signature(lam, z, params, strict_ties))
    for box, sign in reduced.entries:
        if sign == "-":
            return lam.remove_box(box)
    return None


def f_tilde(
    lam: Multipartition,
    z: Residue,
    params: CherednikParams,
    strict_ties: bool = False,
) -> Optional[Multipartition]:
    reduced = reduce_signature(z_signature(lam, z, params, strict_ties))
    for box, sign in reversed(reduced.entries):
        if sign == "+":
            return lam.add_box(box)
    return None


def is_singular(lam: Multipartition, params: CherednikParams) -> bool:
    """True when every raising operator kills lam."""
    _check_crystal_params(params)
    return all(
        e_tilde(lam, z, params) is None
        for z in relevant_residues(lam, params, addable=False)
    )


@lru_cache(maxsize=None)
def km_depth(lam: Multipartition, params: CherednikParams) -> int:
    """Length of the longest chain of raising operators from lam; the
    crystal is graded by size, so the recursion terminates."""
    _check_crystal_params(params)
    best = 0
    for z in relevant_residues(lam, params, addable=False):
        above = e_tilde(lam, z, params)
        if above is not None:
            best = max(best, 1 + km_depth(above, params))
    return best


@dataclass(frozen=True)
class CrystalGraph:
    params: CherednikParams
    nodes: tuple[Multipartition, ...]
    edges: tuple[tuple[Multipartition, Residue, Multipartition], ...]


def _node_key(lam: Multipartition):
    return (lam.size, lam.sort_key())


def _assemble_graph(
    params: CherednikParams,
    node_set: set[Multipartition],
    size_bound: int,
    strict_ties: bool = False,
) -> CrystalGraph:
    nodes = sorted(node_set, key=_node_key)
    if strict_ties:
        for lam in nodes:
            for z in relevant_residues(lam, params):
                z_signature(lam, z, params, strict_ties=True)
    edges = []
    for lam in nodes:
        if lam.size >= size_bound:
            continue
        for z in relevant_residues(lam, params, removable=False):
            target = f_tilde(lam, z, params)
            if target is not None and target in node_set:
                edges.append((lam, z, target))
    edges.sort(key=lambda t: (_node_key(t[0]), t[1].class_id, t[1].value))
    return CrystalGraph(params, tuple(nodes), tuple(edges))


def crystal_component(
    lam: Multipartition,
    params: CherednikParams,
    size_bound: int,
    strict_ties: bool = False,
) -> CrystalGraph:
    """Closure of lam under raising and lowering operators, with lowering
    stopped at the size bound."""
    _check_crystal_params(params)
    if size_bound < lam.size:
        raise InvalidInputError("size bound below the starting multipartition")
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        moves = []
        for z in relevant_residues(cur, params, addable=False):
            moves.append(e_tilde(cur, z, params))
        if cur.size < size_bound:
            for z in relevant_residues(cur, params, removable=False):
                moves.append(f_tilde(cur, z, params))
        for nxt in moves:
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return _assemble_graph(params, seen, size_bound, strict_ties)


def crystal_graph(
    level: int,
    n_max: int,
    params: CherednikParams,
    strict_ties: bool = False,
) -> CrystalGraph:
    """Full crystal on all multipartitions of the level up to size n_max."""
    from .partitions import enumerate_multipartitions

    _check_crystal_params(params)
    node_set = {
        lam
        for n in range(n_max + 1)
        for lam in enumerate_multipartitions(level, n)
    }
    return _assemble_graph(params, node_set, n_max, strict_ties)
