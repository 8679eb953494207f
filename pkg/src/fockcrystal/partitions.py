"""Partitions, multipartitions, boxes, and border-strip moves.

Conventions used throughout the package:
  * partitions are weakly decreasing tuples of positive integers,
  * a box is a triple (x, y, comp) with x the column index, y the row
    index, both starting at 1, and comp the component index starting at 0,
  * the content of a box is x - y.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import InvalidInputError, InvalidMoveError


class Box(NamedTuple):
    x: int
    y: int
    comp: int

    @property
    def content(self) -> int:
        return self.x - self.y


class RibbonMove(NamedTuple):
    """One way of adding or removing a border strip.

    ``height`` is the number of rows spanned minus one and ``sign`` is
    (-1) ** height.
    """

    result: "Partition"
    height: int
    sign: int


class Partition:
    """An integer partition, stored as a tuple of positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise InvalidInputError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row(self, y: int) -> int:
        """Length of row y (1-based); zero beyond the last row."""
        return self.parts[y - 1] if 1 <= y <= len(self.parts) else 0

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            sum(1 for p in self.parts if p >= x) for x in range(1, self.parts[0] + 1)
        )

    def cells(self) -> Iterator[tuple[int, int]]:
        for y, p in enumerate(self.parts, start=1):
            for x in range(1, p + 1):
                yield (x, y)

    def addable_cells(self) -> list[tuple[int, int]]:
        """Cells (x, y) whose addition keeps the shape a partition, y ascending."""
        out = []
        for y in range(1, len(self.parts) + 2):
            above = self.row(y - 1) if y > 1 else None
            here = self.row(y)
            if above is None or here < above:
                out.append((here + 1, y))
        return out

    def removable_cells(self) -> list[tuple[int, int]]:
        out = []
        for y in range(1, len(self.parts) + 1):
            if self.row(y) > self.row(y + 1):
                out.append((self.row(y), y))
        return out

    def add_cell(self, x: int, y: int) -> "Partition":
        if (x, y) not in self.addable_cells():
            raise InvalidMoveError(f"cannot add cell {(x, y)} to {self.parts}")
        rows = list(self.parts)
        if y == len(rows) + 1:
            rows.append(1)
        else:
            rows[y - 1] += 1
        return Partition(rows)

    def remove_cell(self, x: int, y: int) -> "Partition":
        if (x, y) not in self.removable_cells():
            raise InvalidMoveError(f"cannot remove cell {(x, y)} from {self.parts}")
        rows = list(self.parts)
        rows[y - 1] -= 1
        return Partition(rows)


def _ribbon_additions(parts: tuple[int, ...], length: int) -> list[RibbonMove]:
    if length <= 0:
        raise InvalidInputError("ribbon length must be positive")
    lam = Partition(parts)
    moves = []
    for y2 in range(1, len(parts) + length + 1):
        for y1 in range(max(1, y2 - length + 1), y2 + 1):
            # row y1 of the result is forced by the total size; the rows
            # below it each start one column right of the previous row's end
            top = lam.row(y2) + length - (y2 - y1)
            if top <= lam.row(y1):
                continue
            if y1 > 1 and top > lam.row(y1 - 1):
                continue
            rows = list(parts) + [0] * max(0, y2 - len(parts))
            rows[y1 - 1] = top
            for y in range(y1 + 1, y2 + 1):
                rows[y - 1] = lam.row(y - 1) + 1
            moves.append(RibbonMove(Partition(rows), y2 - y1, (-1) ** (y2 - y1)))
    moves.sort(key=lambda m: m.result.parts, reverse=True)
    return moves


def _ribbon_removals(parts: tuple[int, ...], length: int) -> list[RibbonMove]:
    if length <= 0:
        raise InvalidInputError("ribbon length must be positive")
    lam = Partition(parts)
    moves = []
    for y2 in range(1, len(parts) + 1):
        for y1 in range(max(1, y2 - length + 1), y2 + 1):
            last = lam.row(y1) - length + (y2 - y1)
            if not (max(lam.row(y2 + 1), 0) <= last <= lam.row(y2) - 1):
                continue
            rows = list(parts)
            for y in range(y1, y2):
                rows[y - 1] = lam.row(y + 1) - 1
            rows[y2 - 1] = last
            moves.append(RibbonMove(Partition(rows), y2 - y1, (-1) ** (y2 - y1)))
    moves.sort(key=lambda m: m.result.parts, reverse=True)
    return moves


def ribbon_additions(p: Partition, length: int) -> list[RibbonMove]:
    """All partitions obtained from p by adding a border strip of the
    given length, with heights and signs."""
    return _ribbon_additions(p.parts, length)


def ribbon_removals(p: Partition, length: int) -> list[RibbonMove]:
    return _ribbon_removals(p.parts, length)


class Multipartition:
    """A tuple of partitions indexed by component 0 .. level-1."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(
            c if isinstance(c, Partition) else Partition(c) for c in components
        )
        if not comps:
            raise InvalidInputError("a multipartition needs at least one component")
        self.components = comps

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multipartition) and self.components == other.components
        )

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"Multipartition({[list(c.parts) for c in self.components]})"

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def component(self, i: int) -> Partition:
        return self.components[i]

    def boxes(self) -> Iterator[Box]:
        for i, c in enumerate(self.components):
            for x, y in c.cells():
                yield Box(x, y, i)

    def addable_boxes(self) -> list[Box]:
        return [
            Box(x, y, i)
            for i, c in enumerate(self.components)
            for x, y in c.addable_cells()
        ]

    def removable_boxes(self) -> list[Box]:
        return [
            Box(x, y, i)
            for i, c in enumerate(self.components)
            for x, y in c.removable_cells()
        ]

    def add_box(self, box: Box) -> "Multipartition":
        comps = list(self.components)
        comps[box.comp] = comps[box.comp].add_cell(box.x, box.y)
        return Multipartition(comps)

    def remove_box(self, box: Box) -> "Multipartition":
        comps = list(self.components)
        comps[box.comp] = comps[box.comp].remove_cell(box.x, box.y)
        return Multipartition(comps)

    def replace_component(self, i: int, p: Partition) -> "Multipartition":
        comps = list(self.components)
        comps[i] = p
        return Multipartition(comps)

    def transpose(self) -> "Multipartition":
        """Componentwise conjugate; component order is unchanged."""
        return Multipartition([c.transpose() for c in self.components])

    def sort_key(self):
        """Canonical order: earlier components first by larger size, then
        reverse lexicographically larger parts."""
        return tuple((-c.size, tuple(-p for p in c.parts)) for c in self.components)


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise InvalidInputError("cannot enumerate partitions of a negative integer")
    return [Partition(t) for t in _partition_tuples(n, n)]


def enumerate_multipartitions(level: int, n: int) -> list[Multipartition]:
    """All level-tuples of partitions of total size n, in the canonical
    order given by Multipartition.sort_key."""
    if level < 1:
        raise InvalidInputError("level must be at least 1")
    if n < 0:
        raise InvalidInputError("total size must be nonnegative")
    if level == 1:
        return [Multipartition([p]) for p in enumerate_partitions(n)]
    out = []
    for first in range(n, -1, -1):
        for head in enumerate_partitions(first):
            for tail in enumerate_multipartitions(level - 1, n - first):
                out.append(Multipartition((head,) + tail.components))
    return out


def divide_with_remainder(nu: Partition, e: int) -> tuple[Partition, Partition]:
    """Split nu = e * quot + rem (partwise) with quot and rem partitions,
    every column multiplicity of rem below e, and rem as large as possible.

    The remainder is built from the bottom row up: each row keeps as many
    cells as it can without its excess over the row below reaching e.
    """
    if e < 1:
        raise InvalidInputError("modulus must be a positive integer")
    rem_rows: list[int] = []
    below = 0
    for part in reversed(nu.parts):
        below += (part - below) % e
        rem_rows.append(below)
    rem_rows.reverse()
    rem = Partition(rem_rows)
    quot = Partition((p - r) // e for p, r in zip(nu.parts, rem_rows))
    return quot, rem


def divide_with_remainder_search(nu: Partition, e: int) -> tuple[Partition, Partition]:
    """Reference implementation of divide_with_remainder by direct search
    over all candidate quotients.  Exponential; for cross-checks only.
    """
    if e < 1:
        raise InvalidInputError("modulus must be a positive integer")
    best: tuple[Partition, Partition] | None = None
    for qsize in range(nu.size // e + 1):
        for quot in enumerate_partitions(qsize):
            if len(quot) > len(nu):
                continue
            qrows = quot.parts + (0,) * (len(nu) - len(quot))
            rem_rows = [p - e * q for p, q in zip(nu.parts, qrows)]
            if any(r < 0 for r in rem_rows):
                continue
            if any(
                rem_rows[i] < rem_rows[i + 1] for i in range(len(rem_rows) - 1)
            ):
                continue
            diffs = [
                rem_rows[i] - (rem_rows[i + 1] if i + 1 < len(rem_rows) else 0)
                for i in range(len(rem_rows))
            ]
            if any(d >= e for d in diffs):
                continue
            best = (quot, Partition(rem_rows))
            break
        if best:
            break
    assert best is not None, "remainder search must at least reach quot = nu div e"
    return best
