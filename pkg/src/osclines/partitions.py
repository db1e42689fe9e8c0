"""Integer partitions as plain tuples, with Young-diagram operations.

A partition is a weakly decreasing tuple of positive integers; trailing
zeros are never stored, so tuple equality is canonical equality.  The empty
tuple is the unique partition of 0.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Partition = tuple[int, ...]


class ShapeError(ValueError):
    """A partition does not fit the requested bounding box."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of row lengths into a partition tuple.

    Strips trailing zeros and validates the weakly decreasing invariant.
    """
    seq = tuple(int(x) for x in parts)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {seq}")
    if seq and seq[-1] < 0:
        raise ValueError(f"negative part in {seq}")
    return seq


def weight(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for row in p:
        for j in range(row):
            cols[j] += 1
    return tuple(cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """True if the diagram of `inner` sits inside the diagram of `outer`."""
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def fits_box(p: Partition, rows: int, cols: int) -> bool:
    return len(p) <= rows and (not p or p[0] <= cols)


def box_complement(p: Partition, rows: int, cols: int) -> Partition:
    """Reversed complement of `p` inside a rows x cols box.

    Involutive for fixed box; row i of the result is cols - p[rows-1-i].
    """
    if not fits_box(p, rows, cols):
        raise ShapeError(f"{p} does not fit a {rows}x{cols} box")
    padded = tuple(p) + (0,) * (rows - len(p))
    return as_partition(cols - padded[rows - 1 - i] for i in range(rows))


def partitions_in_box(rows: int, cols: int, wt: int) -> Iterator[Partition]:
    """All partitions of weight `wt` with at most `rows` parts, each <= `cols`."""
    if wt == 0:
        yield ()
        return
    if rows == 0 or wt > rows * cols:
        return

    def rec(remaining: int, max_part: int, slots: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        if slots == 0:
            return
        top = min(max_part, remaining)
        for first in range(top, 0, -1):
            if remaining - first > (slots - 1) * first:
                continue
            for rest in rec(remaining - first, first, slots - 1):
                yield [first] + rest

    for parts in rec(wt, cols, rows):
        yield tuple(parts)


def all_partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Every partition fitting the box, by increasing weight."""
    for wt in range(rows * cols + 1):
        yield from partitions_in_box(rows, cols, wt)
