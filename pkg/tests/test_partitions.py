import pytest

from osclines.partitions import (
    ShapeError,
    as_partition,
    box_complement,
    conjugate,
    contains,
    fits_box,
    partitions_in_box,
    weight,
)


def all_partitions_of(wt):
    return list(partitions_in_box(wt, wt, wt))


def test_as_partition_normalizes():
    assert as_partition([3, 2, 0, 0]) == (3, 2)
    assert as_partition([]) == ()
    assert as_partition((1, 1, 1)) == (1, 1, 1)


def test_as_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((2, 1)) == (2, 1)


def test_conjugate_involution_up_to_weight_20():
    for wt in range(21):
        for p in all_partitions_of(wt):
            assert conjugate(conjugate(p)) == p
            assert weight(conjugate(p)) == wt


def test_box_complement_examples():
    assert box_complement((), 2, 2) == (2, 2)
    assert box_complement((1,), 2, 2) == (2, 1)
    assert box_complement((2, 2), 2, 2) == ()


def test_box_complement_involution():
    for rows, cols in [(2, 2), (2, 3), (3, 3), (2, 5)]:
        for wt in range(rows * cols + 1):
            for p in partitions_in_box(rows, cols, wt):
                q = box_complement(p, rows, cols)
                assert fits_box(q, rows, cols)
                assert box_complement(q, rows, cols) == p
                assert weight(p) + weight(q) == rows * cols


def test_box_complement_shape_error():
    with pytest.raises(ShapeError):
        box_complement((3,), 2, 2)
    with pytest.raises(ShapeError):
        box_complement((1, 1, 1), 2, 2)


def test_partitions_in_box_counts():
    # all partitions inside a 2x2 box: (), (1), (2), (1,1), (2,1), (2,2)
    total = sum(len(list(partitions_in_box(2, 2, w))) for w in range(5))
    assert total == 6


def test_contains():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (1, 1, 1))
