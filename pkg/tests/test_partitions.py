import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohzeta.partitions import Partition, column, rectangle, subpartitions

partitions = st.lists(st.integers(min_value=1, max_value=6), max_size=6).map(Partition.sorted_from)


def test_validation():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_examples():
    assert Partition((2, 1)).conjugate() == Partition((2, 1))
    assert Partition((1,)).complement(2, 2) == Partition((2, 1))
    assert Partition((3,)).half_split() == Partition((2, 1))
    assert Partition((2, 1)).duplicate() == Partition((2, 2, 1, 1))
    assert Partition((3, 1)).concat(Partition((2,))) == Partition((3, 2, 1))
    assert rectangle(2, 3) == Partition((2, 2, 2))
    assert column(3) == Partition((1, 1, 1))
    assert rectangle(0, 3) == Partition(())


def test_complement_requires_containment():
    with pytest.raises(ValueError):
        Partition((3,)).complement(2, 2)
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).complement(2, 2)


@given(partitions)
def test_conjugation(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions)
def test_descent_sizes(lam):
    assert lam.half_split().size == lam.size
    assert lam.duplicate().size == 2 * lam.size


@given(partitions)
def test_complement_is_an_involution(lam):
    m, n = max(lam, default=0), len(lam)
    assert lam.complement(m, n).complement(m, n) == lam


def test_subpartitions():
    subs = list(subpartitions(Partition((2, 1))))
    assert set(subs) == {Partition(()), Partition((1,)), Partition((2,)), Partition((1, 1)), Partition((2, 1))}
    assert len(subs) == len(set(subs))
    # lattice paths in a 3x3 box
    assert len(list(subpartitions(rectangle(3, 3)))) == 20
