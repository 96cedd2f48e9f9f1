import pytest

from pxk.permgroup import (
    GroupError,
    Permutation,
    PermutationGroup,
    classify_symmetric_product,
    describe,
    symmetric_group,
)


def test_permutation_basics():
    p = Permutation.parse("(1 4 2)")
    assert p(1) == 4 and p(4) == 2 and p(2) == 1 and p(7) == 7
    assert str(p) == "(1 4 2)" and str(p.inverse()) == "(1 2 4)"
    assert p.order() == 3 and not p.is_transposition()
    assert str(Permutation()) == "()"
    assert Permutation.parse("(1 2) (3 4)") == Permutation.parse("(1 2)(3 4)")
    assert Permutation.parse("()").is_identity()


def test_left_to_right_product():
    a = Permutation.parse("(1 2)")
    b = Permutation.parse("(2 3)")
    # a first, then b: 1 -> 2 -> 3
    assert (a * b)(1) == 3


def test_cycle_normal_form():
    p = Permutation.from_cycles([(5, 3), (4, 2, 6)])
    assert str(p) == "(2 6 4)(3 5)"


def test_group_orders():
    assert PermutationGroup([1, 2, 3]).order == 1
    assert PermutationGroup(["v", "w"], [Permutation({"v": "w", "w": "v"})]).order == 2
    c3 = PermutationGroup([1, 2, 4], [Permutation.parse("(1 4 2)")])
    assert c3.order == 3 and c3.contains(Permutation.parse("(1 2 4)"))
    assert symmetric_group([1, 2, 3]).order == 6


def test_subgroups_and_equality():
    s3 = symmetric_group([1, 2, 3])
    triv = PermutationGroup([1, 2, 3])
    assert triv.is_subgroup(s3) and not s3.is_subgroup(triv)
    assert s3 == PermutationGroup([1, 2, 3], [Permutation.parse("(1 2)"), Permutation.parse("(2 3)")])
    with pytest.raises(GroupError):
        s3.equal(PermutationGroup([1, 2]))


def test_generator_outside_ground():
    with pytest.raises(GroupError):
        PermutationGroup([1, 2], [Permutation.parse("(1 3)")])


def test_classification():
    assert classify_symmetric_product(PermutationGroup([1, 2, 3])) == (1, 1, 1)
    assert classify_symmetric_product(symmetric_group([1, 2, 3])) == (3,)
    c3 = PermutationGroup([1, 2, 4], [Permutation.parse("(1 4 2)")])
    assert classify_symmetric_product(c3) is None
    assert describe(c3) == "cyclic of order 3"
    two_two = PermutationGroup([1, 2, 3, 4], [Permutation.parse("(1 2)"), Permutation.parse("(3 4)")])
    assert classify_symmetric_product(two_two) == (2, 2)
    # orbit sizes (2, 2) but order 2: not a product
    diag = PermutationGroup([1, 2, 3, 4], [Permutation.parse("(1 2) (3 4)")])
    assert classify_symmetric_product(diag) is None
