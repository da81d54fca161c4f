"""Smoke test for the lrtables Python extension.

Build and install first:  pip install --no-build-isolation ./crates/python
Then run:                 python python/smoke_test.py
"""

import lrtables
from lrtables import GlWeight, Partition


def main():
    lam = Partition([2, 1])
    assert lam.parts == [2, 1] and lam.size() == 3
    assert lam.conjugate() == Partition([2, 1])
    assert Partition([3, 0, 0]) == Partition([3])
    assert str(Partition([3, 1])) == "[3,1]"

    w = GlWeight([3, 1, 0, 0, -2])
    assert w.plus == Partition([3, 1]) and w.minus == Partition([2]) and w.rank == 5
    assert GlWeight.parse(str(w)) == w
    assert w.dual().to_tuple() == [2, 0, 0, -1, -3]

    assert lrtables.lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2
    assert lrtables.multi_lr([2, 1, 1], [[1]] * 4) == 3
    product = lrtables.schur_product([1], [1])
    assert product == {Partition([2]): 1, Partition([1, 1]): 1}

    adjoint = [1, 0, 0, 0, 0, -1]
    assert lrtables.lrc_zero([adjoint] * 3) == 2
    assert lrtables.oracle_gl_invariants([adjoint] * 3) == 2
    assert lrtables.lrc_general([2, 0, 0, 0], [[1, 0, 0, 0], [1, 0, 0, 0]]) == 1
    tables = lrtables.enumerate_lrct([adjoint] * 3)
    assert len(tables) == 2 and all(norm == 1 for _, norm in tables)

    ones = [[1]] * 3
    assert lrtables.hom_dimension(ones, ones, 6) == 6
    assert lrtables.count_tables([1, 1, 1, 1], hollow=True) == 9
    assert lrtables.count_tables([2, 2, 2, 2], hollow=True, symmetric=True) == 6

    assert lrtables.osp_invariant_dim([[1]] * 4) == 3
    assert lrtables.osp_invariant_dim([[1]] * 3, n=6, group="sp") == 0
    assert lrtables.oracle_osp_invariants([[1]] * 4) == 3
    assert lrtables.hook_identity_check(2, 7)

    # big values stay exact
    assert lrtables.hom_dimension([[1]] * 9, [[1]] * 9, 18) == 362880

    try:
        lrtables.osp_invariant_dim([[1], [1]], n=3, group="sp")
    except lrtables.OutsideStableRange as e:
        assert "Sp_2n" in str(e)
    else:
        raise AssertionError("expected OutsideStableRange")
    try:
        GlWeight([1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
