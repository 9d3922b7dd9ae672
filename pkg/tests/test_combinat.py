import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from klrdecomp.combinat import (
    RESIDUE_ORDER,
    ROW_ORDER,
    ROW_REVERSED,
    ContentVector,
    EZero,
    LevelData,
    Multipartition,
    Node,
    addable_removable,
    blocks_of_height,
    content,
    defect,
    dominance_leq,
    enumerate_multipartitions,
    lex_cmp,
    order_leq,
    residue,
    transpose,
    uglov_bar,
)

from conftest import CONFIGS, blocks_upto, random_multipartition

MP = Multipartition


def test_level_validation():
    with pytest.raises(ValueError):
        LevelData(1, (0,))
    with pytest.raises(ValueError):
        LevelData(2, ())
    L = LevelData(3, (4, -1))
    assert L.charges == (1, 2)
    assert LevelData.from_json(json.loads(json.dumps(L.to_json()))) == L


def test_cartan():
    assert LevelData(2, (0,)).cartan(0, 1) == -2
    L = LevelData(3, (0,))
    assert (L.cartan(0, 0), L.cartan(0, 1), L.cartan(2, 0)) == (2, -1, -1)
    L = LevelData(0, (0,))
    assert (L.cartan(5, 5), L.cartan(5, 6), L.cartan(5, 7)) == (2, -1, 0)
    assert LevelData(4, (0,)).cartan(0, 2) == 0


def test_enumerate_examples():
    L2 = LevelData(2, (2, 0))
    assert enumerate_multipartitions(L2, height=1) == [MP([[], [1]]), MP([[1], []])]
    L = LevelData(2, (0,))
    alpha = ContentVector({0: 1, 1: 1})
    assert set(enumerate_multipartitions(L, alpha=alpha)) == {MP([[2]]), MP([[1, 1]])}
    assert enumerate_multipartitions(L, height=0) == [MP([[]])]
    with pytest.raises(ValueError):
        enumerate_multipartitions(L)


def test_residue_examples():
    assert residue(LevelData(3, (1, 2)), Node(4, 4, 2)) == 2
    assert residue(LevelData(2, (2, 0)), Node(1, 1, 2)) == 0
    assert residue(LevelData(2, (0,)), Node(2, 1, 1)) == 1
    assert residue(LevelData(0, (0,)), Node(3, 1, 1)) == -2


def test_content_examples():
    L = LevelData(2, (0,))
    assert content(L, MP([[]])) == ContentVector()
    assert content(L, MP([[2]])) == ContentVector({0: 1, 1: 1})
    assert content(LevelData(2, (2, 0)), MP([[1], [1]])) == ContentVector({0: 2})


def test_defect_examples():
    assert defect(LevelData(2, (0,)), ContentVector()) == 0
    assert defect(LevelData(2, (2, 0)), ContentVector({0: 1})) == 1
    assert defect(LevelData(2, (0,)), ContentVector({0: 1, 1: 1})) == 1


def test_addable_removable_examples():
    L = LevelData(2, (2, 0))
    assert addable_removable(L, MP([[], []]), 0, ROW_ORDER) == [
        (Node(1, 1, 1), "addable"), (Node(1, 1, 2), "addable")]
    L1 = LevelData(2, (0,))
    assert addable_removable(L1, MP([[1, 1]]), 0, ROW_ORDER) == [(Node(3, 1, 1), "addable")]
    assert addable_removable(L1, MP([[1]]), 1, ROW_ORDER) == [
        (Node(1, 2, 1), "addable"), (Node(2, 1, 1), "addable")]
    assert addable_removable(L1, MP([[1]]), 1, ROW_REVERSED) == [
        (Node(2, 1, 1), "addable"), (Node(1, 2, 1), "addable")]


def test_residue_order_breaks_ties_by_component():
    L = LevelData(0, (0, 0))
    got = addable_removable(L, MP([[], []]), 0, RESIDUE_ORDER)
    assert [n for n, _ in got] == [Node(1, 1, 2), Node(1, 1, 1)]


def test_multipartition_text_and_validation():
    lam = MP.parse("[[1,1,1],[]]")
    assert lam == MP([[1, 1, 1], []])
    assert str(lam) == "((1^3), ∅)"
    assert MP.from_json(lam.to_json()) == lam
    with pytest.raises(ValueError):
        MP([[1, 2]])
    with pytest.raises(ValueError):
        lam.add_node(Node(1, 3, 1))
    with pytest.raises(ValueError):
        lam.remove_node(Node(1, 1, 1))


def test_dominance_and_lex_examples():
    assert dominance_leq(MP([[1], [2]]), MP([[1, 1, 1], []]))
    lam = MP([[2, 1], [1]])
    assert dominance_leq(lam, lam)
    assert dominance_leq(MP([[1, 1]]), MP([[2]]))
    assert not dominance_leq(MP([[2]]), MP([[1, 1]]))
    assert not dominance_leq(MP([[1]]), MP([[2]]))
    assert lex_cmp(MP([[1, 1]]), MP([[2]])) == -1
    assert lex_cmp(lam, lam) == 0


def test_uglov_examples():
    L = LevelData(2, (11, 7, 2))
    assert uglov_bar(L, MP([[], [1, 1], []])) == (11, 7, 7, 5, 5, 5, 5, 2, 2, 2)
    assert uglov_bar(L, MP([[], [1], [1]])) == (11, 7, 7, 5, 4, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1)
    assert uglov_bar(LevelData(2, (4, 1)), MP([[1, 1, 1], []])) == (4, 2, 2, 1)
    with pytest.raises(EZero):
        uglov_bar(LevelData(0, (0,)), MP([[1]]))


def test_order_examples():
    L = LevelData(2, (4, 1))
    mu, lam = MP([[1, 1, 1], []]), MP([[1], [2]])
    assert order_leq(L, lam, mu) and not order_leq(L, mu, lam)
    assert order_leq(L, mu, mu)
    assert order_leq(LevelData(0, (0, 0)), MP([[], [2]]), MP([[2], []]))
    assert not order_leq(L, MP([[1], []]), MP([[], [1]]))  # different contents


def test_transpose_examples():
    assert transpose(MP([[], []])) == MP([[], []])
    assert transpose(MP([[2]])) == MP([[1, 1]])
    assert transpose(MP([[1], [2]])) == MP([[1, 1], [1]])


def test_content_vector_text():
    a = ContentVector.parse("0:1,1:2", e=2)
    assert a == ContentVector({0: 1, 1: 2})
    assert a.height == 3
    assert ContentVector.from_json(a.to_json()) == a
    assert ContentVector.parse("") == ContentVector()
    assert ContentVector.parse("3:1", e=2) == ContentVector({1: 1})
    with pytest.raises(ValueError):
        ContentVector({0: -1})


# -- properties -------------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(sorted(CONFIGS)))
def test_transpose_negates_residues(seed, name):
    L = CONFIGS[name]
    lam = random_multipartition(random.Random(seed), L.l, 7)
    negated = ContentVector({-i: n for i, n in content(L, lam).counts}, e=L.e)
    assert content(L.transpose(), transpose(lam)) == negated
    assert content(L, lam).height == lam.size


def test_uglov_injective_on_blocks():
    for L in (LevelData(2, (0, 1)), LevelData(3, (0, 0)), LevelData(2, (11, 7, 2))):
        for alpha in blocks_upto(L, 5):
            block = enumerate_multipartitions(L, alpha=alpha)
            assert len({uglov_bar(L, lam) for lam in block}) == len(block)


def test_defect_nonnegative_on_blocks(level):
    for alpha in blocks_upto(level, 6):
        assert defect(level, alpha) >= 0


def test_blocks_partition_all_multipartitions(level):
    for d in range(6):
        total = sum(len(enumerate_multipartitions(level, alpha=a)) for a in blocks_of_height(level, d))
        assert total == len(enumerate_multipartitions(level, height=d))
