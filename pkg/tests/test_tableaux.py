import random

import pytest
from hypothesis import given, settings, strategies as st

from klrdecomp.combinat import (
    ContentVector,
    LevelData,
    Multipartition,
    Node,
    content,
    defect,
    enumerate_multipartitions,
    residue,
)
from klrdecomp.crystal import epsilon, phi
from klrdecomp.qint import ONE, LaurentPoly, q
from klrdecomp.tableaux import (
    BadNode,
    CharacterTable,
    StdTableau,
    branching_restrict,
    codegree,
    d_A,
    d_B,
    d_i,
    degree,
    dtilde_A,
    dtilde_B,
    graded_dim,
    graded_dim_table,
    node_stats,
    residue_sequence,
    specht_character,
    standard_tableaux,
)

from conftest import CONFIGS, blocks_upto, random_multipartition

MP = Multipartition
E2 = LevelData(2, (0,))
TWO_L0 = LevelData(2, (2, 0))


def test_standard_tableaux_examples():
    assert list(standard_tableaux(MP([[]]))) == [StdTableau(MP([[]]), ())]
    assert len(list(standard_tableaux(MP([[2]])))) == 1
    assert len(list(standard_tableaux(MP([[1], [1]])))) == 2
    assert len(list(standard_tableaux(MP([[3, 2]])))) == 5
    for T in standard_tableaux(MP([[2, 1], [2]])):
        assert T.is_standard()


def test_node_stat_examples():
    assert d_A(E2, MP([[2]]), Node(1, 2, 1)) == 1
    assert d_B(TWO_L0, MP([[], []]), Node(1, 1, 2)) == 1
    assert d_i(TWO_L0, MP([[], []]), 0) == 2
    assert node_stats(TWO_L0, MP([[], []]), "d_i", 0) == 2
    assert node_stats(E2, MP([[2]]), "d_A", Node(1, 2, 1)) == 1
    with pytest.raises(BadNode):
        d_A(E2, MP([[2]]), Node(1, 1, 1))
    with pytest.raises(BadNode):
        d_B(E2, MP([[2]]), Node(1, 2, 1))
    with pytest.raises(ValueError):
        node_stats(E2, MP([[2]]), "d_X", Node(1, 2, 1))


def test_degree_examples():
    (T,) = standard_tableaux(MP([[2]]))
    assert degree(E2, T) == 1
    assert residue_sequence(E2, T) == (0, 1)
    (T,) = standard_tableaux(MP([[1, 1]]))
    assert degree(E2, T) == 0
    assert residue_sequence(E2, T) == (0, 1)
    (T,) = standard_tableaux(MP([[]]))
    assert degree(E2, T) == 0 and residue_sequence(E2, T) == ()


def test_specht_examples():
    assert specht_character(E2, MP([[]])).rows == {(): ONE}
    assert specht_character(E2, MP([[2]])).rows == {(0, 1): q}
    assert specht_character(E2, MP([[1, 1]])).rows == {(0, 1): ONE}


def test_graded_dim_examples():
    assert graded_dim(TWO_L0, ContentVector({0: 1}), (0,), (0,)) == (1 + q * q, 1 + q * q)
    assert graded_dim(E2, ContentVector({0: 1, 1: 1}), (0, 1), (0, 1)) == (1 + q * q, 1 + q * q)
    assert graded_dim(E2, ContentVector(), (), ()) == (ONE, ONE)


def test_character_json_round_trip():
    ch = specht_character(LevelData(3, (0, 1)), MP([[2, 1], [1]]))
    assert CharacterTable.from_json(ch.to_json()) == ch
    assert (ch - ch).is_zero()


def test_codegree_identity(level):
    for alpha in blocks_upto(level, 5):
        df = defect(level, alpha)
        for lam in enumerate_multipartitions(level, alpha=alpha):
            for T in standard_tableaux(lam):
                assert -codegree(level, T) == degree(level, T) - df


def test_graded_dim_symmetry(level):
    for alpha in blocks_upto(level, 4):
        shift = 2 * defect(level, alpha)
        table = graded_dim_table(level, alpha)
        for (i, j), (first, second) in table.items():
            assert first == second
            assert first == table[(j, i)][1].bar().shift(shift)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(sorted(CONFIGS)))
def test_branching_identity(seed, name):
    L = CONFIGS[name]
    rng = random.Random(seed)
    lam = random_multipartition(rng, L.l, 6)
    if not lam.size:
        return
    i = rng.randrange(L.e) if L.e else rng.randint(-3, 4)
    lhs = branching_restrict(specht_character(L, lam), i, L)
    rhs = {}
    for A in lam.removable():
        if residue(L, A) == L.reduce(i):
            for s, p in specht_character(L, lam.remove_node(A)).rows.items():
                rhs[s] = rhs.get(s, LaurentPoly()) + p.shift(d_A(L, lam, A))
    assert lhs.rows == {s: p for s, p in rhs.items() if p}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(sorted(CONFIGS)))
def test_phi_minus_epsilon(seed, name):
    L = CONFIGS[name]
    rng = random.Random(seed)
    lam = random_multipartition(rng, L.l, 8)
    i = rng.randrange(L.e) if L.e else rng.randint(-4, 6)
    assert phi(L, lam, i) - epsilon(L, lam, i) == d_i(L, lam, i)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([(2, 2), (3, 2), (0, 2), (2, 3)]))
def test_twisted_stats_agree_when_separated(seed, shape):
    e, l = shape
    rng = random.Random(seed)
    height = 6
    gap = height + max(e, 1) + 1  # random jitter keeps every difference >= height + e
    L = LevelData(e, tuple(gap * (l - m) + rng.randint(0, 1) for m in range(l)))
    lam = random_multipartition(rng, l, height)
    for A in lam.removable():
        assert dtilde_A(L, lam, A) == d_A(L, lam, A)
    for B in lam.addable():
        assert dtilde_B(L, lam, B) == d_B(L, lam, B)


def test_content_of_characters(level):
    for lam in enumerate_multipartitions(level, height=4):
        ch = specht_character(level, lam)
        assert ch.content == content(level, lam)
        assert sum(p.at_one() for p in ch.rows.values()) == len(list(standard_tableaux(lam)))
