import json
import random

import pytest

from klrdecomp.combinat import ContentVector, LevelData, Multipartition, content, multipartitions
from klrdecomp.crystal import (
    PRIMED,
    STANDARD,
    TWISTED,
    NotRestricted,
    crystal_e,
    crystal_edges,
    crystal_f,
    crystal_string,
    edges_to_dot,
    edges_to_json,
    flotw_conforming,
    is_e_restricted,
    is_flotw,
    is_interleaving,
    prime_bijection,
    reduced_signature,
    restricted_of_size,
    restricted_set,
)

from conftest import CONFIGS, random_multipartition

MP = Multipartition
E2 = LevelData(2, (0,))
TWO_L0 = LevelData(2, (2, 0))


def test_signature_examples():
    signs, nodes, eps, phi = reduced_signature(TWO_L0, MP([[], []]), 0)
    assert signs == ["+", "+"] and (eps, phi) == (0, 2)
    assert reduced_signature(E2, MP([[1, 1]]), 1)[2] == 1
    assert reduced_signature(LevelData(3, (0,)), MP([[]]), 2)[2:] == (0, 0)


def test_operator_examples():
    assert crystal_f(TWO_L0, MP([[], []]), 0) == MP([[], [1]])
    assert crystal_e(E2, MP([[1, 1]]), 1) == MP([[1]])
    for i in range(2):
        assert crystal_e(E2, MP([[]]), i) is None
    assert crystal_f(E2, MP([[1]]), 1, PRIMED) == MP([[2]])
    assert crystal_f(E2, MP([[1]]), 1, STANDARD) == MP([[1, 1]])


def test_restricted_examples():
    assert restricted_set(E2, ContentVector()) == [MP([[]])]
    assert restricted_set(E2, ContentVector({0: 1, 1: 1})) == [MP([[1, 1]])]
    assert restricted_set(TWO_L0, ContentVector({0: 1})) == [MP([[], [1]])]


def test_prime_examples():
    assert prime_bijection(E2, MP([[]])) == MP([[]])
    assert prime_bijection(E2, MP([[1, 1]])) == MP([[2]])
    assert prime_bijection(TWO_L0, MP([[], [1]])) == MP([[1], []])
    with pytest.raises(NotRestricted):
        prime_bijection(E2, MP([[2]]))


def test_string_requires_restricted():
    with pytest.raises(NotRestricted):
        crystal_string(E2, MP([[3]]))


@pytest.mark.parametrize("conv", [STANDARD, PRIMED, TWISTED])
def test_e_and_f_are_inverse(level, conv):
    rng = random.Random(7)
    for _ in range(300):
        lam = random_multipartition(rng, level.l, 7)
        i = rng.randrange(level.e) if level.e else rng.randint(-3, 5)
        mu = crystal_f(level, lam, i, conv)
        if mu is not None:
            assert crystal_e(level, mu, i, conv) == lam
        nu = crystal_e(level, lam, i, conv)
        if nu is not None:
            assert crystal_f(level, nu, i, conv) == lam


def test_prime_is_content_preserving_bijection(level):
    for d in range(6):
        for alpha in {content(level, lam) for lam in restricted_of_size(level, d)}:
            rows = restricted_set(level, alpha)
            image = [prime_bijection(level, lam, check_seed=d) for lam in rows]
            assert len(set(image)) == len(rows)
            assert all(content(level, mu) == alpha for mu in image)
            assert sorted(image) == restricted_set(level, alpha, PRIMED)


def test_closed_forms_small():
    L = LevelData(3, (0,))
    for d in range(7):
        assert restricted_of_size(L, d) == sorted(m for m in multipartitions(d, 1) if is_e_restricted(m, 3))
    L = LevelData(0, (3, 1))
    for d in range(6):
        assert restricted_of_size(L, d) == sorted(m for m in multipartitions(d, 2) if is_interleaving(L, m))
    L = LevelData(3, (2, 1, 0))
    assert flotw_conforming(L)
    for d in range(5):
        assert restricted_of_size(L, d, TWISTED) == sorted(m for m in multipartitions(d, 3) if is_flotw(L, m))
    assert not flotw_conforming(LevelData(3, (4, 0)))


def test_graph_emission():
    edges = crystal_edges(E2, 2)
    assert [(str(a), str(b), i) for a, b, i in edges] == [("(∅)", "((1))", 0), ("((1))", "((1^2))", 1)]
    obj = json.loads(edges_to_json(edges))
    assert obj[0] == {"from": [[]], "to": [[1]], "i": 0}
    dot = edges_to_dot(edges)
    assert dot.startswith("digraph") and '"((1))" -> "((1^2))" [label="1"];' in dot


def test_restricted_sizes_agree_with_blocks():
    for name, L in CONFIGS.items():
        for d in range(5):
            by_size = restricted_of_size(L, d)
            by_block = sorted(lam for a in {content(L, x) for x in by_size} for lam in restricted_set(L, a))
            assert by_size == by_block, name
