import random

import pytest

from klrdecomp.combinat import LevelData, Multipartition, blocks_of_height, content, enumerate_multipartitions

# (e, l) pairs named in the acceptance criteria, each with a representative multicharge
CONFIGS = {
    "e2l1": LevelData(2, (0,)),
    "e3l1": LevelData(3, (0,)),
    "e2l2": LevelData(2, (0, 1)),
    "e0l2": LevelData(0, (2, 0)),
}

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def blocks_upto(level, h):
    for d in range(h + 1):
        yield from blocks_of_height(level, d)


def random_multipartition(rng: random.Random, l: int, max_size: int) -> Multipartition:
    comps = []
    budget = rng.randint(0, max_size)
    for _ in range(l):
        n = rng.randint(0, budget)
        budget -= n
        parts = []
        while n:
            p = rng.randint(1, min(n, parts[-1] if parts else n))
            parts.append(p)
            n -= p
        comps.append(parts)
    rng.shuffle(comps)
    return Multipartition(comps)


def random_same_content_pair(rng: random.Random, level: LevelData, max_size: int):
    while True:
        lam = random_multipartition(rng, level.l, max_size)
        block = enumerate_multipartitions(level, alpha=content(level, lam))
        if len(block) > 1:
            return rng.choice(block), rng.choice(block)


@pytest.fixture(params=sorted(CONFIGS), ids=sorted(CONFIGS))
def level(request):
    return CONFIGS[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
