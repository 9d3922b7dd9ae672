"""Kashiwara operators on multipartitions and the sets they generate."""

from __future__ import annotations

import enum
import json
import random
from functools import lru_cache
from typing import Iterable, Iterator

from .combinat import (
    RESIDUE_ORDER,
    ROW_ORDER,
    ROW_REVERSED,
    ContentVector,
    LevelData,
    Multipartition,
    Node,
    addable_removable,
    conjugate,
    content,
    multipartitions,
    residue,
)


class NotRestricted(ValueError):
    """The multipartition is not in the crystal component of the empty one."""


class PathDependent(AssertionError):
    """Two crystal paths to the same multipartition replayed to different images."""


class CrystalConvention(enum.Enum):
    STANDARD = "standard"  # row-above first
    PRIMED = "primed"      # row-below first
    TWISTED = "twisted"    # residue-above first

    @property
    def ordering(self) -> str:
        return {
            CrystalConvention.STANDARD: ROW_ORDER,
            CrystalConvention.PRIMED: ROW_REVERSED,
            CrystalConvention.TWISTED: RESIDUE_ORDER,
        }[self]


STANDARD = CrystalConvention.STANDARD
PRIMED = CrystalConvention.PRIMED
TWISTED = CrystalConvention.TWISTED


def reduced_signature(
    level: LevelData, lam: Multipartition, i: int, conv: CrystalConvention = STANDARD
) -> tuple[list[str], list[Node], int, int]:
    """Cancel adjacent (-, +) pairs until every + precedes every -."""
    stack: list[tuple[str, Node]] = []
    for node, kind in addable_removable(level, lam, i, conv.ordering):
        if kind == "addable" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append(("+" if kind == "addable" else "-", node))
    signs = [s for s, _ in stack]
    nodes = [n for _, n in stack]
    phi = signs.count("+")
    return signs, nodes, len(signs) - phi, phi


def epsilon(level, lam, i, conv=STANDARD) -> int:
    return reduced_signature(level, lam, i, conv)[2]


def phi(level, lam, i, conv=STANDARD) -> int:
    return reduced_signature(level, lam, i, conv)[3]


@lru_cache(maxsize=None)
def _f(level: LevelData, lam: Multipartition, i: int, conv: CrystalConvention):
    signs, nodes, eps, ph = reduced_signature(level, lam, i, conv)
    return lam.add_node(nodes[ph - 1]) if ph else None


@lru_cache(maxsize=None)
def _e(level: LevelData, lam: Multipartition, i: int, conv: CrystalConvention):
    signs, nodes, eps, ph = reduced_signature(level, lam, i, conv)
    return lam.remove_node(nodes[ph]) if eps else None


def crystal_f(level: LevelData, lam: Multipartition, i: int, conv: CrystalConvention = STANDARD):
    """Add the node under the rightmost + of the reduced i-signature, or None."""
    return _f(level, Multipartition(lam), level.reduce(i), conv)


def crystal_e(level: LevelData, lam: Multipartition, i: int, conv: CrystalConvention = STANDARD):
    """Remove the node under the leftmost - of the reduced i-signature, or None."""
    return _e(level, Multipartition(lam), level.reduce(i), conv)


def candidate_residues(level: LevelData, lam: Multipartition) -> list[int]:
    """Residues i for which f_i could act (those of addable nodes)."""
    if level.e:
        return list(range(level.e))
    return sorted({residue(level, B) for B in lam.addable()})


def removable_residues(level: LevelData, lam: Multipartition) -> list[int]:
    if level.e:
        return list(range(level.e))
    return sorted({residue(level, A) for A in lam.removable()})


@lru_cache(maxsize=None)
def _layers(level: LevelData, conv: CrystalConvention, d: int) -> tuple[frozenset, ...]:
    """Vertices of the component of the empty multipartition, by size 0..d."""
    if d == 0:
        return (frozenset([Multipartition.empty(level.l)]),)
    prev = _layers(level, conv, d - 1)
    nxt = set()
    for lam in prev[-1]:
        for i in candidate_residues(level, lam):
            mu = crystal_f(level, lam, i, conv)
            if mu is not None:
                nxt.add(mu)
    return prev + (frozenset(nxt),)


def restricted_of_size(level: LevelData, d: int, conv: CrystalConvention = STANDARD) -> list[Multipartition]:
    return sorted(_layers(level, conv, d)[d])


def restricted_set(
    level: LevelData, alpha: ContentVector, conv: CrystalConvention = STANDARD
) -> list[Multipartition]:
    """Component of the empty multipartition intersected with content alpha (lex-sorted)."""
    return _restricted(level, alpha, conv)


@lru_cache(maxsize=None)
def _restricted(level, alpha, conv):
    target = alpha.as_dict()
    frontier = {Multipartition.empty(level.l)}
    for _ in range(alpha.height):
        nxt = set()
        for lam in frontier:
            have = content(level, lam).as_dict()
            for i in candidate_residues(level, lam):
                if have.get(i, 0) >= target.get(i, 0):
                    continue
                mu = crystal_f(level, lam, i, conv)
                if mu is not None:
                    nxt.add(mu)
        frontier = nxt
    return sorted(lam for lam in frontier if content(level, lam) == alpha)


def crystal_string(level: LevelData, lam: Multipartition, policy: str = "smallest",
                   conv: CrystalConvention = STANDARD) -> list[tuple[int, int]]:
    """Strip ``lam`` to the empty multipartition by maximal e_i-strings.

    Returns the ``(i, m)`` pairs in the order they are *re-applied* from the
    empty multipartition.  ``policy`` picks the smallest or largest residue
    with epsilon_i > 0 at each step.
    """
    lam = Multipartition(lam)
    out = []
    while lam.size:
        eps = [(i, epsilon(level, lam, i, conv)) for i in removable_residues(level, lam)]
        eps = [(i, n) for i, n in eps if n > 0]
        if not eps:
            raise NotRestricted(f"{lam} has no crystal path to the empty multipartition")
        i, m = min(eps) if policy == "smallest" else max(eps)
        for _ in range(m):
            lam = crystal_e(level, lam, i, conv)
        out.append((i, m))
    out.reverse()
    return out


def _path(level: LevelData, lam: Multipartition, rng: random.Random | None = None) -> list[int]:
    lam = Multipartition(lam)
    seq = []
    while lam.size:
        opts = [i for i in removable_residues(level, lam) if epsilon(level, lam, i) > 0]
        if not opts:
            raise NotRestricted(f"{lam} has no crystal path to the empty multipartition")
        i = rng.choice(opts) if rng else opts[0]
        lam = crystal_e(level, lam, i)
        seq.append(i)
    seq.reverse()
    return seq


def _replay(level: LevelData, seq: Iterable[int], conv: CrystalConvention) -> Multipartition:
    lam = Multipartition.empty(level.l)
    for i in seq:
        nxt = crystal_f(level, lam, i, conv)
        if nxt is None:
            raise NotRestricted(f"f_{i} undefined on {lam} in the {conv.value} crystal")
        lam = nxt
    return lam


def prime_bijection(level: LevelData, lam: Multipartition, check_seed: int | None = 0) -> Multipartition:
    """The image of a restricted multipartition in the primed crystal.

    The deterministic path strips the smallest residue first.  With
    ``check_seed`` not None a second, randomized path is replayed and must
    land on the same multipartition.
    """
    result = _prime(level, Multipartition(lam))
    if check_seed is not None and lam:
        other = _replay(level, _path(level, lam, random.Random(check_seed)), PRIMED)
        if other != result:
            raise PathDependent(f"prime bijection is path dependent at {lam}: {result} vs {other}")
    return result


@lru_cache(maxsize=None)
def _prime(level: LevelData, lam: Multipartition) -> Multipartition:
    return _replay(level, _path(level, lam), PRIMED)


# -- closed-form descriptions used as cross-checks -----------------------------


def is_e_restricted(lam: Multipartition, e: int) -> bool:
    (p,) = lam
    parts = list(p) + [0]
    return all(parts[a] - parts[a + 1] < e for a in range(len(parts) - 1))


def is_interleaving(level: LevelData, lam: Multipartition) -> bool:
    """e = 0, k_1 >= ... >= k_l: lam^(m)_{a + k_m - k_{m+1}} <= lam^(m+1)_a."""
    k = level.multicharge

    def part(m, a):
        comp = lam[m]
        return comp[a - 1] if a <= len(comp) else 0

    for m in range(level.l - 1):
        shift = k[m] - k[m + 1]
        depth = max(len(lam[m]), len(lam[m + 1])) + 1
        for a in range(1, depth + 1):
            if part(m, a + shift) > part(m + 1, a):
                return False
    return True


def is_flotw(level: LevelData, lam: Multipartition) -> bool:
    """The elementary description of the twisted component for a conforming multicharge."""
    k, e, l = level.multicharge, level.e, level.l

    def part(m, a):
        comp = lam[m]
        return comp[a - 1] if a <= len(comp) else 0

    depth = max(len(c) for c in lam) + 1
    for m in range(l - 1):
        for a in range(1, depth + 1):
            if part(m, a) + k[m] - k[m + 1] < part(m + 1, a):
                return False
    if e > 0:
        for a in range(1, depth + 1):
            if part(l - 1, a) + e + k[l - 1] - k[0] < part(0, a):
                return False
        bottoms: dict[int, set[int]] = {}
        for m, comp in enumerate(lam, start=1):
            for b, length in enumerate(conjugate(comp), start=1):
                bottoms.setdefault(length, set()).add(residue(level, Node(length, b, m)))
        if any(len(res) == e for res in bottoms.values()):
            return False
    return True


def flotw_conforming(level: LevelData) -> bool:
    k = level.multicharge
    ordered = all(k[m] >= k[m + 1] for m in range(level.l - 1))
    return ordered and (level.e == 0 or k[-1] > k[0] - level.e)


# -- graph emission -------------------------------------------------------------


def crystal_edges(level: LevelData, max_size: int, conv: CrystalConvention = STANDARD):
    """Edges ``(lam, mu, i)`` with mu = f_i lam inside the component of the empty one."""
    layers = _layers(level, conv, max_size)
    edges = []
    for d in range(max_size):
        for lam in sorted(layers[d]):
            for i in candidate_residues(level, lam):
                mu = crystal_f(level, lam, i, conv)
                if mu is not None:
                    edges.append((lam, mu, i))
    return edges


def edges_to_json(edges) -> str:
    return json.dumps([{"from": a.to_json(), "to": b.to_json(), "i": i} for a, b, i in edges])


def edges_to_dot(edges, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    seen = set()
    for a, b, _ in edges:
        for v in (a, b):
            if v not in seen:
                seen.add(v)
                lines.append(f'  "{v}";')
    for a, b, i in edges:
        lines.append(f'  "{a}" -> "{b}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def all_multipartitions_upto(level: LevelData, d: int) -> Iterator[Multipartition]:
    for n in range(d + 1):
        yield from multipartitions(n, level.l)
