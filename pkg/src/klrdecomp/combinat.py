"""Multipartition combinatorics: residues, contents, defect, orders, abacus.

Conventions
-----------
Nodes are 1-based triples ``(row, col, comp)``.  A multipartition is drawn as a
column of Young diagrams with component 1 on top, so "row-above" means a
smaller ``(comp, row)`` pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class EZero(ValueError):
    """The abacus map is only defined here for e > 0."""


class OddPairing(ArithmeticError):
    """(alpha, alpha) came out odd, which means the Cartan pairing is wrong."""


@dataclass(frozen=True)
class LevelData:
    """Quantum characteristic ``e`` and the integer multicharge."""

    e: int
    multicharge: tuple[int, ...]

    def __post_init__(self):
        if self.e < 0 or self.e == 1:
            raise ValueError(f"e must be 0 or >= 2, got {self.e}")
        mc = tuple(int(k) for k in self.multicharge)
        if not mc:
            raise ValueError("multicharge must have at least one entry")
        object.__setattr__(self, "multicharge", mc)

    @property
    def l(self) -> int:
        return len(self.multicharge)

    def reduce(self, i: int) -> int:
        return i % self.e if self.e else i

    @property
    def charges(self) -> tuple[int, ...]:
        """The k_m, i.e. the multicharge reduced mod e."""
        return tuple(self.reduce(k) for k in self.multicharge)

    def residues(self) -> list[int] | None:
        """The finite residue set, or None when e = 0 (I = Z)."""
        return list(range(self.e)) if self.e else None

    def cartan(self, i: int, j: int) -> int:
        i, j = self.reduce(i), self.reduce(j)
        if i == j:
            return 2
        e = self.e
        if e == 2:
            return -2
        if e == 0:
            return -1 if abs(i - j) == 1 else 0
        return -1 if (i - j) % e in (1, e - 1) else 0

    def lam_pairing(self, i: int) -> int:
        """(Lambda, alpha_i): how many k_m equal i."""
        i = self.reduce(i)
        return sum(1 for k in self.charges if k == i)

    def to_json(self) -> dict:
        return {"e": self.e, "multicharge": list(self.multicharge)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LevelData":
        return cls(int(obj["e"]), tuple(obj["multicharge"]))

    def transpose(self) -> "LevelData":
        """Level data for the transposed picture: negated, reversed multicharge."""
        return LevelData(self.e, tuple(-k for k in reversed(self.multicharge)))


class ContentVector:
    """Finitely supported map I -> Z_{>=0}; an element of Q_+."""

    __slots__ = ("counts", "_hash")

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = (), e: int | None = None):
        items = counts.items() if isinstance(counts, Mapping) else counts
        acc: dict[int, int] = {}
        for i, n in items:
            i = int(i)
            if e:
                i %= e
            if n < 0:
                raise ValueError("content counts must be nonnegative")
            if n:
                acc[i] = acc.get(i, 0) + int(n)
        self.counts = tuple(sorted(acc.items()))
        self._hash = hash(self.counts)

    @property
    def height(self) -> int:
        return sum(n for _, n in self.counts)

    def __getitem__(self, i: int) -> int:
        for k, n in self.counts:
            if k == i:
                return n
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def add_root(self, i: int, n: int = 1, e: int | None = None) -> "ContentVector":
        d = self.as_dict()
        if e:
            i %= e
        d[i] = d.get(i, 0) + n
        if d[i] < 0:
            raise ValueError("content would become negative")
        return ContentVector(d)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ContentVector) and self.counts == other.counts

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "ContentVector") -> bool:
        return self.counts < other.counts

    def __repr__(self) -> str:
        return f"ContentVector({self.as_dict()})"

    def __str__(self) -> str:
        if not self.counts:
            return "0"
        return " + ".join(f"{n}*a{i}" if n > 1 else f"a{i}" for i, n in self.counts)

    def to_json(self) -> dict[str, int]:
        return {str(i): n for i, n in self.counts}

    @classmethod
    def from_json(cls, obj: Mapping[str, int], e: int | None = None) -> "ContentVector":
        return cls({int(k): int(v) for k, v in obj.items()}, e=e)

    @classmethod
    def parse(cls, text: str, e: int | None = None) -> "ContentVector":
        """Parse ``"0:1,1:2"``; an empty string is the zero vector."""
        d: dict[int, int] = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            i, n = part.split(":")
            d[int(i)] = d.get(int(i), 0) + int(n)
        return cls(d, e=e)


class Node(NamedTuple):
    row: int
    col: int
    comp: int


class Multipartition(tuple):
    """An l-tuple of partitions, each a tuple of positive non-increasing ints.

    Python tuple comparison on this representation is exactly the
    lexicographic order on multipartitions (a missing part compares as 0).
    """

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = []
        for c in components:
            parts = tuple(int(x) for x in c if x)
            if any(p < 0 for p in parts):
                raise ValueError(f"negative part in {parts}")
            if any(parts[a] < parts[a + 1] for a in range(len(parts) - 1)):
                raise ValueError(f"{parts} is not a partition")
            comps.append(parts)
        return super().__new__(cls, comps)

    @classmethod
    def empty(cls, l: int) -> "Multipartition":
        return cls(() for _ in range(l))

    @property
    def l(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self)

    def nodes(self) -> Iterator[Node]:
        for m, comp in enumerate(self, start=1):
            for a, part in enumerate(comp, start=1):
                for b in range(1, part + 1):
                    yield Node(a, b, m)

    def __contains__(self, node: object) -> bool:
        if not isinstance(node, tuple) or len(node) != 3:
            return False
        a, b, m = node
        if not 1 <= m <= len(self):
            return False
        comp = self[m - 1]
        return 1 <= a <= len(comp) and 1 <= b <= comp[a - 1]

    def addable(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self, start=1):
            prev = None
            for a, part in enumerate(comp, start=1):
                if prev is None or part < prev:
                    out.append(Node(a, part + 1, m))
                prev = part
            out.append(Node(len(comp) + 1, 1, m))
        return out

    def removable(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self, start=1):
            for a, part in enumerate(comp, start=1):
                if a == len(comp) or comp[a] < part:
                    out.append(Node(a, part, m))
        return out

    def add_node(self, node: Node) -> "Multipartition":
        a, b, m = node
        comps = [list(c) for c in self]
        comp = comps[m - 1]
        if a == len(comp) + 1 and b == 1:
            comp.append(1)
        elif a <= len(comp) and comp[a - 1] == b - 1 and (a == 1 or comp[a - 2] >= b):
            comp[a - 1] = b
        else:
            raise ValueError(f"{node} is not addable for {self}")
        return Multipartition(comps)

    def remove_node(self, node: Node) -> "Multipartition":
        a, b, m = node
        comps = [list(c) for c in self]
        comp = comps[m - 1]
        if a <= len(comp) and comp[a - 1] == b and (a == len(comp) or comp[a] < b):
            comp[a - 1] -= 1
        else:
            raise ValueError(f"{node} is not removable for {self}")
        return Multipartition(comps)

    def __str__(self) -> str:
        return "(" + ", ".join(partition_str(c) for c in self) + ")"

    def __repr__(self) -> str:
        return f"Multipartition({[list(c) for c in self]})"

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self]

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[int]]) -> "Multipartition":
        return cls(obj)

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        return cls(json.loads(text))


def partition_str(parts: Sequence[int]) -> str:
    """Exponential notation, e.g. (1^3) or (11,7^2,5)."""
    if not parts:
        return "∅"
    out = []
    a = 0
    while a < len(parts):
        b = a
        while b < len(parts) and parts[b] == parts[a]:
            b += 1
        out.append(f"{parts[a]}^{b - a}" if b - a > 1 else str(parts[a]))
        a = b
    return "(" + ",".join(out) + ")"


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


# -- residues and contents ----------------------------------------------------


def residue_int(level: LevelData, node: Node) -> int:
    """Integer residue k~_m + b - a, before reduction."""
    a, b, m = node
    return level.multicharge[m - 1] + b - a


def residue(level: LevelData, node: Node) -> int:
    return level.reduce(residue_int(level, node))


def content(level: LevelData, lam: Multipartition) -> ContentVector:
    acc: dict[int, int] = {}
    for node in lam.nodes():
        i = residue(level, node)
        acc[i] = acc.get(i, 0) + 1
    return ContentVector(acc)


def component_content(level: LevelData, lam: Multipartition, m: int) -> ContentVector:
    acc: dict[int, int] = {}
    k = level.multicharge[m - 1]
    for a, part in enumerate(lam[m - 1], start=1):
        for b in range(1, part + 1):
            i = level.reduce(k + b - a)
            acc[i] = acc.get(i, 0) + 1
    return ContentVector(acc)


def defect(level: LevelData, alpha: ContentVector) -> int:
    """(Lambda, alpha) - (alpha, alpha)/2 with the symmetric Cartan pairing."""
    items = alpha.counts
    lam_alpha = sum(n * level.lam_pairing(i) for i, n in items)
    aa = 0
    for i, ni in items:
        for j, nj in items:
            aa += ni * nj * level.cartan(i, j)
    if aa % 2:
        raise OddPairing(f"(alpha, alpha) = {aa} for {alpha}")
    return lam_alpha - aa // 2


# -- enumeration --------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in lex-decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int, l: int) -> Iterator[tuple[int, ...]]:
    if l == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in compositions(n - k, l - 1):
            yield (k,) + rest


@lru_cache(maxsize=None)
def multipartitions(n: int, l: int) -> tuple[Multipartition, ...]:
    """All l-multipartitions of size n, lex-increasing."""
    out = []
    for sizes in compositions(n, l):
        for comps in product(*(partitions(s) for s in sizes)):
            out.append(Multipartition(comps))
    return tuple(sorted(out))


def enumerate_multipartitions(
    level: LevelData,
    height: int | None = None,
    alpha: ContentVector | None = None,
) -> list[Multipartition]:
    """Multipartitions of a given size, or of a given content (lex-increasing)."""
    if (height is None) == (alpha is None):
        raise ValueError("give exactly one of height or alpha")
    if alpha is not None:
        return list(_block(level, alpha))
    return list(multipartitions(height, level.l))


@lru_cache(maxsize=None)
def _block(level: LevelData, alpha: ContentVector) -> tuple[Multipartition, ...]:
    return tuple(lam for lam in multipartitions(alpha.height, level.l) if content(level, lam) == alpha)


def blocks_of_height(level: LevelData, d: int) -> list[ContentVector]:
    """Contents realized by multipartitions of size d, in a fixed order."""
    seen = {content(level, lam) for lam in multipartitions(d, level.l)}
    return sorted(seen)


# -- addable / removable i-nodes ---------------------------------------------

ROW_ORDER = "row"          # row-above first
ROW_REVERSED = "row_reversed"  # row-below first
RESIDUE_ORDER = "residue"  # residue-above first


def _node_key(level: LevelData, node: Node, ordering: str):
    if ordering == ROW_ORDER:
        return (node.comp, node.row)
    if ordering == ROW_REVERSED:
        return (-node.comp, -node.row)
    if ordering == RESIDUE_ORDER:
        return (-residue_int(level, node), -node.comp)
    raise ValueError(f"unknown ordering {ordering!r}")


def addable_removable(
    level: LevelData, lam: Multipartition, i: int, ordering: str = ROW_ORDER
) -> list[tuple[Node, str]]:
    """All addable/removable i-nodes of ``lam`` tagged ``"addable"``/``"removable"``."""
    i = level.reduce(i)
    out = [(B, "addable") for B in lam.addable() if residue(level, B) == i]
    out += [(A, "removable") for A in lam.removable() if residue(level, A) == i]
    out.sort(key=lambda t: _node_key(level, t[0], ordering))
    return out


def row_above(A: Node, B: Node) -> bool:
    return (A.comp, A.row) < (B.comp, B.row)


def residue_above(level: LevelData, A: Node, B: Node) -> bool:
    ra, rb = residue_int(level, A), residue_int(level, B)
    return ra > rb or (ra == rb and A.comp > B.comp)


# -- orders -------------------------------------------------------------------


def _partial_sums(lam: Multipartition, upto: int) -> list[int]:
    sums = []
    before = 0
    for comp in lam:
        run = before
        for c in range(upto):
            run += comp[c] if c < len(comp) else 0
            sums.append(run)
        before += sum(comp)
    return sums


def dominance_leq(mu: Multipartition, lam: Multipartition) -> bool:
    """mu ⊴ lam.  Different sizes are never comparable."""
    if mu.l != lam.l or mu.size != lam.size:
        return False
    width = max([len(c) for c in mu] + [len(c) for c in lam] + [1])
    return all(x <= y for x, y in zip(_partial_sums(mu, width), _partial_sums(lam, width)))


def partition_dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    return dominance_leq(Multipartition([mu]), Multipartition([lam]))


def lex_cmp(mu: Multipartition, lam: Multipartition) -> int:
    """-1, 0 or 1 as mu is lex-smaller, equal or lex-greater than lam."""
    return (mu > lam) - (mu < lam)


def transpose(lam: Multipartition) -> Multipartition:
    return Multipartition(conjugate(c) for c in reversed(lam))


def uglov_bar(level: LevelData, lam: Multipartition) -> tuple[int, ...]:
    """The partition whose (l, e)-quotient is ``lam``, read off the abacus."""
    e, l = level.e, level.l
    if e == 0:
        raise EZero("the abacus map needs e > 0")
    mc = level.multicharge
    spread = sum(abs(a - b) for a in mc for b in mc)
    window = lam.size + spread + e * l + 1

    def position(n: int, m: int) -> int:
        s, t = divmod(n - 1, e)
        return e * l * s + e * (m - 1) + t + 1

    beads = []
    highest_dropped = None
    for m, comp in enumerate(lam, start=1):
        k = mc[m - 1]
        depth = len(comp) + window
        for a in range(1, depth + 1):
            part = comp[a - 1] if a <= len(comp) else 0
            beads.append(position(k + part - a + 1, m))
        dropped = position(k - depth, m)
        highest_dropped = dropped if highest_dropped is None else max(highest_dropped, dropped)
    beads.sort(reverse=True)
    total = sum(mc)
    parts = []
    for b, p in enumerate(beads, start=1):
        part = p - total + b - 1
        if part <= 0:
            break
        parts.append(part)
    # the bead giving the first zero part, and all above it, must be exact
    if len(parts) >= len(beads) or beads[len(parts)] <= highest_dropped:
        raise RuntimeError("abacus window too small")  # pragma: no cover
    return tuple(parts)


def order_leq(level: LevelData, mu: Multipartition, lam: Multipartition) -> bool:
    """The order mu <= lam: content sums for e = 0, reversed dominance of bars for e > 0."""
    if mu == lam:
        return True
    if mu.l != lam.l or content(level, mu) != content(level, lam):
        return False
    if level.e == 0:
        acc_mu: dict[int, int] = {}
        acc_lam: dict[int, int] = {}
        for m in range(1, level.l + 1):
            for i, n in component_content(level, mu, m).counts:
                acc_mu[i] = acc_mu.get(i, 0) + n
            for i, n in component_content(level, lam, m).counts:
                acc_lam[i] = acc_lam.get(i, 0) + n
            if any(acc_mu.get(i, 0) > acc_lam.get(i, 0) for i in acc_mu):
                return False
        return acc_mu == acc_lam
    return partition_dominance_leq(uglov_bar(level, lam), uglov_bar(level, mu))
