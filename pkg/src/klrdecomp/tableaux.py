"""Standard tableaux, their degrees, graded Specht characters and graded dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .combinat import (
    RESIDUE_ORDER,
    ROW_ORDER,
    ContentVector,
    LevelData,
    Multipartition,
    Node,
    addable_removable,
    content,
    defect,
    enumerate_multipartitions,
    residue,
)
from .qint import ONE, ZERO, LaurentPoly


class BadNode(ValueError):
    """The node passed to a statistic is not removable/addable as required."""


@dataclass(frozen=True)
class StdTableau:
    """A standard tableau stored as the sequence of nodes holding 1, 2, ..., d."""

    shape: Multipartition
    path: tuple[Node, ...]

    @property
    def size(self) -> int:
        return len(self.path)

    def entry(self, node: Node) -> int:
        return self.path.index(node) + 1

    def restrict(self) -> "StdTableau":
        """Drop the largest entry."""
        last = self.path[-1]
        return StdTableau(self.shape.remove_node(last), self.path[:-1])

    def rows(self) -> list[list[list[int]]]:
        out = [[[0] * p for p in comp] for comp in self.shape]
        for r, (a, b, m) in enumerate(self.path, start=1):
            out[m - 1][a - 1][b - 1] = r
        return out

    def is_standard(self) -> bool:
        for comp in self.rows():
            for a, row in enumerate(comp):
                for b, x in enumerate(row):
                    if b and row[b - 1] >= x:
                        return False
                    if a and comp[a - 1][b] >= x:
                        return False
        return sorted(self.path) == sorted(self.shape.nodes())


@lru_cache(maxsize=None)
def _tableaux(shape: Multipartition) -> tuple[StdTableau, ...]:
    if shape.size == 0:
        return (StdTableau(shape, ()),)
    out = []
    for A in shape.removable():
        for t in _tableaux(shape.remove_node(A)):
            out.append(StdTableau(shape, t.path + (A,)))
    return tuple(out)


def standard_tableaux(lam: Multipartition) -> Iterator[StdTableau]:
    yield from _tableaux(Multipartition(lam))


# -- node statistics ----------------------------------------------------------


def _signed_counts(level: LevelData, lam: Multipartition, i: int, ordering: str, node: Node):
    """(signed count before ``node``, signed count after ``node``) in the ordering."""
    nodes = addable_removable(level, lam, i, ordering)
    before = after = 0
    seen = False
    for B, kind in nodes:
        if B == node:
            seen = True
            continue
        s = 1 if kind == "addable" else -1
        if seen:
            after += s
        else:
            before += s
    return before, after


def d_i(level: LevelData, lam: Multipartition, i: int) -> int:
    i = level.reduce(i)
    add = sum(1 for B in lam.addable() if residue(level, B) == i)
    rem = sum(1 for A in lam.removable() if residue(level, A) == i)
    return add - rem


def _check(lam: Multipartition, node: Node, kind: str) -> None:
    pool = lam.removable() if kind == "removable" else lam.addable()
    if node not in pool:
        raise BadNode(f"{tuple(node)} is not {kind} for {lam}")


def d_A(level: LevelData, lam: Multipartition, A: Node) -> int:
    """Addable minus removable i-nodes row-below the removable node A."""
    A = Node(*A)
    _check(lam, A, "removable")
    return _signed_counts(level, lam, residue(level, A), ROW_ORDER, A)[1]


def d_B(level: LevelData, lam: Multipartition, B: Node) -> int:
    """Addable minus removable i-nodes row-above the addable node B."""
    B = Node(*B)
    _check(lam, B, "addable")
    return _signed_counts(level, lam, residue(level, B), ROW_ORDER, B)[0]


def dtilde_A(level: LevelData, lam: Multipartition, A: Node) -> int:
    """As :func:`d_A` but counting nodes residue-below A."""
    A = Node(*A)
    _check(lam, A, "removable")
    return _signed_counts(level, lam, residue(level, A), RESIDUE_ORDER, A)[1]


def dtilde_B(level: LevelData, lam: Multipartition, B: Node) -> int:
    """As :func:`d_B` but counting nodes residue-above B."""
    B = Node(*B)
    _check(lam, B, "addable")
    return _signed_counts(level, lam, residue(level, B), RESIDUE_ORDER, B)[0]


_STATS = {"d_A": d_A, "d^B": d_B, "dt_A": dtilde_A, "dt^B": dtilde_B}


def node_stats(level: LevelData, lam: Multipartition, kind: str, arg) -> int:
    """Dispatch on ``kind`` in {"d_i", "d_A", "d^B", "dt_A", "dt^B"}.

    ``arg`` is a residue for ``d_i`` and a node otherwise.
    """
    if kind == "d_i":
        return d_i(level, lam, arg)
    try:
        fn = _STATS[kind]
    except KeyError:
        raise ValueError(f"unknown statistic {kind!r}") from None
    return fn(level, lam, arg)


# -- degrees ------------------------------------------------------------------


def degree(level: LevelData, T: StdTableau) -> int:
    deg = 0
    shape = Multipartition.empty(T.shape.l)
    for A in T.path:
        shape = shape.add_node(A)
        deg += d_A(level, shape, A)
    return deg


def codegree(level: LevelData, T: StdTableau) -> int:
    codeg = 0
    shape = Multipartition.empty(T.shape.l)
    for A in T.path:
        codeg += d_B(level, shape, A)
        shape = shape.add_node(A)
    return codeg


def residue_sequence(level: LevelData, T: StdTableau) -> tuple[int, ...]:
    return tuple(residue(level, A) for A in T.path)


# -- characters ---------------------------------------------------------------


class CharacterTable:
    """Formal sum of residue sequences with Laurent polynomial coefficients."""

    __slots__ = ("content", "rows")

    def __init__(self, content_vec: ContentVector, rows: Mapping[tuple[int, ...], LaurentPoly] = ()):
        self.content = content_vec
        items = rows.items() if isinstance(rows, Mapping) else rows
        self.rows: dict[tuple[int, ...], LaurentPoly] = {}
        for seq, p in items:
            if p:
                self.rows[tuple(seq)] = p

    def __getitem__(self, seq) -> LaurentPoly:
        return self.rows.get(tuple(seq), ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return self.content == other.content and self.rows == other.rows

    def __add__(self, other: "CharacterTable") -> "CharacterTable":
        acc = dict(self.rows)
        for seq, p in other.rows.items():
            acc[seq] = acc.get(seq, ZERO) + p
        return CharacterTable(self.content if self.rows or not other.rows else other.content, acc)

    def __sub__(self, other: "CharacterTable") -> "CharacterTable":
        return self + other.scale(-ONE)

    def scale(self, c: LaurentPoly) -> "CharacterTable":
        if not c:
            return CharacterTable(self.content)
        return CharacterTable(self.content, {s: p * c for s, p in self.rows.items()})

    def is_zero(self) -> bool:
        return not self.rows

    def __repr__(self) -> str:
        body = ", ".join(f"{s}: {p}" for s, p in sorted(self.rows.items()))
        return f"CharacterTable({{{body}}})"

    def to_json(self) -> dict:
        return {
            "content": self.content.to_json(),
            "rows": [{"seq": list(s), "poly": p.to_json()} for s, p in sorted(self.rows.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CharacterTable":
        return cls(
            ContentVector.from_json(obj["content"]),
            {tuple(r["seq"]): LaurentPoly.from_json(r["poly"]) for r in obj["rows"]},
        )


@lru_cache(maxsize=None)
def _specht(level: LevelData, lam: Multipartition) -> CharacterTable:
    acc: dict[tuple[int, ...], dict[int, int]] = {}
    for T in _tableaux(lam):
        seq = residue_sequence(level, T)
        row = acc.setdefault(seq, {})
        dg = degree(level, T)
        row[dg] = row.get(dg, 0) + 1
    return CharacterTable(content(level, lam), {s: LaurentPoly(d) for s, d in acc.items()})


def specht_character(level: LevelData, lam: Multipartition) -> CharacterTable:
    """Sum over standard tableaux T of q^deg(T) times the residue sequence of T."""
    return _specht(level, Multipartition(lam))


def branching_restrict(ch: CharacterTable, i: int, level: LevelData) -> CharacterTable:
    """Keep sequences ending in i and drop that last entry."""
    i = level.reduce(i)
    rows = {s[:-1]: p for s, p in ch.rows.items() if s and s[-1] == i}
    new_content = ch.content.add_root(i, -1) if rows else ch.content
    return CharacterTable(new_content, rows)


def graded_dim(
    level: LevelData, alpha: ContentVector, i, j
) -> tuple[LaurentPoly, LaurentPoly]:
    """Both expressions for qdim e(i) R e(j) as sums over pairs of tableaux of one shape."""
    i, j = tuple(i), tuple(j)
    shift = 2 * defect(level, alpha)
    first = second = ZERO
    for lam in enumerate_multipartitions(level, alpha=alpha):
        ch = specht_character(level, lam)
        a, b = ch[i], ch[j]
        if a and b:
            first = first + (a.bar() * b.bar()).shift(shift)
            second = second + a * b
    return first, second


def graded_dim_table(
    level: LevelData, alpha: ContentVector
) -> dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[LaurentPoly, LaurentPoly]]:
    """:func:`graded_dim` for every pair of sequences realized in the block."""
    shift = 2 * defect(level, alpha)
    table: dict = {}
    for lam in enumerate_multipartitions(level, alpha=alpha):
        rows = list(specht_character(level, lam).rows.items())
        bars = [(s, p.bar()) for s, p in rows]
        for (si, a), (_, abar) in zip(rows, bars):
            for (sj, b), (_, bbar) in zip(rows, bars):
                f, s = table.get((si, sj), (ZERO, ZERO))
                table[(si, sj)] = (f + (abar * bbar).shift(shift), s + a * b)
    return table


def graded_dim_total(level: LevelData, alpha: ContentVector) -> LaurentPoly:
    """qdim of the whole block: sum of the second expression over all pairs."""
    total = ZERO
    for lam in enumerate_multipartitions(level, alpha=alpha):
        s = ZERO
        for p in specht_character(level, lam).rows.values():
            s = s + p
        total = total + s * s
    return total
