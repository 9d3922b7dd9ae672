"""Sparse Fock-space vectors and the Chevalley generators acting on them."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .combinat import ContentVector, LevelData, Multipartition, content, residue
from .qint import ZERO, LaurentPoly, exact_divide, quantum_factorial
from .tableaux import d_A, d_B, d_i, dtilde_A, dtilde_B


class FockVector:
    """Homogeneous element of the Fock space: a map multipartition -> Laurent polynomial."""

    __slots__ = ("level", "content", "terms")

    def __init__(self, level: LevelData, content_vec: ContentVector,
                 terms: Mapping[Multipartition, LaurentPoly] | Iterable = ()):
        self.level = level
        self.content = content_vec
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[Multipartition, LaurentPoly] = {}
        for lam, p in items:
            if p:
                self.terms[Multipartition(lam)] = p

    @classmethod
    def basis(cls, level: LevelData, lam: Multipartition) -> "FockVector":
        lam = Multipartition(lam)
        return cls(level, content(level, lam), {lam: LaurentPoly(1)})

    @classmethod
    def vacuum(cls, level: LevelData) -> "FockVector":
        return cls.basis(level, Multipartition.empty(level.l))

    @classmethod
    def zero(cls, level: LevelData, content_vec: ContentVector) -> "FockVector":
        return cls(level, content_vec)

    def __getitem__(self, lam) -> LaurentPoly:
        return self.terms.get(Multipartition(lam), ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Multipartition]:
        return sorted(self.terms)

    def leading(self) -> Multipartition:
        """The lex-greatest multipartition in the support."""
        if not self.terms:
            raise ValueError("the zero vector has no leading term")
        return max(self.terms)

    def _same_block(self, other: "FockVector") -> None:
        if self.level != other.level or self.content != other.content:
            raise TypeError("Fock vectors of different level or content cannot be combined")

    def __add__(self, other: "FockVector") -> "FockVector":
        # zero lies in every weight space
        if not other.terms:
            return self
        if not self.terms:
            return other
        self._same_block(other)
        acc = dict(self.terms)
        for lam, p in other.terms.items():
            acc[lam] = acc.get(lam, ZERO) + p
        return FockVector(self.level, self.content, acc)

    def __neg__(self) -> "FockVector":
        return self.scale(LaurentPoly(-1))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "FockVector":
        c = LaurentPoly(c) if isinstance(c, int) else c
        return FockVector(self.level, self.content, {lam: p * c for lam, p in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.level, self.content, self.terms) == (other.level, other.content, other.terms)

    def __repr__(self) -> str:
        return f"FockVector({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms, reverse=True):
            p = self.terms[lam]
            coef = "" if p == 1 else f"({p})"
            parts.append(f"{coef}M{lam}")
        return " + ".join(parts)

    def to_json(self, with_level: bool = False) -> dict:
        obj = {
            "content": self.content.to_json(),
            "terms": [{"mp": lam.to_json(), "poly": self.terms[lam].to_json()} for lam in sorted(self.terms)],
        }
        if with_level:
            obj["level"] = self.level.to_json()
        return obj

    @classmethod
    def from_json(cls, obj: Mapping, level: LevelData | None = None) -> "FockVector":
        if level is None:
            level = LevelData.from_json(obj["level"])
        return cls(
            level,
            ContentVector.from_json(obj["content"], e=level.e),
            {Multipartition.from_json(t["mp"]): LaurentPoly.from_json(t["poly"]) for t in obj["terms"]},
        )


# -- action on basis vectors ----------------------------------------------------


@lru_cache(maxsize=None)
def _f_basis(level: LevelData, lam: Multipartition, i: int, twisted: bool):
    stat = dtilde_B if twisted else d_B
    return tuple((lam.add_node(B), -stat(level, lam, B))
                 for B in lam.addable() if residue(level, B) == i)


@lru_cache(maxsize=None)
def _e_basis(level: LevelData, lam: Multipartition, i: int, twisted: bool):
    stat = dtilde_A if twisted else d_A
    return tuple((lam.remove_node(A), stat(level, lam, A))
                 for A in lam.removable() if residue(level, A) == i)


def _act(v: FockVector, i: int, table, sign: int, twisted: bool) -> FockVector:
    level = v.level
    i = level.reduce(i)
    acc: dict[Multipartition, LaurentPoly] = {}
    for lam, p in v.terms.items():
        for mu, k in table(level, lam, i, twisted):
            acc[mu] = acc.get(mu, ZERO) + p.shift(k)
    try:
        new_content = v.content.add_root(i, sign, level.e)
    except ValueError:
        # E_i on a vector with no i-nodes: the result is zero
        new_content = v.content
    return FockVector(level, new_content, acc)


def apply_F(v: FockVector, i: int) -> FockVector:
    """F_i M_lam = sum over addable i-nodes B of q^(-d^B) M_(lam + B)."""
    return _act(v, i, _f_basis, 1, False)


def apply_E(v: FockVector, i: int) -> FockVector:
    """E_i M_lam = sum over removable i-nodes A of q^(d_A) M_(lam - A)."""
    return _act(v, i, _e_basis, -1, False)


def apply_K(v: FockVector, i: int) -> FockVector:
    level = v.level
    return FockVector(level, v.content,
                      {lam: p.shift(d_i(level, lam, i)) for lam, p in v.terms.items()})


def _divided(v: FockVector, i: int, n: int, step) -> FockVector:
    if n < 1:
        raise ValueError("divided powers need n >= 1")
    for _ in range(n):
        v = step(v, i)
    if n == 1:
        return v
    fact = quantum_factorial(n)
    return FockVector(v.level, v.content, {lam: exact_divide(p, fact) for lam, p in v.terms.items()})


def apply_F_divided(v: FockVector, i: int, n: int) -> FockVector:
    return _divided(v, i, n, apply_F)


def apply_E_divided(v: FockVector, i: int, n: int) -> FockVector:
    return _divided(v, i, n, apply_E)


def apply_twisted(v: FockVector, i: int, direction: str) -> FockVector:
    """The action built from the residue-ordered statistics; ``direction`` is "E" or "F"."""
    if direction == "F":
        return _act(v, i, _f_basis, 1, True)
    if direction == "E":
        return _act(v, i, _e_basis, -1, True)
    raise ValueError(f"direction must be 'E' or 'F', not {direction!r}")


def apply_word(v: FockVector, word: Iterable[tuple[int, int]]) -> FockVector:
    """Apply F_(j)^(m) for each ``(j, m)`` in order, first pair first."""
    for j, m in word:
        v = apply_F_divided(v, j, m)
    return v
