"""Canonical basis of the Fock space and the graded decomposition matrices it encodes.

The pipeline for one block is

1. for every restricted label, a bar-invariant monomial vector built from
   divided powers along a crystal string;
2. Gaussian reduction of those vectors against each other until the
   off-leading coefficients at computed labels lie in q^-1 Z[q^-1];
3. a rescaled read-off of the decomposition numbers;
4. inversion on the restricted columns to get irreducible characters.

Nothing here assumes the monomials are independent or triangular.  Failures
surface as :class:`RankDeficient` or :class:`TriangularityViolated`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

from .combinat import (
    ContentVector,
    LevelData,
    Multipartition,
    content,
    defect,
    dominance_leq,
    enumerate_multipartitions,
)
from .crystal import (
    NotRestricted,
    PathDependent,
    crystal_f,
    crystal_string,
    prime_bijection,
    restricted_set,
)
from .fock import FockVector, apply_word
from .qint import ONE, ZERO, LaurentPoly, bar_symmetric_head, quantum_factorial
from .tableaux import CharacterTable, specht_character

SMALLEST = "smallest"
LARGEST = "largest"


class RankDeficient(ArithmeticError):
    """A monomial vector reduced to zero."""


class TriangularityViolated(ArithmeticError):
    """A correction needed a canonical vector that has not been computed."""

    def __init__(self, message: str, vector: FockVector | None = None):
        super().__init__(message)
        self.vector = vector


class InvariantViolated(AssertionError):
    """An extracted decomposition matrix breaks one of its structural invariants."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


class NegativeCharacter(ArithmeticError):
    """An irreducible character came out with a negative coefficient."""


@dataclass(frozen=True)
class CanonicalVector:
    label: Multipartition
    vector: FockVector


@dataclass
class DecompMatrix:
    level: LevelData
    content: ContentVector
    rows: list[Multipartition]
    cols: list[Multipartition]
    entries: dict[tuple[Multipartition, Multipartition], LaurentPoly] = field(default_factory=dict)

    def __getitem__(self, key) -> LaurentPoly:
        lam, mu = key
        return self.entries.get((Multipartition(lam), Multipartition(mu)), ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecompMatrix):
            return NotImplemented
        return (self.level, self.content, self.rows, self.cols, self.entries) == (
            other.level, other.content, other.rows, other.cols, other.entries)

    def copy(self) -> "DecompMatrix":
        return DecompMatrix(self.level, self.content, list(self.rows), list(self.cols), dict(self.entries))

    def violations(self) -> list[dict]:
        """Every broken invariant, as small JSON-ready records."""
        bad = []
        for lam in self.rows:
            if self[lam, lam] != 1:
                bad.append({"check": "unitriangular", "row": lam.to_json(), "col": lam.to_json(),
                            "value": str(self[lam, lam])})
        for (lam, mu), p in sorted(self.entries.items()):
            where = {"row": lam.to_json(), "col": mu.to_json(), "value": str(p)}
            if lam != mu and not p.in_qZq():
                bad.append({"check": "off_diagonal_in_qZq", **where})
            if not dominance_leq(lam, mu):
                bad.append({"check": "dominance_support", **where})
            if not p.is_nonneg():
                bad.append({"check": "nonnegative", **where})
        return bad

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise InvariantViolated(f"{len(bad)} invariant violation(s), first: {bad[0]}", {"violations": bad})

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "level": self.level.to_json(),
            "content": self.content.to_json(),
            "rows": [r.to_json() for r in self.rows],
            "cols": [c.to_json() for c in self.cols],
            "entries": [[lam.to_json(), mu.to_json(), p.to_json()]
                        for (lam, mu), p in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "DecompMatrix":
        level = LevelData.from_json(obj["level"])
        return cls(
            level,
            ContentVector.from_json(obj["content"], e=level.e),
            [Multipartition.from_json(r) for r in obj["rows"]],
            [Multipartition.from_json(c) for c in obj["cols"]],
            {(Multipartition.from_json(a), Multipartition.from_json(b)): LaurentPoly.from_json(p)
             for a, b, p in obj["entries"]},
        )

    def to_text(self) -> str:
        head = ["", *map(str, self.rows)]
        body = [[str(mu), *(str(self[lam, mu]) if self[lam, mu] else "." for lam in self.rows)]
                for mu in self.cols]
        widths = [max(len(r[c]) for r in [head, *body]) for c in range(len(head))]
        fmt = lambda r: "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
        return "\n".join([f"block {self.content} (e={self.level.e}, multicharge={list(self.level.multicharge)})",
                          fmt(head), *map(fmt, body)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["col\\row", *map(str, self.rows)])
        for mu in self.cols:
            w.writerow([str(mu), *(str(self[lam, mu]) for lam in self.rows)])
        return buf.getvalue()


# -- monomials ------------------------------------------------------------------


def string_word(level: LevelData, lam: Multipartition, policy: str = SMALLEST) -> list[tuple[int, int]]:
    return crystal_string(level, Multipartition(lam), policy)


def monomial_vector(level: LevelData, lam: Multipartition, policy: str = SMALLEST) -> FockVector:
    """F_(j_n)^(m_n) ... F_(j_1)^(m_1) M_empty along the crystal string of ``lam``."""
    lam = Multipartition(lam)
    if lam.size and lam not in restricted_set(level, content(level, lam)):
        raise NotRestricted(f"{lam} is not restricted")
    return apply_word(FockVector.vacuum(level), string_word(level, lam, policy))


# -- reduction --------------------------------------------------------------------


def _reduce(v: FockVector, done: Mapping[Multipartition, FockVector]) -> FockVector:
    """Clear the lead if it is already taken, then push lower coefficients into q^-1 Z[q^-1]."""
    while v:
        lead = v.leading()
        if lead in done:
            c = v.terms[lead]
            if not c.is_bar_invariant():
                raise TriangularityViolated(f"coefficient {c} at taken label {lead} is not bar-invariant", v)
            v = v - done[lead].scale(c)
            continue
        target = None
        for mu in sorted(v.terms, reverse=True):
            if mu != lead and mu in done and not v.terms[mu].in_qinvZqinv():
                target = mu
                break
        if target is None:
            return v
        beta, _ = bar_symmetric_head(v.terms[target])
        v = v - done[target].scale(beta)
    return v


def canonical_basis(level: LevelData, alpha: ContentVector, policy: str = SMALLEST) -> list[CanonicalVector]:
    return list(_canonical(level, alpha, policy))


def _insert(v: FockVector, pivots: dict[Multipartition, FockVector]) -> FockVector:
    """Reduce ``v`` by the pivots; store it if its new lead has a unit coefficient.

    Returns the zero vector when ``v`` was absorbed, otherwise the reduced
    vector whose leading coefficient is not a unit (to be retried later).
    Only bar-invariant multiples are ever subtracted, so bar-invariance is kept.
    """
    while v:
        lead = v.leading()
        c = v.terms[lead]
        if lead in pivots:
            if not c.is_bar_invariant():
                raise TriangularityViolated(f"coefficient {c} at label {lead} is not bar-invariant", v)
            v = v - pivots[lead].scale(c)
            continue
        if c in (ONE, -ONE):
            pivots[lead] = v if c == ONE else -v
            return FockVector.zero(v.level, v.content)
        return v
    return v


def _echelon(vectors, pivots: dict[Multipartition, FockVector], stuck: list[FockVector]) -> None:
    """Echelon form by leading label, retrying non-unit leads until nothing moves."""
    stuck.extend(vectors)
    progress = True
    while stuck and progress:
        progress = False
        rest = []
        for v in stuck:
            w = _insert(v, pivots)
            if not w or w.leading() != v.leading() or w.terms != v.terms:
                progress = True
            if w:
                rest.append(w)
        stuck[:] = rest


@lru_cache(maxsize=None)
def _canonical(level: LevelData, alpha: ContentVector, policy: str) -> tuple[CanonicalVector, ...]:
    restricted = restricted_set(level, alpha)
    regular = {prime_bijection(level, lam) for lam in restricted}
    pivots: dict[Multipartition, FockVector] = {}
    stuck: list[FockVector] = []
    _echelon([monomial_vector(level, lam, policy) for lam in restricted], pivots, stuck)
    if len(pivots) < len(restricted):
        # fall back on the other string choice for the missing rank
        alt = LARGEST if policy == SMALLEST else SMALLEST
        _echelon([monomial_vector(level, lam, alt) for lam in restricted], pivots, stuck)
    if len(pivots) < len(restricted):
        if stuck:
            v = stuck[0]
            raise TriangularityViolated(
                f"leading coefficient {v.terms[v.leading()]} at {v.leading()} is not a unit", v)
        raise RankDeficient(f"monomials span rank {len(pivots)} < {len(restricted)} in block {alpha}")
    stray = sorted(set(pivots) - regular)
    if stray:
        raise TriangularityViolated(f"leading label {stray[0]} is not regular", pivots[stray[0]])
    done: dict[Multipartition, FockVector] = {}
    for lead in sorted(pivots):
        v = _reduce(pivots[lead], done)
        if not v or v.leading() != lead:
            raise TriangularityViolated(f"reduction moved the lead of {lead}", v)
        done[lead] = v
    return tuple(CanonicalVector(lab, done[lab]) for lab in sorted(done))


# -- decomposition matrices ------------------------------------------------------


def decomposition_matrix(level: LevelData, alpha: ContentVector, policy: str = SMALLEST,
                         check: bool = True) -> DecompMatrix:
    """d_(lam, mu) = q^def(alpha) times the coefficient of M_mu in the canonical vector of lam'."""
    rows = restricted_set(level, alpha)
    cols = list(enumerate_multipartitions(level, alpha=alpha))
    basis = {c.label: c.vector for c in canonical_basis(level, alpha, policy)}
    shift = defect(level, alpha)
    entries = {}
    for lam in rows:
        T = basis[prime_bijection(level, lam)]
        for mu, p in T.terms.items():
            entries[(lam, mu)] = p.shift(shift)
    d = DecompMatrix(level, alpha, rows, cols, entries)
    if check:
        d.check()
    return d


def invert_restricted(d: DecompMatrix) -> dict[tuple[Multipartition, Multipartition], LaurentPoly]:
    """Inverse of the restricted-column block, indexed (row, col) like ``d``.

    The block is upper unitriangular for lex order on rows (dominance refines
    lex), so back substitution works row by row.
    """
    labels = sorted(d.rows)
    inv: dict[tuple[Multipartition, Multipartition], LaurentPoly] = {}
    # solve X * D = I where D[a, b] = d[a, b]; X[a, b] nonzero only for a <= b
    for b in labels:
        for a in reversed([x for x in labels if x <= b]):
            if a == b:
                inv[(a, b)] = ONE
                continue
            s = ZERO
            for c in labels:
                if a < c <= b and (c, b) in inv:
                    s = s + d[a, c] * inv[(c, b)]
            if s:
                inv[(a, b)] = -s
    return inv


def irreducible_characters(level: LevelData, alpha: ContentVector,
                           d: DecompMatrix | None = None) -> dict[Multipartition, CharacterTable]:
    """Solve ch S(mu) = sum_lam d_(lam, mu) ch D(lam) on the restricted columns."""
    if d is None:
        d = decomposition_matrix(level, alpha)
    inv = invert_restricted(d)
    out = {}
    for lam in d.rows:
        ch = CharacterTable(alpha)
        for mu in d.rows:
            c = inv.get((mu, lam), ZERO)
            if c:
                ch = ch + specht_character(level, mu).scale(c)
        for seq, p in ch.rows.items():
            if not p.is_nonneg():
                raise NegativeCharacter(f"ch D{lam} has coefficient {p} at {seq}")
        out[lam] = ch
    return out


# -- extremal sequences --------------------------------------------------------


def _trailing_run(seq: tuple[int, ...]) -> tuple[int, int]:
    j = seq[-1]
    n = 0
    for x in reversed(seq):
        if x != j:
            break
        n += 1
    return n, j


def extremal_sequence(level: LevelData, c: CharacterTable):
    """Greedy longest trailing run, recursively; returns (seq, [(j, m)...], target)."""
    if c.is_zero():
        raise ValueError("extremal sequence of the zero character")
    pool = list(c.rows)
    runs: list[tuple[int, int]] = []
    length = len(pool[0])
    while length:
        best = min(((-n, j) for n, j in map(_trailing_run, pool)))
        n, j = -best[0], best[1]
        runs.append((j, n))
        pool = [s[:-n] for s in pool if _trailing_run(s) == (n, j)]
        length -= n
    runs.reverse()
    seq = tuple(j for j, m in runs for _ in range(m))
    target = Multipartition.empty(level.l)
    for i in seq:
        target = crystal_f(level, target, i)
        if target is None:
            break
    return seq, runs, target


def extremal_factor(runs) -> LaurentPoly:
    out = ONE
    for _, m in runs:
        out = out * quantum_factorial(m)
    return out


# -- verification ----------------------------------------------------------------


def verify_suite(level: LevelData, alpha: ContentVector,
                 corrupt: Callable[[DecompMatrix], DecompMatrix] | None = None,
                 seed: int = 0) -> dict:
    """Run every check on one block; failures are recorded, never raised.

    ``corrupt`` edits the matrix before the checks (negative controls).
    ``seed`` drives the randomized crystal path used to cross-check the
    prime bijection.
    """
    report: dict = {"level": level.to_json(), "content": alpha.to_json(), "checks": {}}
    checks = report["checks"]

    def record(name, failures):
        checks[name] = {"pass": not failures, "failures": failures[:5]}

    try:
        d = decomposition_matrix(level, alpha, check=False)
    except (RankDeficient, TriangularityViolated, NotRestricted) as exc:
        record("construction", [{"error": type(exc).__name__, "message": str(exc)}])
        report["pass"] = False
        return report
    if corrupt is not None:
        d = corrupt(d.copy())
    record("construction", [])
    record("invariants", d.violations())

    regular = {c.label for c in canonical_basis(level, alpha)}
    try:
        image = {prime_bijection(level, lam, check_seed=seed) for lam in d.rows}
        diff = [x.to_json() for x in sorted(regular ^ image)]
    except PathDependent as exc:
        diff = [{"message": str(exc)}]
    record("label_set", diff)

    try:
        alt = decomposition_matrix(level, alpha, policy=LARGEST, check=False)
        same = alt.entries == decomposition_matrix(level, alpha, check=False).entries
        record("determinism", [] if same else [{"message": "policies disagree"}])
    except (RankDeficient, TriangularityViolated) as exc:
        record("determinism", [{"error": type(exc).__name__, "message": str(exc)}])

    try:
        chars = irreducible_characters(level, alpha, d)
        neg = []
    except NegativeCharacter as exc:
        chars = None
        neg = [{"message": str(exc)}]
    if chars is None:
        inv = invert_restricted(d)
        chars = {}
        for lam in d.rows:
            ch = CharacterTable(alpha)
            for mu in d.rows:
                c = inv.get((mu, lam), ZERO)
                if c:
                    ch = ch + specht_character(level, mu).scale(c)
            chars[lam] = ch
    duality = [{"row": lam.to_json(), "seq": list(s), "value": str(p)}
               for lam, ch in chars.items() for s, p in ch.rows.items()
               if not (p.is_bar_invariant() and p.is_nonneg())]
    record("characters_nonnegative", neg + duality)

    columns = []
    for mu in d.cols:
        rhs = CharacterTable(alpha)
        for lam in d.rows:
            if d[lam, mu]:
                rhs = rhs + chars[lam].scale(d[lam, mu])
        if rhs.rows != specht_character(level, mu).rows:
            columns.append({"col": mu.to_json()})
    record("column_consistency", columns)

    extremal = []
    for lam, ch in chars.items():
        if ch.is_zero():
            extremal.append({"row": lam.to_json(), "message": "zero character"})
            continue
        seq, runs, target = extremal_sequence(level, ch)
        if ch[seq] != extremal_factor(runs) or target != lam:
            extremal.append({"row": lam.to_json(), "seq": list(seq), "target": target and target.to_json()})
    record("extremal", extremal)

    if defect(level, alpha) == 0:
        ident = [{"row": lam.to_json()} for lam in d.rows
                 if any(p for (r, mu), p in d.entries.items() if r == lam and mu != lam)]
        record("defect_zero_identity", ident)

    report["pass"] = all(c["pass"] for c in checks.values())
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
