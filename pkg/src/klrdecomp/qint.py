"""Exact Laurent polynomials in ``q`` with integer coefficients.

Everything graded in this package (decomposition numbers, characters, Fock
space coefficients) is a :class:`LaurentPoly`.  Coefficients are Python ints,
so there is no overflow and no floating point anywhere.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from typing import Iterable, Mapping, Union


class NotDivisible(ArithmeticError):
    """Raised when an exact division in Z[q, q^-1] leaves a remainder."""


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable element of Z[q, q^-1].

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with no zero
    coefficients, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            items = [(0, coeffs)]
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc: dict[int, int] = {}
        for k, c in items:
            if c:
                acc[int(k)] = acc.get(int(k), 0) + int(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, int], ...]) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw(((exp, coeff),)) if coeff else ZERO

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exp: int) -> int:
        for k, c in self._terms:
            if k == exp:
                return c
        return 0

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def at_one(self) -> int:
        """Value at q = 1 (reporting helper only)."""
        return sum(c for _, c in self._terms)

    # -- ring structure -----------------------------------------------------

    @staticmethod
    def _coerce(other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._raw(((0, other),)) if other else ZERO
        return NotImplemented

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for k, c in other._terms:
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly._raw(tuple(sorted((k, c) for k, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(tuple((k, -c) for k, c in self._terms))

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            k2, c2 = other._terms[0]
            return LaurentPoly._raw(tuple((k + k2, c * c2) for k, c in self._terms))
        acc: dict[int, int] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly._raw(tuple(sorted((k, c) for k, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1 and self._terms[0][1] in (1, -1):
                k, c = self._terms[0]
                return LaurentPoly._raw(((k * n, c ** (-n)),))
            raise NotDivisible(f"{self} is not a unit")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1."""
        return LaurentPoly._raw(tuple((-k, c) for k, c in reversed(self._terms)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- predicates ----------------------------------------------------------

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def in_qZq(self) -> bool:
        return all(k >= 1 for k, _ in self._terms)

    def in_qinvZqinv(self) -> bool:
        return all(k <= -1 for k, _ in self._terms)

    def is_nonneg(self) -> bool:
        return all(c > 0 for _, c in self._terms)

    # -- text ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (k, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + f"q^{k}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in self._terms}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(k): int(v) for k, v in obj.items()})

    _TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; also accepts ``q`` for ``q^1``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        acc: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse {text!r} at offset {pos}")
            if pos and not m.group(1):
                raise ValueError(f"missing sign in {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if m.group(3):
                coeff = int(m.group(2)) if m.group(2) else 1
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                coeff, exp = int(m.group(2)), 0
            acc[exp] = acc.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(acc)


ZERO = LaurentPoly._raw(())
ONE = LaurentPoly._raw(((0, 1),))
q = LaurentPoly._raw(((1, 1),))


def arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


@lru_cache(maxsize=None)
def quantum_int(n: int) -> LaurentPoly:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n); negative n gives -[-n]."""
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly._raw(tuple((k, 1) for k in range(1 - n, n, 2)))


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_int(k)
    return result


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``a == b * c``; raise :class:`NotDivisible` otherwise.

    Long division from the top exponent.  Laurent units are handled because
    every step only ever divides leading coefficients.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    bt = b.terms()
    if len(bt) == 1:
        kb, cb = bt[0]
        out = []
        for k, c in a.terms():
            if c % cb:
                raise NotDivisible(f"{a} / {b}")
            out.append((k - kb, c // cb))
        return LaurentPoly._raw(tuple(out))
    b_top, b_lead = bt[-1]
    b_low = bt[0][0]
    rem = dict(a.terms())
    quot: dict[int, int] = {}
    a_low = a.min_exp
    while rem:
        top = max(rem)
        if top - b_top < a_low - b_low:
            raise NotDivisible(f"{a} / {b}")
        c = rem[top]
        if c % b_lead:
            raise NotDivisible(f"{a} / {b}")
        qc = c // b_lead
        shift = top - b_top
        quot[shift] = qc
        for k, cb in bt:
            v = rem.get(k + shift, 0) - qc * cb
            if v:
                rem[k + shift] = v
            else:
                rem.pop(k + shift, None)
    return LaurentPoly(quot)


def classify(a: LaurentPoly) -> dict[str, bool]:
    return {
        "bar_invariant": a.is_bar_invariant(),
        "in_qZq": a.in_qZq(),
        "in_qinvZqinv": a.in_qinvZqinv(),
        "nonneg": a.is_nonneg(),
    }


def bar_symmetric_head(c: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split ``c`` as ``beta + rem`` with ``beta`` bar-invariant, ``rem`` in q^-1 Z[q^-1].

    ``beta`` is built from the coefficients of q^k for k >= 0 only.
    """
    head = []
    for k, a in c.terms():
        if k == 0:
            head.append((0, a))
        elif k > 0:
            head.append((k, a))
            head.append((-k, a))
    beta = LaurentPoly(head)
    return beta, c - beta


def poly_dumps(p: LaurentPoly) -> str:
    return json.dumps(p.to_json(), sort_keys=False)
